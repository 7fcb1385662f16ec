#include "renner/oracle.hpp"

#include "renner/chains.hpp"

namespace renner::oracle {

namespace {

bool subsequence_search(const CoxeterSystem& sys, const Word& target, const Word& big,
                        size_t pos, Elt acc) {
  if (acc.length() > static_cast<int>(target.size())) return false;
  if (acc.word() == target) return true;
  if (pos == big.size()) return false;
  // remaining letters cannot reach the target length
  if (acc.length() + static_cast<int>(big.size() - pos) < static_cast<int>(target.size()))
    return false;
  if (subsequence_search(sys, target, big, pos + 1, acc)) return true;  // skip big[pos]
  return subsequence_search(sys, target, big, pos + 1, sys.multiply_gen(acc, big[pos]));
}

}  // namespace

bool bruhat_leq_subword(const CoxeterSystem& sys, const Elt& u, const Elt& v) {
  if (u.is_identity()) return true;
  return subsequence_search(sys, u.word(), v.word(), 0, sys.identity());
}

bool ext_leq_exhaustive(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                        SignPair sign, int witness_cap) {
  ctx.require_same_context(x);
  ctx.require_same_context(y);
  const CoxeterSystem& sys = ctx.system();
  std::vector<Elt> wits = sys.enumerate(ctx.N_minus_C(), witness_cap);
  for (const Elt& u : wits) {
    bool a_ok = (sign.delta > 0)
                    ? sys.bruhat_leq(sys.multiply(x.a(), sys.inverse(u)), y.a())
                    : sys.bruhat_leq(sys.multiply(y.a(), u), x.a());
    if (!a_ok) continue;
    for (const Elt& v : wits) {
      bool b_ok = (sign.epsilon > 0)
                      ? sys.bruhat_leq(sys.multiply(v, y.b()), x.b())
                      : sys.bruhat_leq(sys.multiply(sys.inverse(v), x.b()), y.b());
      if (!b_ok) continue;
      Elt mid = sys.multiply(sys.inverse(u), sys.multiply(y.c(), sys.inverse(v)));
      if (sys.bruhat_leq(x.c(), mid)) return true;
    }
  }
  return false;
}

int ClosureTable::index_of(const OrbitElt& x) const {
  for (size_t i = 0; i < slice.size(); ++i)
    if (slice[i] == x) return static_cast<int>(i);
  return -1;
}

ClosureTable ext_leq_closure(const OrbitContext& ctx, const std::vector<OrbitElt>& slice,
                             SignPair sign) {
  ClosureTable table;
  table.slice = slice;
  size_t n = slice.size();
  table.reachable.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) table.reachable[i][i] = true;
  for (const chains::ElemEdge& e : chains::elem_relations_within(ctx, slice, sign)) {
    int i = table.index_of(e.lo), j = table.index_of(e.hi);
    table.reachable[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  }
  // Floyd-Warshall
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) {
      if (!table.reachable[i][k]) continue;
      for (size_t j = 0; j < n; ++j)
        if (table.reachable[k][j]) table.reachable[i][j] = true;
    }
  return table;
}

}  // namespace renner::oracle
