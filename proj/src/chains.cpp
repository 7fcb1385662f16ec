#include "renner/chains.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace renner::chains {

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::er1: return "er1";
    case EdgeKind::er2: return "er2";
    case EdgeKind::er3: return "er3";
  }
  return "?";
}

namespace {

// Emit the elementary relations written at x, i.e. with x as the normal form
// whose factor the reflection shortens. want_down selects the ones with
// hi = x.
void anchored_moves(const OrbitContext& ctx, const OrbitElt& x, SignPair sign, bool want_down,
                    std::vector<ElemEdge>* out) {
  const CoxeterSystem& sys = ctx.system();
  bool er1_down = sign.delta > 0;
  if (er1_down == want_down) {
    Elt ac = sys.multiply(x.a(), x.c());
    for (const Reflection& t : sys.inversions(x.a(), Side::left)) {
      OrbitElt other = ctx.canonicalize(sys.multiply(t.elt(), ac), x.b());
      if (other == x) throw InternalError("er1 relation degenerated to equality");
      if (er1_down)
        out->push_back({other, x, EdgeKind::er1, t, sign});
      else
        out->push_back({x, other, EdgeKind::er1, t, sign});
    }
  }
  if (want_down) {
    for (const Reflection& t : sys.inversions(x.c(), Side::left)) {
      OrbitElt lower = ctx.make(x.a(), sys.multiply(t.elt(), x.c()), x.b());
      out->push_back({lower, x, EdgeKind::er2, t, sign});
    }
  }
  bool er3_down = sign.epsilon < 0;
  if (er3_down == want_down) {
    Elt ac = sys.multiply(x.a(), x.c());
    for (const Reflection& t : sys.inversions(x.b(), Side::right)) {
      OrbitElt other = ctx.canonicalize(ac, sys.multiply(x.b(), t.elt()));
      if (other == x) throw InternalError("er3 relation degenerated to equality");
      if (er3_down)
        out->push_back({other, x, EdgeKind::er3, t, sign});
      else
        out->push_back({x, other, EdgeKind::er3, t, sign});
    }
  }
}

bool edge_order(const ElemEdge& a, const ElemEdge& b) {
  if (a.lo != b.lo) return orbit_less(a.lo, b.lo);
  if (a.hi != b.hi) return orbit_less(a.hi, b.hi);
  if (a.kind != b.kind) return a.kind < b.kind;
  return shortlex_less(a.t.elt(), b.t.elt());
}

}  // namespace

std::vector<ElemEdge> elem_down(const OrbitContext& ctx, const OrbitElt& x, SignPair sign) {
  ctx.require_same_context(x);
  std::vector<ElemEdge> out;
  anchored_moves(ctx, x, sign, /*want_down=*/true, &out);
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

std::vector<ElemEdge> elem_up_anchored(const OrbitContext& ctx, const OrbitElt& x,
                                       SignPair sign) {
  ctx.require_same_context(x);
  std::vector<ElemEdge> out;
  anchored_moves(ctx, x, sign, /*want_down=*/false, &out);
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

std::vector<ElemEdge> elem_up_within(const OrbitContext& ctx, const OrbitElt& x, SignPair sign,
                                     const std::vector<OrbitElt>& slice) {
  ctx.require_same_context(x);
  std::vector<ElemEdge> out;
  auto in_slice = [&slice](const OrbitElt& z) {
    return std::find(slice.begin(), slice.end(), z) != slice.end();
  };
  for (const ElemEdge& e : elem_up_anchored(ctx, x, sign))
    if (in_slice(e.hi)) out.push_back(e);
  for (const OrbitElt& z : slice)
    for (const ElemEdge& e : elem_down(ctx, z, sign))
      if (e.lo == x) out.push_back(e);
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

std::vector<ElemEdge> elem_relations_within(const OrbitContext& ctx,
                                            const std::vector<OrbitElt>& slice, SignPair sign) {
  std::map<OrbitElt, int, OrbitLess> index;
  for (size_t i = 0; i < slice.size(); ++i) index.emplace(slice[i], static_cast<int>(i));
  std::vector<ElemEdge> out;
  for (const OrbitElt& z : slice) {
    std::vector<ElemEdge> moves;
    anchored_moves(ctx, z, sign, true, &moves);
    anchored_moves(ctx, z, sign, false, &moves);
    for (ElemEdge& e : moves)
      if (index.count(e.lo) && index.count(e.hi)) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), edge_order);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ElemEdge& a, const ElemEdge& b) {
                          return a.lo == b.lo && a.hi == b.hi && a.kind == b.kind && a.t == b.t;
                        }),
            out.end());
  return out;
}

int CoverGraph::index_of(const OrbitElt& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

CoverGraph interval(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                    SignPair sign, int cap, int jobs) {
  ctx.require_same_context(x);
  ctx.require_same_context(y);
  if (!ctx.ext_leq(x, y, sign))
    throw NotComparableError("interval: " + ctx.format_orbit(x) + " is not <=_" +
                             format_sign(sign) + " " + ctx.format_orbit(y));
  const CoxeterSystem& sys = ctx.system();

  // Componentwise windows for any z in [x,y]: the a- and b-lengths are pinned
  // between the endpoint values by the length-additive side conditions, and
  // l(c_z) is pinned by the extended-length window.
  int la_lo = std::min(x.a().length(), y.a().length());
  int la_hi = std::max(x.a().length(), y.a().length());
  int lb_lo = std::min(x.b().length(), y.b().length());
  int lb_hi = std::max(x.b().length(), y.b().length());
  int lx = ctx.ext_length(x, sign), ly = ctx.ext_length(y, sign);
  int c_cap = ly + x.c().length() - lx;

  int needed = std::max({la_hi, lb_hi, c_cap});
  if (needed > cap)
    throw CapExceededError("interval: derived component bound " + std::to_string(needed) +
                               " exceeds cap " + std::to_string(cap),
                           needed, cap);

  GenSet all = sys.all_generators();
  std::vector<Elt> as = sys.enumerate(all, la_hi, EnumConstraint::min_coset_left(ctx.N()));
  std::vector<Elt> bs = sys.enumerate(all, lb_hi, EnumConstraint::min_coset_right(ctx.N()));
  std::vector<Elt> cs = sys.enumerate(ctx.N_minus_C(), std::max(c_cap, 0));

  std::vector<OrbitElt> cands;
  for (const Elt& a : as) {
    if (a.length() < la_lo) continue;
    for (const Elt& b : bs) {
      if (b.length() < lb_lo) continue;
      int base = sign.delta * a.length() - sign.epsilon * b.length();
      for (const Elt& c : cs) {
        int len = base + c.length();
        if (len < lx || len > ly) continue;
        cands.push_back(ctx.make(a, c, b));
      }
    }
  }

  std::vector<char> keep(cands.size(), 0);
  auto filter = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      keep[i] = ctx.ext_leq(x, cands[i], sign) && ctx.ext_leq(cands[i], y, sign);
  };
  if (jobs <= 1 || cands.size() < 64) {
    filter(0, cands.size());
  } else {
    size_t n = cands.size();
    size_t nw = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::vector<std::thread> workers;
    size_t chunk = (n + nw - 1) / nw;
    for (size_t w = 0; w < nw; ++w) {
      size_t b = w * chunk, e = std::min(n, b + chunk);
      if (b < e) workers.emplace_back(filter, b, e);
    }
    for (auto& t : workers) t.join();
  }

  CoverGraph g;
  g.sign = sign;
  for (size_t i = 0; i < cands.size(); ++i)
    if (keep[i]) g.vertices.push_back(cands[i]);
  std::sort(g.vertices.begin(), g.vertices.end(), [&](const OrbitElt& p, const OrbitElt& q) {
    int lp = ctx.ext_length(p, sign), lq = ctx.ext_length(q, sign);
    if (lp != lq) return lp < lq;
    return orbit_less(p, q);
  });
  g.grade.reserve(g.vertices.size());
  for (const OrbitElt& v : g.vertices) g.grade.push_back(ctx.ext_length(v, sign));

  std::map<OrbitElt, int, OrbitLess> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], static_cast<int>(i));

  std::vector<ElemEdge> covers;
  for (const OrbitElt& v : g.vertices) {
    std::vector<ElemEdge> moves;
    anchored_moves(ctx, v, sign, true, &moves);
    anchored_moves(ctx, v, sign, false, &moves);
    for (ElemEdge& e : moves) {
      auto ilo = index.find(e.lo), ihi = index.find(e.hi);
      if (ilo == index.end() || ihi == index.end()) continue;
      if (g.grade[ihi->second] - g.grade[ilo->second] != 1) continue;
      covers.push_back(std::move(e));
    }
  }
  std::sort(covers.begin(), covers.end(), edge_order);
  for (ElemEdge& e : covers) {
    if (!g.edges.empty() && g.edges.back().lo == e.lo && g.edges.back().hi == e.hi) continue;
    g.edges.push_back(std::move(e));  // one edge per cover pair
  }
  return g;
}

ChainList maximal_chains(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                         SignPair sign, int cap, std::size_t max_count) {
  CoverGraph g = interval(ctx, x, y, sign, cap);
  int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> up(n);
  for (const ElemEdge& e : g.edges)
    up[g.index_of(e.lo)].push_back(g.index_of(e.hi));
  for (auto& adj : up) std::sort(adj.begin(), adj.end());

  int xi = g.index_of(x), yi = g.index_of(y);
  if (xi < 0 || yi < 0) throw InternalError("interval is missing an endpoint");

  ChainList out;
  std::vector<int> path{xi};
  // Iterative DFS over cover paths; positions[] tracks the next branch.
  std::vector<size_t> positions{0};
  while (!path.empty()) {
    int cur = path.back();
    if (cur == yi) {
      if (out.chains.size() >= max_count) {
        out.truncated = true;
        break;
      }
      Chain chain;
      chain.reserve(path.size());
      for (int i : path) chain.push_back(g.vertices[static_cast<size_t>(i)]);
      out.chains.push_back(std::move(chain));
      path.pop_back();
      positions.pop_back();
      continue;
    }
    auto& adj = up[static_cast<size_t>(cur)];
    if (adj.empty())
      throw InternalError("cover path dead-ends below the interval top at " +
                          ctx.format_orbit(g.vertices[static_cast<size_t>(cur)]));
    if (positions.back() >= adj.size()) {
      path.pop_back();
      positions.pop_back();
      continue;
    }
    int nxt = adj[positions.back()++];
    path.push_back(nxt);
    positions.push_back(0);
  }
  return out;
}

Chain saturated_chain(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                      SignPair sign, int cap) {
  CoverGraph g = interval(ctx, x, y, sign, cap);
  Chain out{x};
  OrbitElt cur = x;
  while (cur != y) {
    int want = ctx.ext_length(cur, sign) + 1;
    const OrbitElt* step = nullptr;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.grade[i] != want) continue;
      if (ctx.ext_leq(cur, g.vertices[i], sign)) {
        step = &g.vertices[i];  // vertices sorted within a grade: first hit is least
        break;
      }
    }
    if (!step)
      throw InternalError("no elementary step of length +1 from " + ctx.format_orbit(cur) +
                          " toward " + ctx.format_orbit(y) +
                          "; contradicts the chain-existence theorem");
    out.push_back(*step);
    cur = *step;
  }
  return out;
}

std::optional<ElemEdge> translate_edge(const OrbitContext& ctx, int s, const ElemEdge& edge,
                                       Side side) {
  const CoxeterSystem& sys = ctx.system();
  Elt gs = sys.generator(s);
  Elt id;

  const OrbitElt& anchor = (edge.kind == EdgeKind::er1)
                               ? (edge.sign.delta > 0 ? edge.hi : edge.lo)
                               : (edge.kind == EdgeKind::er2)
                                     ? edge.hi
                                     : (edge.sign.epsilon > 0 ? edge.lo : edge.hi);

  bool collapse = false;
  if (side == Side::left) {
    if (edge.kind == EdgeKind::er1) {
      collapse = (gs == edge.t.elt());
    } else if (edge.kind == EdgeKind::er2) {
      Elt conj = sys.multiply(sys.multiply(anchor.a(), edge.t.elt()), sys.inverse(anchor.a()));
      collapse = (gs == conj);
    }
  } else {
    if (edge.kind == EdgeKind::er3) {
      collapse = (gs == edge.t.elt());
    } else if (edge.kind == EdgeKind::er2) {
      Elt cb = sys.multiply(anchor.c(), anchor.b());
      Elt conj = sys.multiply(sys.multiply(sys.inverse(cb), edge.t.elt()), cb);
      collapse = (gs == conj);
    }
  }

  auto shift = [&](const OrbitElt& z) {
    return side == Side::left ? ctx.act(gs, z, id) : ctx.act(id, z, gs);
  };

  if (collapse) {
    if (shift(edge.lo) != edge.hi)
      throw InternalError("collapse condition met but the shifted lo differs from hi");
    return std::nullopt;
  }

  OrbitElt nlo = shift(edge.lo), nhi = shift(edge.hi);
  if (nlo == nhi)
    throw InternalError("unexpected collapse outside the exceptional reflection");
  std::vector<ElemEdge> cands = elem_down(ctx, nhi, edge.sign);
  std::vector<ElemEdge> ups = elem_up_anchored(ctx, nlo, edge.sign);
  cands.insert(cands.end(), ups.begin(), ups.end());
  const ElemEdge* fallback = nullptr;
  for (const ElemEdge& e : cands) {
    if (e.lo == nlo && e.hi == nhi) {
      if (e.kind == edge.kind) return e;
      if (!fallback) fallback = &e;
    }
  }
  if (fallback) return *fallback;
  throw InternalError("translated relation is not elementary; contradicts the translation theorem");
}

bool zlemma_ext(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y, int s,
                Side side, SignPair sign) {
  const CoxeterSystem& sys = ctx.system();
  Elt gs = sys.generator(s);
  Elt id;
  auto shift = [&](const OrbitElt& z) {
    return side == Side::left ? ctx.act(gs, z, id) : ctx.act(id, z, gs);
  };
  OrbitElt sx = shift(x), sy = shift(y);
  if (!ctx.ext_less(sx, x, sign) || !ctx.ext_less(sy, y, sign))
    throw PreconditionError("zlemma_ext: requires sx < x and sy < y on the chosen side");
  bool v1 = ctx.ext_leq(x, y, sign);
  bool v2 = ctx.ext_leq(sx, y, sign);
  bool v3 = ctx.ext_leq(sx, sy, sign);
  return v1 == v2 && v2 == v3;
}

std::string export_dot(const OrbitContext& ctx, const CoverGraph& g) {
  std::string out = "digraph interval {\n";
  out += "  rankdir=BT;\n";
  for (const OrbitElt& v : g.vertices) out += "  \"" + ctx.format_orbit(v) + "\";\n";
  for (const ElemEdge& e : g.edges) {
    out += "  \"" + ctx.format_orbit(e.lo) + "\" -> \"" + ctx.format_orbit(e.hi) + "\"";
    out += " [kind=\"" + std::string(kind_name(e.kind)) + "\", t=\"" + format_elt(e.t.elt()) +
           "\", label=\"" + kind_name(e.kind) + " t=" + format_elt(e.t.elt()) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string export_text(const OrbitContext& ctx, const CoverGraph& g) {
  std::string out;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out += ctx.format_orbit(g.vertices[i]) + "\t" + std::to_string(g.grade[i]) + "\n";
  for (const ElemEdge& e : g.edges)
    out += ctx.format_orbit(e.lo) + " -> " + ctx.format_orbit(e.hi) + "\t" +
           kind_name(e.kind) + "\t" + format_elt(e.t.elt()) + "\n";
  return out;
}

}  // namespace renner::chains
