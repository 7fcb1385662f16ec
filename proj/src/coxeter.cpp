#include "renner/coxeter.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace renner {

// ---------------------------------------------------------------------------
// CoxeterMatrix

void CoxeterMatrix::validate() const {
  if (rank <= 0) throw std::invalid_argument("coxeter matrix: rank must be positive");
  if (entries.size() != static_cast<size_t>(rank) * rank)
    throw std::invalid_argument("coxeter matrix: wrong number of entries");
  for (int i = 0; i < rank; ++i) {
    if (at(i, i) != 1)
      throw std::invalid_argument("coxeter matrix: diagonal entry m(" + std::to_string(i) +
                                  "," + std::to_string(i) + ") must be 1");
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      int v = at(i, j);
      if (v == 1 || v < 0)
        throw std::invalid_argument("coxeter matrix: off-diagonal m(" + std::to_string(i) +
                                    "," + std::to_string(j) + ") must be >= 2 or 0 (infinity)");
      if (v != at(j, i))
        throw std::invalid_argument("coxeter matrix: not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
  }
}

CoxeterMatrix CoxeterMatrix::of(int rank, std::initializer_list<int> entries) {
  CoxeterMatrix m;
  m.rank = rank;
  m.entries.assign(entries);
  m.validate();
  return m;
}

namespace {

// Strip comments; returns false for blank lines.
bool significant_line(const std::string& raw, std::string* out) {
  std::string s = raw;
  auto pos = s.find('#');
  if (pos != std::string::npos) s.erase(pos);
  auto ws = s.find_first_not_of(" \t\r\n");
  if (ws == std::string::npos) return false;
  *out = s;
  return true;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::parse(std::istream& in) {
  std::string raw, line;
  int line_no = 0;
  int rank = -1;
  CoxeterMatrix m;
  int rows = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!significant_line(raw, &line)) continue;
    std::istringstream ls(line);
    if (rank < 0) {
      if (!(ls >> rank) || rank <= 0)
        throw ParseError("expected a positive rank", line_no);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected token after rank: " + extra, line_no);
      m.rank = rank;
      m.entries.reserve(static_cast<size_t>(rank) * rank);
      continue;
    }
    int v;
    int cols = 0;
    while (ls >> v) {
      ++cols;
      m.entries.push_back(v);
    }
    if (!ls.eof()) throw ParseError("matrix row contains a non-integer token", line_no);
    if (cols != rank)
      throw ParseError("matrix row has " + std::to_string(cols) + " entries, expected " +
                       std::to_string(rank), line_no);
    if (++rows == rank) break;
  }
  if (rank < 0) throw ParseError("empty matrix file", line_no);
  if (rows != rank)
    throw ParseError("matrix has " + std::to_string(rows) + " rows, expected " +
                     std::to_string(rank), line_no);
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no);
  }
  return m;
}

CoxeterMatrix CoxeterMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path, 0);
  return parse(in);
}

ContextFile parse_context_file(std::istream& in) {
  ContextFile cf;
  cf.matrix = CoxeterMatrix::parse(in);
  std::string raw, line;
  while (std::getline(in, raw)) {
    if (!significant_line(raw, &line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<int>* dst = nullptr;
    if (tag == "N:") {
      cf.has_N = true;
      dst = &cf.N;
    } else if (tag == "C:") {
      cf.has_C = true;
      dst = &cf.C;
    } else {
      throw ParseError("unexpected line in context file: " + tag, 0);
    }
    int v;
    while (ls >> v) dst->push_back(v);
    if (!ls.eof()) throw ParseError("non-integer generator index after " + tag, 0);
  }
  return cf;
}

ContextFile load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open context file: " + path, 0);
  return parse_context_file(in);
}

// ---------------------------------------------------------------------------
// Literals

bool shortlex_less(const Elt& x, const Elt& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  return x.word() < y.word();
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  bool saw_e = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad element literal token: " + tok, 0);
    }
    if (used != tok.size() || v < 0)
      throw ParseError("bad element literal token: " + tok, 0);
    w.push_back(v);
  }
  if (saw_e && !w.empty())
    throw ParseError("element literal mixes 'e' with generator indices", 0);
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_elt(const Elt& x) { return format_word(x.word()); }

// ---------------------------------------------------------------------------
// GenSet

GenSet GenSet::of(std::initializer_list<int> idx) {
  GenSet g;
  for (int s : idx) g = g.with(s);
  return g;
}

GenSet GenSet::of(const std::vector<int>& idx) {
  GenSet g;
  for (int s : idx) g = g.with(s);
  return g;
}

GenSet GenSet::full(int rank) {
  GenSet g;
  for (int s = 0; s < rank; ++s) g = g.with(s);
  return g;
}

GenSet GenSet::with(int s) const {
  if (s < 0 || s >= 64) throw std::out_of_range("generator index out of range: " + std::to_string(s));
  GenSet g = *this;
  g.bits_ |= (std::uint64_t{1} << s);
  return g;
}

int GenSet::count() const {
  int n = 0;
  for (std::uint64_t b = bits_; b; b &= b - 1) ++n;
  return n;
}

GenSet GenSet::minus(const GenSet& o) const {
  GenSet g = *this;
  g.bits_ &= ~o.bits_;
  return g;
}

GenSet GenSet::intersect(const GenSet& o) const {
  GenSet g = *this;
  g.bits_ &= o.bits_;
  return g;
}

std::vector<int> GenSet::indices() const {
  std::vector<int> out;
  for (int s = 0; s < 64; ++s)
    if (contains(s)) out.push_back(s);
  return out;
}

std::string format_genset(const GenSet& J) {
  std::string out = "{";
  bool first = true;
  for (int s : J.indices()) {
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// CoxeterSystem

std::size_t CoxeterSystem::WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : w) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix m) : matrix_(std::move(m)) {
  matrix_.validate();
}

void CoxeterSystem::check_index(int s) const {
  if (s < 0 || s >= rank())
    throw std::out_of_range("generator index out of range: " + std::to_string(s));
}

Elt CoxeterSystem::generator(int s) const {
  check_index(s);
  return Elt(Word{s});
}

// Tits: a word is reduced iff no sequence of braid moves produces an adjacent
// equal pair; the braid closure of a reduced word is its full set of reduced
// words. Delete pairs as they appear, then take the lexicographically least
// word of the final closure (all closure words share one length, so least
// lexicographic = least ShortLex).
Word CoxeterSystem::canonical_of(Word w) const {
  for (;;) {
    if (w.size() <= 1) return w;
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> queue;
    seen.insert(w);
    queue.push_back(w);
    bool deleted = false;
    for (size_t qi = 0; qi < queue.size() && !deleted; ++qi) {
      Word u = queue[qi];
      for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          u.erase(u.begin() + static_cast<long>(i), u.begin() + static_cast<long>(i) + 2);
          w = std::move(u);
          deleted = true;
          break;
        }
      }
      if (deleted) break;
      for (size_t i = 0; i + 1 < u.size(); ++i) {
        int p = u[i], q = u[i + 1];
        int mm = m(p, q);
        if (mm == 0 || i + static_cast<size_t>(mm) > u.size()) continue;
        bool alt = true;
        for (int k = 0; k < mm; ++k) {
          if (u[i + k] != ((k % 2 == 0) ? p : q)) {
            alt = false;
            break;
          }
        }
        if (!alt) continue;
        Word u2 = u;
        for (int k = 0; k < mm; ++k) u2[i + k] = (k % 2 == 0) ? q : p;
        if (seen.insert(u2).second) queue.push_back(u2);
      }
    }
    if (deleted) continue;
    return *std::min_element(queue.begin(), queue.end());
  }
}

Elt CoxeterSystem::multiply_gen(const Elt& x, int s) const {
  check_index(s);
  Word key = x.word();
  key.push_back(s);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return Elt(it->second);
  }
  Word res = canonical_of(key);
  {
    std::lock_guard<std::mutex> lock(mu_);
    mult_cache_.emplace(std::move(key), res);
  }
  return Elt(std::move(res));
}

Elt CoxeterSystem::multiply_word(const Elt& x, const Word& w) const {
  Elt acc = x;
  for (int s : w) acc = multiply_gen(acc, s);
  return acc;
}

Elt CoxeterSystem::normal_form(const Word& w) const {
  for (int s : w) check_index(s);
  return multiply_word(Elt(), w);
}

Elt CoxeterSystem::multiply(const Elt& x, const Elt& y) const {
  return multiply_word(x, y.word());
}

Elt CoxeterSystem::multiply_gen_left(int s, const Elt& x) const {
  check_index(s);
  return multiply_word(generator(s), x.word());
}

Elt CoxeterSystem::inverse(const Elt& x) const {
  Word rev(x.word().rbegin(), x.word().rend());
  return multiply_word(Elt(), rev);
}

bool CoxeterSystem::bruhat_leq(const Elt& u, const Elt& v) const {
  if (u.length() > v.length()) return false;
  if (u.is_identity()) return true;
  if (u == v) return true;
  Word key = u.word();
  key.push_back(-1);
  key.insert(key.end(), v.word().begin(), v.word().end());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leq_cache_.find(key);
    if (it != leq_cache_.end()) return it->second;
  }
  int s = v.word().back();
  Elt vs = multiply_gen(v, s);
  Elt us = multiply_gen(u, s);
  bool r = (us.length() < u.length()) ? bruhat_leq(us, vs) : bruhat_leq(u, vs);
  {
    std::lock_guard<std::mutex> lock(mu_);
    leq_cache_.emplace(std::move(key), r);
  }
  return r;
}

bool CoxeterSystem::bruhat_less(const Elt& u, const Elt& v) const {
  return u != v && bruhat_leq(u, v);
}

GenSet CoxeterSystem::descents(const Elt& x, Side side) const {
  GenSet out;
  for (int s = 0; s < rank(); ++s) {
    Elt y = (side == Side::right) ? multiply_gen(x, s) : multiply_gen_left(s, x);
    if (y.length() < x.length()) out = out.with(s);
  }
  return out;
}

Reflection Reflection::checked(const CoxeterSystem& sys, Elt t) {
  if (!sys.is_reflection(t))
    throw std::invalid_argument("'" + format_elt(t) + "' is not a reflection");
  return Reflection(std::move(t));
}

std::vector<Reflection> CoxeterSystem::inversions(const Elt& x, Side side) const {
  Elt base = (side == Side::left) ? x : inverse(x);
  const Word& w = base.word();
  std::set<Elt, ShortLex> out;
  for (size_t i = 0; i < w.size(); ++i) {
    Word t(w.begin(), w.begin() + static_cast<long>(i) + 1);
    for (size_t k = i; k-- > 0;) t.push_back(w[k]);
    out.insert(normal_form(t));
  }
  if (out.size() != w.size())
    throw InternalError("inversion set size differs from length");
  std::vector<Reflection> result;
  result.reserve(out.size());
  for (const Elt& t : out) result.push_back(Reflection(t));
  return result;
}

bool CoxeterSystem::is_reflection(const Elt& t) const {
  return t.length() % 2 == 1 && multiply(t, t).is_identity();
}

bool CoxeterSystem::in_parabolic(const Elt& x, const GenSet& J) const {
  for (int s : x.word())
    if (!J.contains(s)) return false;
  return true;
}

bool CoxeterSystem::is_min_coset_rep(const Elt& x, const GenSet& K, Side side) const {
  Side d = (side == Side::left) ? Side::right : Side::left;
  return descents(x, d).intersect(K).empty();
}

std::pair<Elt, Elt> CoxeterSystem::coset_decompose(const Elt& x, const GenSet& J,
                                                   Side side) const {
  Elt cur = x;
  Word acc;
  for (;;) {
    int found = -1;
    for (int s : J.indices()) {
      Elt y = (side == Side::left) ? multiply_gen(cur, s) : multiply_gen_left(s, cur);
      if (y.length() < cur.length()) {
        found = s;
        cur = y;
        break;
      }
    }
    if (found < 0) break;
    if (side == Side::left)
      acc.insert(acc.begin(), found);
    else
      acc.push_back(found);
  }
  Elt xj = normal_form(acc);
  if (xj.length() + cur.length() != x.length())
    throw InternalError("coset decomposition is not length additive");
  if (side == Side::left) return {cur, xj};
  return {xj, cur};
}

std::vector<Elt> CoxeterSystem::bfs_parabolic(const GenSet& J, int cap,
                                              bool* saturated) const {
  if (cap < 0) throw PreconditionError("enumeration cap must be >= 0");
  std::vector<Elt> all{identity()};
  std::vector<Elt> frontier{identity()};
  bool sat = false;
  for (int len = 1; len <= cap; ++len) {
    std::set<Elt, ShortLex> next;
    for (const Elt& w : frontier)
      for (int s : J.indices()) {
        Elt w2 = multiply_gen(w, s);
        if (w2.length() == len) next.insert(w2);
      }
    if (next.empty()) {
      sat = true;
      break;
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
  }
  if (saturated) *saturated = sat;
  return all;
}

std::vector<Elt> CoxeterSystem::enumerate(const GenSet& J, int cap,
                                          const EnumConstraint& constraint) const {
  std::vector<Elt> all = bfs_parabolic(J, cap, nullptr);
  if (constraint.kind == EnumConstraint::Kind::all) return all;
  std::vector<Elt> out;
  out.reserve(all.size());
  for (const Elt& x : all) {
    bool keep = (constraint.kind == EnumConstraint::Kind::min_coset_left)
                    ? is_min_coset_rep(x, constraint.K, Side::left)
                    : is_min_coset_rep(x, constraint.K, Side::right);
    if (keep) out.push_back(x);
  }
  return out;
}

Elt CoxeterSystem::longest_element(const GenSet& J, int cap) const {
  bool saturated = false;
  std::vector<Elt> all = bfs_parabolic(J, cap, &saturated);
  if (!saturated)
    throw NotFiniteError("parabolic subgroup " + format_genset(J) +
                             " did not saturate at cap " + std::to_string(cap) +
                             " (infinite or cap too small)",
                         cap);
  const Elt& w0 = all.back();
  for (const Elt& x : all)
    if (x.length() > w0.length()) throw InternalError("BFS output not sorted by length");
  if (!J.subset_of(descents(w0, Side::right)) || !J.subset_of(descents(w0, Side::left)))
    throw InternalError("longest element lacks a full descent set");
  return w0;
}

DeodharCase CoxeterSystem::deodhar_case(const Elt& w, const GenSet& J, int s) const {
  check_index(s);
  if (!is_min_coset_rep(w, J, Side::left))
    throw PreconditionError("deodhar_case: w is not a minimal coset representative for " +
                            format_genset(J));
  Elt sw = multiply_gen_left(s, w);
  if (sw.length() < w.length()) return {DeodharCase::down, -1};
  if (is_min_coset_rep(sw, J, Side::left)) return {DeodharCase::up_stays, -1};
  Elt shat = multiply(multiply(inverse(w), generator(s)), w);
  if (shat.length() != 1 || !J.contains(shat.word()[0]))
    throw InternalError("deodhar_case: folded generator is not a member of J");
  return {DeodharCase::up_folds, shat.word()[0]};
}

}  // namespace renner
