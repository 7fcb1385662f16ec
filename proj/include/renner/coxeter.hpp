#pragma once

// Exact word-level arithmetic in a Coxeter system (W,S): canonical reduced
// words, length, Bruhat order, descents, inversions, parabolic
// decompositions and bounded enumeration.
//
// Elements are stored as the ShortLex-least reduced word of the element,
// which makes equality structural and every listed output deterministic.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace renner {

using Word = std::vector<int>;

// ---------------------------------------------------------------------------
// Errors

struct NotFiniteError : std::runtime_error {
  int cap;
  NotFiniteError(const std::string& what, int cap_used)
      : std::runtime_error(what), cap(cap_used) {}
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line_no)
      : std::runtime_error(what), line(line_no) {}
};

// Raised when a computation contradicts an invariant that is a theorem of
// the underlying combinatorics. Never expected on valid inputs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Presentation data

// Coxeter matrix. Entry 0 encodes m(i,j) = infinity, both in memory and in
// the file format.
struct CoxeterMatrix {
  int rank = 0;
  std::vector<int> entries;  // rank*rank, row major

  int at(int i, int j) const { return entries[static_cast<size_t>(i) * rank + j]; }

  // Throws std::invalid_argument unless symmetric, diagonal all 1 and
  // off-diagonal entries are 0 (infinity) or >= 2.
  void validate() const;

  static CoxeterMatrix of(int rank, std::initializer_list<int> entries);

  // File format: first line rank n, then n lines of n integers; lines whose
  // first non-blank character is '#' are comments. Throws ParseError with a
  // 1-based line number.
  static CoxeterMatrix parse(std::istream& in);
  static CoxeterMatrix load(const std::string& path);
};

// ---------------------------------------------------------------------------
// Elements

// A group element, held as the ShortLex-least reduced word of its generator
// indices. Only CoxeterSystem produces these, so the invariant cannot be
// broken from outside. Immutable and freely shareable across threads.
class Elt {
 public:
  Elt() = default;  // identity

  const Word& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const Elt& x, const Elt& y) { return x.word_ == y.word_; }
  friend bool operator!=(const Elt& x, const Elt& y) { return !(x == y); }

 private:
  explicit Elt(Word w) : word_(std::move(w)) {}
  friend class CoxeterSystem;
  Word word_;
};

// ShortLex: length first, then lexicographic. The tie-break order used by
// every enumeration in this library.
bool shortlex_less(const Elt& x, const Elt& y);

struct ShortLex {
  bool operator()(const Elt& x, const Elt& y) const { return shortlex_less(x, y); }
};

class CoxeterSystem;

// A reflection w s w^-1: an odd-length involution. checked() validates,
// CoxeterSystem mints them directly where the construction guarantees it.
class Reflection {
 public:
  static Reflection checked(const CoxeterSystem& sys, Elt t);

  const Elt& elt() const { return elt_; }

  friend bool operator==(const Reflection& a, const Reflection& b) { return a.elt_ == b.elt_; }
  friend bool operator!=(const Reflection& a, const Reflection& b) { return !(a == b); }

 private:
  explicit Reflection(Elt t) : elt_(std::move(t)) {}
  friend class CoxeterSystem;
  Elt elt_;
};

// Element literal: whitespace-separated generator indices, "e" for the
// identity. parse_word does not canonicalize.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);
std::string format_elt(const Elt& x);

// ---------------------------------------------------------------------------
// Generator subsets

class GenSet {
 public:
  GenSet() = default;

  static GenSet of(std::initializer_list<int> idx);
  static GenSet of(const std::vector<int>& idx);
  static GenSet full(int rank);

  bool contains(int s) const { return s >= 0 && s < 64 && (bits_ >> s) & 1u; }
  bool empty() const { return bits_ == 0; }
  int count() const;
  bool subset_of(const GenSet& o) const { return (bits_ & ~o.bits_) == 0; }
  GenSet with(int s) const;
  GenSet minus(const GenSet& o) const;
  GenSet intersect(const GenSet& o) const;
  std::vector<int> indices() const;  // ascending

  friend bool operator==(const GenSet& x, const GenSet& y) { return x.bits_ == y.bits_; }
  friend bool operator!=(const GenSet& x, const GenSet& y) { return !(x == y); }

 private:
  std::uint64_t bits_ = 0;
};

std::string format_genset(const GenSet& J);

// ---------------------------------------------------------------------------

enum class Side { left, right };

struct EnumConstraint {
  enum class Kind { all, min_coset_left, min_coset_right };
  Kind kind = Kind::all;
  GenSet K;

  static EnumConstraint all() { return {}; }
  // Members of W^K: no right descent in K (minimal reps of W/W_K).
  static EnumConstraint min_coset_left(GenSet K) {
    return {Kind::min_coset_left, K};
  }
  // Members of {}^K W: no left descent in K (minimal reps of W_K\W).
  static EnumConstraint min_coset_right(GenSet K) {
    return {Kind::min_coset_right, K};
  }
};

// Deodhar's three alternatives for w in W^J and s in S.
struct DeodharCase {
  enum Kind { down, up_stays, up_folds };
  Kind kind;
  int folded = -1;  // the generator s~ in J with sw = w*s~, for up_folds
};

// ---------------------------------------------------------------------------

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix m);

  // Memo caches make copies pointless; build a fresh instance from matrix()
  // when independent caches are wanted (the oracle does).
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  int rank() const { return matrix_.rank; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int m(int i, int j) const { return matrix_.at(i, j); }
  GenSet all_generators() const { return GenSet::full(rank()); }

  Elt identity() const { return Elt(); }
  Elt generator(int s) const;

  // Canonical element of an arbitrary word; idempotent on canonical words.
  // Throws std::out_of_range on a bad generator index.
  Elt normal_form(const Word& w) const;

  Elt multiply(const Elt& x, const Elt& y) const;
  Elt multiply_gen(const Elt& x, int s) const;       // x s
  Elt multiply_gen_left(int s, const Elt& x) const;  // s x
  Elt inverse(const Elt& x) const;
  int length(const Elt& x) const { return x.length(); }

  // Bruhat order, by the descent recursion: pick s with vs < v, then
  // u <= v iff (us < u ? us <= vs : u <= vs). Memoized per pair.
  bool bruhat_leq(const Elt& u, const Elt& v) const;
  bool bruhat_less(const Elt& u, const Elt& v) const;

  // {s : l(sx) < l(x)} (left) resp. {s : l(xs) < l(x)} (right).
  GenSet descents(const Elt& x, Side side) const;

  // Left inversions {t in T : tx < x} from a reduced word s1..sk as
  // t_i = s1..s_i..s1; right inversions are the left inversions of x^-1.
  // Exactly l(x) reflections, ShortLex sorted.
  std::vector<Reflection> inversions(const Elt& x, Side side) const;

  bool is_reflection(const Elt& t) const;

  // Letters of the canonical word all lie in J, i.e. x in W_J.
  bool in_parabolic(const Elt& x, const GenSet& J) const;

  // side == left:  x in W^K  (no right descent in K)
  // side == right: x in {}^K W (no left descent in K)
  bool is_min_coset_rep(const Elt& x, const GenSet& K, Side side) const;

  // side == left:  returns (x^J, x_J) with x = x^J x_J
  // side == right: returns (x_J, {}^J x) with x = x_J {}^J x
  // Lengths are additive in both decompositions.
  std::pair<Elt, Elt> coset_decompose(const Elt& x, const GenSet& J, Side side) const;

  // All elements of W_J with length <= cap that satisfy the constraint,
  // ordered by length then ShortLex. Complete for the bound.
  std::vector<Elt> enumerate(const GenSet& J, int cap,
                             const EnumConstraint& constraint = EnumConstraint::all()) const;

  // Longest element of W_J if the BFS of W_J saturates below cap; throws
  // NotFiniteError (reporting the cap) otherwise. A frontier still growing
  // at cap is indistinguishable from an infinite W_J by design.
  Elt longest_element(const GenSet& J, int cap) const;

  // Requires w in W^J.
  DeodharCase deodhar_case(const Elt& w, const GenSet& J, int s) const;

 private:
  Word canonical_of(Word w) const;  // Tits-style braid-closure reduction
  Elt multiply_word(const Elt& x, const Word& w) const;
  std::vector<Elt> bfs_parabolic(const GenSet& J, int cap, bool* saturated) const;
  void check_index(int s) const;

  CoxeterMatrix matrix_;

  struct WordHash {
    std::size_t operator()(const Word& w) const;
  };
  mutable std::mutex mu_;
  mutable std::unordered_map<Word, Word, WordHash> mult_cache_;
  mutable std::unordered_map<Word, bool, WordHash> leq_cache_;
};

// Context file: a Coxeter matrix block optionally followed by "N:" and "C:"
// lines of generator indices.
struct ContextFile {
  CoxeterMatrix matrix;
  bool has_N = false, has_C = false;
  std::vector<int> N, C;
};
ContextFile parse_context_file(std::istream& in);
ContextFile load_context_file(const std::string& path);

}  // namespace renner
