#pragma once

// The W x W-set W(N,C) for a Coxeter system (W,S), a subset N of S and a
// component C of N: normal forms I/II/III, the two-sided action, the
// involution, the four extended Bruhat orders and the extended length
// functions, plus the longest-element (anti-)isomorphisms for finite W.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "renner/coxeter.hpp"

namespace renner {

struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SubsetViolation : ContextError {
  using ContextError::ContextError;
};
struct ComponentViolation : ContextError {
  using ContextError::ContextError;
};
struct ContextMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

// (epsilon, delta), each +1 or -1.
struct SignPair {
  int epsilon = +1;
  int delta = +1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

inline constexpr SignPair kSignPP{+1, +1};
inline constexpr SignPair kSignPM{+1, -1};
inline constexpr SignPair kSignMP{-1, +1};
inline constexpr SignPair kSignMM{-1, -1};
inline constexpr SignPair kAllSigns[] = {kSignPP, kSignPM, kSignMP, kSignMM};

SignPair parse_sign(const std::string& text);  // "++", "+-", "-+", "--"
std::string format_sign(SignPair sign);

// The eight interchangeable middle statements of the order definition, plus
// auto (fast rejects, then the cheapest applicable characterization).
enum class Variant { i, ii, iii, iv, i_prime, ii_prime, iii_prime, iv_prime, auto_pick };
Variant parse_variant(const std::string& text);
std::string format_variant(Variant v);
inline constexpr Variant kDefVariants[] = {Variant::i,       Variant::ii,
                                           Variant::iii,     Variant::iv,
                                           Variant::i_prime, Variant::ii_prime,
                                           Variant::iii_prime, Variant::iv_prime};

// Sub-variants of the normal-form-I and normal-form-II characterizations.
enum class NfVariant { i, ii, i_prime, ii_prime };
inline constexpr NfVariant kNfVariants[] = {NfVariant::i, NfVariant::ii,
                                            NfVariant::i_prime, NfVariant::ii_prime};

// ---------------------------------------------------------------------------

// Normal form III triple: a in W^N, c in W_{N\C}, b in {}^N W. Uniquely
// determines the orbit element a c e b; equality is structural.
class OrbitElt {
 public:
  const Elt& a() const { return a_; }
  const Elt& c() const { return c_; }
  const Elt& b() const { return b_; }
  std::uint64_t context_fingerprint() const { return fp_; }

  friend bool operator==(const OrbitElt& x, const OrbitElt& y) {
    return x.fp_ == y.fp_ && x.a_ == y.a_ && x.c_ == y.c_ && x.b_ == y.b_;
  }
  friend bool operator!=(const OrbitElt& x, const OrbitElt& y) { return !(x == y); }

 private:
  OrbitElt(Elt a, Elt c, Elt b, std::uint64_t fp)
      : a_(std::move(a)), c_(std::move(c)), b_(std::move(b)), fp_(fp) {}
  friend class OrbitContext;
  Elt a_, c_, b_;
  std::uint64_t fp_ = 0;
};

// ShortLex on a, then c, then b; the tie-break order for orbit elements.
bool orbit_less(const OrbitElt& x, const OrbitElt& y);
struct OrbitLess {
  bool operator()(const OrbitElt& x, const OrbitElt& y) const { return orbit_less(x, y); }
};

struct WitnessPair {
  Elt u, v;  // both in W_{N\C}
};

// ---------------------------------------------------------------------------

class OrbitContext {
 public:
  // Validates: C subset of N (SubsetViolation), and m(s,s~) = 2 for every
  // s in N\C, s~ in C (ComponentViolation). The system must outlive the
  // context.
  OrbitContext(const CoxeterSystem& sys, GenSet N, GenSet C);

  const CoxeterSystem& system() const { return *sys_; }
  GenSet N() const { return N_; }
  GenSet C() const { return C_; }
  GenSet N_minus_C() const { return N_.minus(C_); }
  std::uint64_t fingerprint() const { return fp_; }

  // The element e = identity e identity.
  OrbitElt unit() const;

  // Validated construction from a normal form III triple.
  OrbitElt make(const Elt& a, const Elt& c, const Elt& b) const;

  // Normal form III of a_raw e b_raw. Never fails.
  OrbitElt canonicalize(const Elt& a_raw, const Elt& b_raw) const;

  // Normal form I: (a c, b) with a c in W^C; II: (a, c b) with c b in {}^C W.
  // Lengths are additive in both products.
  std::pair<Elt, Elt> normal_form_I(const OrbitElt& x) const;
  std::pair<Elt, Elt> normal_form_II(const OrbitElt& x) const;

  // (u, v) . x = u a c e b v.
  OrbitElt act(const Elt& u, const OrbitElt& x, const Elt& v) const;

  // (a c e b)^inv = b^-1 c^-1 e a^-1; involutive.
  OrbitElt involution(const OrbitElt& x) const;

  // l_{epsilon delta}(x) = delta l(a) + l(c) - epsilon l(b); may be negative.
  int ext_length(const OrbitElt& x, SignPair sign) const;

  // The extended Bruhat order <=_{epsilon delta}. All variants agree; the
  // witness search is exact because any witness pair is forced to satisfy
  // l(u) <= |l(a2)-l(a1)| and l(v) <= |l(b1)-l(b2)| by the length-additive
  // side conditions.
  bool ext_leq(const OrbitElt& x, const OrbitElt& y, SignPair sign,
               Variant variant = Variant::auto_pick) const;
  bool ext_less(const OrbitElt& x, const OrbitElt& y, SignPair sign) const;

  // Witness-reporting search over a fixed definition variant (auto_pick is
  // evaluated as i_prime). Empty optional = not comparable.
  std::optional<WitnessPair> ext_leq_witness(const OrbitElt& x, const OrbitElt& y,
                                             SignPair sign,
                                             Variant variant = Variant::i_prime) const;

  // Single-witness characterizations: normal form I decides <=_{epsilon +},
  // normal form II decides <=_{- delta}.
  bool ext_leq_nfI(const OrbitElt& x, const OrbitElt& y, int epsilon,
                   NfVariant variant = NfVariant::i_prime) const;
  bool ext_leq_nfII(const OrbitElt& x, const OrbitElt& y, int delta,
                    NfVariant variant = NfVariant::i_prime) const;

  enum class W0Mode { left, right, both };

  // Multiplication by the longest element w0 of a finite W: left and right
  // are involutive anti-isomorphisms, both sides an involutive isomorphism,
  // between the extended orders. Throws NotFiniteError when the needed
  // longest elements do not saturate below cap.
  OrbitElt phi_w0(const OrbitElt& x, W0Mode mode, int cap) const;

  // All triples with all three component lengths <= component_cap, ordered by
  // (a, c, b) ShortLex. Complete for the bound even when W is infinite.
  std::vector<OrbitElt> slice(int component_cap) const;

  // Orbit element literal: "a|c|b" with each part an element literal
  // (validated as a normal form III), or "raw a ; b" which is passed through
  // canonicalize.
  OrbitElt parse_orbit(const std::string& literal) const;
  std::string format_orbit(const OrbitElt& x) const;

  // Factor an element of W_N = W_{N\C} x W_C into its two components.
  std::pair<Elt, Elt> split_nc(const Elt& w_n) const;

  void require_same_context(const OrbitElt& x) const;

 private:
  bool middle_statement(Variant v, const Elt& c1, const Elt& c2, const Elt& u,
                        const Elt& v_wit) const;
  bool nf_middle(NfVariant v, const Elt& lhs1, const Elt& lhs2, const Elt& wit,
                 bool wit_on_right) const;
  bool side_a(const OrbitElt& x, const OrbitElt& y, int delta, const Elt& u) const;
  bool side_b(const OrbitElt& x, const OrbitElt& y, int epsilon, const Elt& v) const;
  int witness_bound_u(const OrbitElt& x, const OrbitElt& y, int delta) const;
  int witness_bound_v(const OrbitElt& x, const OrbitElt& y, int epsilon) const;

  const CoxeterSystem* sys_;
  GenSet N_, C_;
  std::uint64_t fp_ = 0;

  struct KeyHash {
    std::size_t operator()(const std::string& k) const { return std::hash<std::string>{}(k); }
  };
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, bool, KeyHash> leq_cache_;
};

}  // namespace renner
