#include "renner/orbit.hpp"

#include <algorithm>

namespace renner {

// ---------------------------------------------------------------------------
// Signs and variants

SignPair parse_sign(const std::string& text) {
  if (text.size() == 2) {
    auto sgn = [](char ch) { return ch == '+' ? +1 : ch == '-' ? -1 : 0; };
    int e = sgn(text[0]), d = sgn(text[1]);
    if (e && d) return {e, d};
  }
  throw ParseError("bad sign pair '" + text + "' (expected ++, +-, -+ or --)", 0);
}

std::string format_sign(SignPair sign) {
  std::string s;
  s += sign.epsilon > 0 ? '+' : '-';
  s += sign.delta > 0 ? '+' : '-';
  return s;
}

Variant parse_variant(const std::string& text) {
  if (text == "i") return Variant::i;
  if (text == "ii") return Variant::ii;
  if (text == "iii") return Variant::iii;
  if (text == "iv") return Variant::iv;
  if (text == "i'") return Variant::i_prime;
  if (text == "ii'") return Variant::ii_prime;
  if (text == "iii'") return Variant::iii_prime;
  if (text == "iv'") return Variant::iv_prime;
  if (text == "auto") return Variant::auto_pick;
  throw ParseError("bad variant '" + text + "'", 0);
}

std::string format_variant(Variant v) {
  switch (v) {
    case Variant::i: return "i";
    case Variant::ii: return "ii";
    case Variant::iii: return "iii";
    case Variant::iv: return "iv";
    case Variant::i_prime: return "i'";
    case Variant::ii_prime: return "ii'";
    case Variant::iii_prime: return "iii'";
    case Variant::iv_prime: return "iv'";
    case Variant::auto_pick: return "auto";
  }
  return "?";
}

bool orbit_less(const OrbitElt& x, const OrbitElt& y) {
  if (x.a() != y.a()) return shortlex_less(x.a(), y.a());
  if (x.c() != y.c()) return shortlex_less(x.c(), y.c());
  return shortlex_less(x.b(), y.b());
}

// ---------------------------------------------------------------------------
// Context

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

OrbitContext::OrbitContext(const CoxeterSystem& sys, GenSet N, GenSet C)
    : sys_(&sys), N_(N), C_(C) {
  for (int s : N.indices())
    if (s >= sys.rank()) throw std::out_of_range("N contains generator index " + std::to_string(s));
  if (!C.subset_of(N))
    throw SubsetViolation("C = " + format_genset(C) + " is not a subset of N = " + format_genset(N));
  for (int s : N.minus(C).indices())
    for (int t : C.indices())
      if (sys.m(s, t) != 2)
        throw ComponentViolation("C is not a component of N: m(" + std::to_string(s) + "," +
                                 std::to_string(t) + ") = " + std::to_string(sys.m(s, t)) +
                                 " != 2");
  std::uint64_t h = 1469598103934665603ull;
  h = mix(h, static_cast<std::uint64_t>(sys.rank()));
  for (int v : sys.matrix().entries) h = mix(h, static_cast<std::uint64_t>(v + 1));
  for (int s : N.indices()) h = mix(h, 64 + static_cast<std::uint64_t>(s));
  for (int s : C.indices()) h = mix(h, 4096 + static_cast<std::uint64_t>(s));
  fp_ = h;
}

void OrbitContext::require_same_context(const OrbitElt& x) const {
  if (x.context_fingerprint() != fp_)
    throw ContextMismatchError("orbit element belongs to a different context");
}

OrbitElt OrbitContext::unit() const { return OrbitElt(Elt(), Elt(), Elt(), fp_); }

OrbitElt OrbitContext::make(const Elt& a, const Elt& c, const Elt& b) const {
  if (!sys_->is_min_coset_rep(a, N_, Side::left))
    throw std::invalid_argument("a-part '" + format_elt(a) + "' has a right descent in N");
  if (!sys_->in_parabolic(c, N_minus_C()))
    throw std::invalid_argument("c-part '" + format_elt(c) + "' is not in W_{N\\C}");
  if (!sys_->is_min_coset_rep(b, N_, Side::right))
    throw std::invalid_argument("b-part '" + format_elt(b) + "' has a left descent in N");
  return OrbitElt(a, c, b, fp_);
}

std::pair<Elt, Elt> OrbitContext::split_nc(const Elt& w_n) const {
  if (!sys_->in_parabolic(w_n, N_))
    throw PreconditionError("split_nc: element is not in W_N");
  Word uw, cw;
  for (int s : w_n.word()) {
    if (C_.contains(s))
      cw.push_back(s);
    else
      uw.push_back(s);
  }
  return {sys_->normal_form(uw), sys_->normal_form(cw)};
}

OrbitElt OrbitContext::canonicalize(const Elt& a_raw, const Elt& b_raw) const {
  // a e b = a (b_N) e {}^N b = (a v) (w e) {}^N b with b_N = v w, v in W_{N\C},
  // w in W_C; then split a v over W^N x W_N and drop the W_C part of the
  // W_N factor into e.
  auto [bN, bmin] = sys_->coset_decompose(b_raw, N_, Side::right);
  auto [v, w] = split_nc(bN);
  (void)w;
  Elt a1 = sys_->multiply(a_raw, v);
  auto [amin, aN] = sys_->coset_decompose(a1, N_, Side::left);
  auto [c, w2] = split_nc(aN);
  (void)w2;
  return OrbitElt(amin, c, bmin, fp_);
}

std::pair<Elt, Elt> OrbitContext::normal_form_I(const OrbitElt& x) const {
  require_same_context(x);
  return {sys_->multiply(x.a(), x.c()), x.b()};
}

std::pair<Elt, Elt> OrbitContext::normal_form_II(const OrbitElt& x) const {
  require_same_context(x);
  return {x.a(), sys_->multiply(x.c(), x.b())};
}

OrbitElt OrbitContext::act(const Elt& u, const OrbitElt& x, const Elt& v) const {
  require_same_context(x);
  return canonicalize(sys_->multiply(u, sys_->multiply(x.a(), x.c())),
                      sys_->multiply(x.b(), v));
}

OrbitElt OrbitContext::involution(const OrbitElt& x) const {
  require_same_context(x);
  return make(sys_->inverse(x.b()), sys_->inverse(x.c()), sys_->inverse(x.a()));
}

int OrbitContext::ext_length(const OrbitElt& x, SignPair sign) const {
  require_same_context(x);
  return sign.delta * x.a().length() + x.c().length() - sign.epsilon * x.b().length();
}

// ---------------------------------------------------------------------------
// Extended Bruhat orders

int OrbitContext::witness_bound_u(const OrbitElt& x, const OrbitElt& y, int delta) const {
  return delta > 0 ? y.a().length() - x.a().length() : x.a().length() - y.a().length();
}

int OrbitContext::witness_bound_v(const OrbitElt& x, const OrbitElt& y, int epsilon) const {
  return epsilon > 0 ? x.b().length() - y.b().length() : y.b().length() - x.b().length();
}

bool OrbitContext::side_a(const OrbitElt& x, const OrbitElt& y, int delta, const Elt& u) const {
  if (delta > 0) return sys_->bruhat_leq(sys_->multiply(x.a(), sys_->inverse(u)), y.a());
  return sys_->bruhat_leq(sys_->multiply(y.a(), u), x.a());
}

bool OrbitContext::side_b(const OrbitElt& x, const OrbitElt& y, int epsilon, const Elt& v) const {
  if (epsilon > 0) return sys_->bruhat_leq(sys_->multiply(v, y.b()), x.b());
  return sys_->bruhat_leq(sys_->multiply(sys_->inverse(v), x.b()), y.b());
}

bool OrbitContext::middle_statement(Variant var, const Elt& c1, const Elt& c2, const Elt& u,
                                    const Elt& v) const {
  const CoxeterSystem& s = *sys_;
  Elt u_inv = s.inverse(u);
  Elt v_inv = s.inverse(v);
  switch (var) {
    case Variant::i:
      return s.bruhat_leq(c1, s.multiply(u_inv, s.multiply(c2, v_inv)));
    case Variant::ii:
      return s.bruhat_leq(s.multiply(u, c1), s.multiply(c2, v_inv));
    case Variant::iii:
      return s.bruhat_leq(s.multiply(u, s.multiply(c1, v)), c2);
    case Variant::iv:
      return s.bruhat_leq(s.multiply(c1, v), s.multiply(u_inv, c2));
    case Variant::i_prime: {
      Elt p = s.multiply(u_inv, s.multiply(c2, v_inv));
      return p.length() == u.length() + c2.length() + v.length() && s.bruhat_leq(c1, p);
    }
    case Variant::ii_prime: {
      Elt lhs = s.multiply(u, c1);
      Elt rhs = s.multiply(c2, v_inv);
      return lhs.length() == c1.length() - u.length() &&
             rhs.length() == c2.length() + v.length() && s.bruhat_leq(lhs, rhs);
    }
    case Variant::iii_prime: {
      Elt lhs = s.multiply(u, s.multiply(c1, v));
      return lhs.length() == c1.length() - u.length() - v.length() && s.bruhat_leq(lhs, c2);
    }
    case Variant::iv_prime: {
      Elt lhs = s.multiply(c1, v);
      Elt rhs = s.multiply(u_inv, c2);
      return lhs.length() == c1.length() - v.length() &&
             rhs.length() == u.length() + c2.length() && s.bruhat_leq(lhs, rhs);
    }
    case Variant::auto_pick:
      break;
  }
  throw std::invalid_argument("middle_statement: auto is not a concrete variant");
}

std::optional<WitnessPair> OrbitContext::ext_leq_witness(const OrbitElt& x, const OrbitElt& y,
                                                         SignPair sign, Variant variant) const {
  require_same_context(x);
  require_same_context(y);
  if (variant == Variant::auto_pick) variant = Variant::i_prime;
  int ub = witness_bound_u(x, y, sign.delta);
  int vb = witness_bound_v(x, y, sign.epsilon);
  if (ub < 0 || vb < 0) return std::nullopt;
  std::vector<Elt> us = sys_->enumerate(N_minus_C(), ub);
  std::vector<Elt> vs = sys_->enumerate(N_minus_C(), vb);
  for (const Elt& u : us) {
    if (!side_a(x, y, sign.delta, u)) continue;
    for (const Elt& v : vs) {
      if (!side_b(x, y, sign.epsilon, v)) continue;
      if (middle_statement(variant, x.c(), y.c(), u, v)) return WitnessPair{u, v};
    }
  }
  return std::nullopt;
}

bool OrbitContext::nf_middle(NfVariant var, const Elt& lhs, const Elt& rhs, const Elt& wit,
                             bool wit_on_right) const {
  const CoxeterSystem& s = *sys_;
  Elt w_inv = s.inverse(wit);
  if (wit_on_right) {
    switch (var) {
      case NfVariant::i:
        return s.bruhat_leq(lhs, s.multiply(rhs, w_inv));
      case NfVariant::ii:
        return s.bruhat_leq(s.multiply(lhs, wit), rhs);
      case NfVariant::i_prime: {
        Elt p = s.multiply(rhs, w_inv);
        return p.length() == rhs.length() + wit.length() && s.bruhat_leq(lhs, p);
      }
      case NfVariant::ii_prime: {
        Elt p = s.multiply(lhs, wit);
        return p.length() == lhs.length() - wit.length() && s.bruhat_leq(p, rhs);
      }
    }
  } else {
    switch (var) {
      case NfVariant::i:
        return s.bruhat_leq(lhs, s.multiply(w_inv, rhs));
      case NfVariant::ii:
        return s.bruhat_leq(s.multiply(wit, lhs), rhs);
      case NfVariant::i_prime: {
        Elt p = s.multiply(w_inv, rhs);
        return p.length() == wit.length() + rhs.length() && s.bruhat_leq(lhs, p);
      }
      case NfVariant::ii_prime: {
        Elt p = s.multiply(wit, lhs);
        return p.length() == lhs.length() - wit.length() && s.bruhat_leq(p, rhs);
      }
    }
  }
  return false;
}

bool OrbitContext::ext_leq_nfI(const OrbitElt& x, const OrbitElt& y, int epsilon,
                               NfVariant variant) const {
  require_same_context(x);
  require_same_context(y);
  Elt a1 = sys_->multiply(x.a(), x.c());
  Elt a2 = sys_->multiply(y.a(), y.c());
  int vb = witness_bound_v(x, y, epsilon);
  if (vb < 0) return false;
  for (const Elt& v : sys_->enumerate(N_minus_C(), vb)) {
    if (!side_b(x, y, epsilon, v)) continue;
    if (nf_middle(variant, a1, a2, v, /*wit_on_right=*/true)) return true;
  }
  return false;
}

bool OrbitContext::ext_leq_nfII(const OrbitElt& x, const OrbitElt& y, int delta,
                                NfVariant variant) const {
  require_same_context(x);
  require_same_context(y);
  Elt b1 = sys_->multiply(x.c(), x.b());
  Elt b2 = sys_->multiply(y.c(), y.b());
  int ub = witness_bound_u(x, y, delta);
  if (ub < 0) return false;
  for (const Elt& u : sys_->enumerate(N_minus_C(), ub)) {
    if (!side_a(x, y, delta, u)) continue;
    if (nf_middle(variant, b1, b2, u, /*wit_on_right=*/false)) return true;
  }
  return false;
}

namespace {

void append_word(std::string& key, const Word& w) {
  for (int s : w) key += static_cast<char>(s + 2);
  key += '\1';
}

}  // namespace

bool OrbitContext::ext_leq(const OrbitElt& x, const OrbitElt& y, SignPair sign,
                           Variant variant) const {
  require_same_context(x);
  require_same_context(y);
  if (variant != Variant::auto_pick)
    return ext_leq_witness(x, y, sign, variant).has_value();
  if (x == y) return true;
  std::string key;
  append_word(key, x.a().word());
  append_word(key, x.c().word());
  append_word(key, x.b().word());
  append_word(key, y.a().word());
  append_word(key, y.c().word());
  append_word(key, y.b().word());
  key += static_cast<char>(sign.epsilon > 0 ? 'P' : 'M');
  key += static_cast<char>(sign.delta > 0 ? 'P' : 'M');
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leq_cache_.find(key);
    if (it != leq_cache_.end()) return it->second;
  }
  bool r;
  if (ext_length(x, sign) >= ext_length(y, sign)) {
    r = false;  // strict order forces a strictly smaller extended length
  } else if (sign.delta > 0) {
    r = ext_leq_nfI(x, y, sign.epsilon, NfVariant::i_prime);
  } else if (sign.epsilon < 0) {
    r = ext_leq_nfII(x, y, sign.delta, NfVariant::i_prime);
  } else {
    r = ext_leq_witness(x, y, sign, Variant::i_prime).has_value();
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    leq_cache_.emplace(std::move(key), r);
  }
  return r;
}

bool OrbitContext::ext_less(const OrbitElt& x, const OrbitElt& y, SignPair sign) const {
  return x != y && ext_leq(x, y, sign);
}

// ---------------------------------------------------------------------------

OrbitElt OrbitContext::phi_w0(const OrbitElt& x, W0Mode mode, int cap) const {
  require_same_context(x);
  switch (mode) {
    case W0Mode::left: {
      Elt w0 = sys_->longest_element(sys_->all_generators(), cap);
      Elt v0 = sys_->longest_element(N_, cap);
      Elt u0 = sys_->longest_element(N_minus_C(), cap);
      Elt a2 = sys_->multiply(sys_->multiply(w0, x.a()), v0);
      Elt c2 = sys_->multiply(u0, x.c());
      return make(a2, c2, x.b());
    }
    case W0Mode::right:
      return involution(phi_w0(involution(x), W0Mode::left, cap));
    case W0Mode::both:
      return phi_w0(phi_w0(x, W0Mode::right, cap), W0Mode::left, cap);
  }
  throw std::invalid_argument("phi_w0: bad mode");
}

std::vector<OrbitElt> OrbitContext::slice(int component_cap) const {
  GenSet all = sys_->all_generators();
  std::vector<Elt> as = sys_->enumerate(all, component_cap, EnumConstraint::min_coset_left(N_));
  std::vector<Elt> cs = sys_->enumerate(N_minus_C(), component_cap);
  std::vector<Elt> bs = sys_->enumerate(all, component_cap, EnumConstraint::min_coset_right(N_));
  std::vector<OrbitElt> out;
  out.reserve(as.size() * cs.size() * bs.size());
  for (const Elt& a : as)
    for (const Elt& c : cs)
      for (const Elt& b : bs) out.push_back(OrbitElt(a, c, b, fp_));
  std::sort(out.begin(), out.end(), OrbitLess{});
  return out;
}

OrbitElt OrbitContext::parse_orbit(const std::string& literal) const {
  auto first = literal.find_first_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty orbit literal", 0);
  if (literal.compare(first, 4, "raw ") == 0) {
    std::string rest = literal.substr(first + 4);
    auto semi = rest.find(';');
    if (semi == std::string::npos)
      throw ParseError("raw orbit literal must be 'raw a ; b'", 0);
    Elt a = sys_->normal_form(parse_word(rest.substr(0, semi)));
    Elt b = sys_->normal_form(parse_word(rest.substr(semi + 1)));
    return canonicalize(a, b);
  }
  auto p1 = literal.find('|');
  auto p2 = (p1 == std::string::npos) ? std::string::npos : literal.find('|', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos || literal.find('|', p2 + 1) != std::string::npos)
    throw ParseError("orbit literal must be 'a|c|b' or 'raw a ; b'", 0);
  Elt a = sys_->normal_form(parse_word(literal.substr(0, p1)));
  Elt c = sys_->normal_form(parse_word(literal.substr(p1 + 1, p2 - p1 - 1)));
  Elt b = sys_->normal_form(parse_word(literal.substr(p2 + 1)));
  try {
    return make(a, c, b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("orbit literal is not a normal form III: ") + e.what(), 0);
  }
}

std::string OrbitContext::format_orbit(const OrbitElt& x) const {
  return format_elt(x.a()) + "|" + format_elt(x.c()) + "|" + format_elt(x.b());
}

}  // namespace renner
