#include "renner/transport.hpp"

namespace renner {

std::vector<ProductShape> product_shape(const CoxeterSystem& sys, const Elt& a, const Elt& b) {
  int la = a.length(), lb = b.length();
  int lab = sys.multiply(a, b).length();
  std::vector<ProductShape> out;
  if (lab == la + lb) out.push_back(ProductShape::box);
  if (lab == la - lb) out.push_back(ProductShape::right_drop);
  if (lab == -la + lb) out.push_back(ProductShape::left_drop);
  if (out.empty()) out.push_back(ProductShape::general);
  return out;
}

const char* shape_name(ProductShape s) {
  switch (s) {
    case ProductShape::box: return "box";
    case ProductShape::right_drop: return "right_drop";
    case ProductShape::left_drop: return "left_drop";
    case ProductShape::general: return "general";
  }
  return "?";
}

TransportWitnesses transport_witnesses(const CoxeterSystem& sys, const Elt& a,
                                       const Elt& b, const Elt& w) {
  if (!sys.bruhat_leq(a, b))
    throw PreconditionError("transport_witnesses: requires a <= b");
  Elt wm, wp;          // w-_k, w+_k
  Elt awm = a, bwp = b;  // a w-_k, b w+_k, carried along
  for (int s : w.word()) {
    Elt awms = sys.multiply_gen(awm, s);
    if (awms.length() < awm.length()) {
      wm = sys.multiply_gen(wm, s);
      awm = awms;
    }
    Elt bwps = sys.multiply_gen(bwp, s);
    if (bwps.length() > bwp.length()) {
      wp = sys.multiply_gen(wp, s);
      bwp = bwps;
    }
  }
  return {wm, wp};
}

TransportWitnesses transport_witnesses_left(const CoxeterSystem& sys, const Elt& a,
                                            const Elt& b, const Elt& w) {
  TransportWitnesses tw = transport_witnesses(sys, sys.inverse(a), sys.inverse(b), sys.inverse(w));
  return {sys.inverse(tw.w_minus), sys.inverse(tw.w_plus)};
}

Elt peel_right(const CoxeterSystem& sys, const Elt& a, const Elt& b, const Elt& v) {
  Elt bv = sys.multiply(b, v);
  if (!sys.bruhat_leq(a, bv))
    throw PreconditionError("peel_right: requires a <= b v");
  TransportWitnesses tw = transport_witnesses(sys, a, bv, sys.inverse(v));
  return sys.inverse(tw.w_minus);
}

bool check_cancel(const CoxeterSystem& sys, const Elt& a, const Elt& b, const Elt& w,
                  CancelCase side_case) {
  if (side_case == CancelCase::drop) {
    if (sys.multiply(b, w).length() != b.length() - w.length())
      throw PreconditionError("check_cancel(drop): requires l(bw) = l(b) - l(w)");
  } else {
    if (sys.multiply(a, w).length() != a.length() + w.length())
      throw PreconditionError("check_cancel(box): requires l(aw) = l(a) + l(w)");
  }
  return sys.bruhat_leq(a, b);
}

}  // namespace renner
