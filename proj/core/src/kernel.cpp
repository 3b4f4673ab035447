#include "zetahess/symbolengine.hpp"

namespace zetahess {

std::string to_string(SlotShape shape) {
  switch (shape) {
    case SlotShape::CoefficientHessian: return "(dd,I)";
    case SlotShape::Split: return "(d,d)";
    case SlotShape::SectionHessian: return "(I,dd)";
  }
  return "?";
}

SPoly KernelValue::reduced(const Rational& xi2) const {
  return xi_minus4 + xi_minus2 * xi2 + xi_zero * (xi2 * xi2);
}

namespace {

// Position in the order the printed table uses for its left slot.
int rank(SlotShape s) {
  switch (s) {
    case SlotShape::SectionHessian: return 0;
    case SlotShape::Split: return 1;
    case SlotShape::CoefficientHessian: return 2;
  }
  throw std::invalid_argument("unknown slot shape");
}

SPoly poly(long c0, long c1, long c2) { return SPoly(std::vector<Rational>{c0, c1, c2}); }

}  // namespace

KernelValue kernel_value(const KernelPattern& pat, const Covector& xi) {
  const int n = xi.dimension();
  for (int x : {pat.j, pat.k, pat.p, pat.q})
    if (x < 0 || x >= n) throw ParameterOutOfRange("kernel_value: index out of range");

  if (rank(pat.left) > rank(pat.right))
    return kernel_value({pat.right, pat.left, pat.p, pat.q, pat.j, pat.k}, xi);

  const int j = pat.j, k = pat.k, p = pat.p, q = pat.q;
  auto d = [](int a, int b) -> long { return a == b ? 1 : 0; };
  const Rational X = xi[j] * xi[k] * xi[p] * xi[q];
  const SPoly S = SPoly::variable();
  const Rational half(1, 2);

  KernelValue v;
  using Sh = SlotShape;
  if (pat.left == Sh::CoefficientHessian) {  // both CoefficientHessian
    v.xi_minus4 = Rational(4) * poly(-1, 0, 4) * X;
  } else if (pat.left == Sh::Split && pat.right == Sh::CoefficientHessian) {
    v.xi_minus4 = Rational(-2) * poly(-1, 0, 4) * X;
  } else if (pat.left == Sh::Split) {
    v.xi_minus4 = poly(-2, 2, 4) * X;
    v.xi_minus2 = -poly(-1, 2, 0) * Rational(d(k, q) * xi[j] * xi[p]);
  } else if (pat.right == Sh::CoefficientHessian) {
    v.xi_minus4 = poly(0, -2, 4) * X;
    v.xi_minus2 = poly(-1, 2, 0) * Rational(d(j, k) * xi[p] * xi[q]);
  } else if (pat.right == Sh::Split) {
    v.xi_minus4 = -poly(-1, 1, 2) * X;
    const Rational D = -d(j, k) * xi[p] * xi[q] + d(j, q) * xi[k] * xi[p] + d(k, q) * xi[j] * xi[p];
    v.xi_minus2 = (S - SPoly(half)) * D;
  } else {
    v.xi_minus4 = poly(0, 1, 1) * X;
    const Rational pair = d(j, k) * xi[p] * xi[q] + xi[j] * xi[k] * d(p, q);
    const Rational cross = d(j, p) * xi[k] * xi[q] + d(k, q) * xi[j] * xi[p] +
                           d(j, q) * xi[k] * xi[p] + d(k, p) * xi[j] * xi[q];
    v.xi_minus2 = half * (S - SPoly(1)) * pair - half * S * cross;
    v.xi_zero = SPoly(Rational(d(j, k) * d(p, q) + d(j, p) * d(k, q) + d(j, q) * d(k, p), 4));
  }
  return v;
}

}  // namespace zetahess
