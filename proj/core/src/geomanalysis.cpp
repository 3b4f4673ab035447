#include <cmath>
#include <numbers>

#include "zetahess/geomanalysis.hpp"

namespace zetahess {

PerturbH gauge_perturbation(const Covector& xi, const Covector& eta) {
  if (xi.dimension() != eta.dimension()) throw DimensionMismatch("gauge_perturbation: dimension mismatch");
  return PerturbH::symmetric_outer(xi.components(), eta.components());
}

SPoly polarized_symbol(const VariationTensor& vt, const PerturbH& k, const PerturbH& h, const Covector& xi) {
  const SPoly plus = grouped_symbol(vt, k + h, xi).value;
  const SPoly minus = grouped_symbol(vt, k - h, xi).value;
  return Rational(1, 4) * (plus - minus);
}

SPoly gauge_kernel_check(const VariationTensor& vt, const PerturbH& k, const Covector& xi, const Covector& eta) {
  return polarized_symbol(vt, k, gauge_perturbation(xi, eta), xi);
}

SPoly gauge_kernel_check(OperatorKind op, int n, int p, const PerturbH& k, const Covector& xi, const Covector& eta) {
  return gauge_kernel_check(variation_tensor(op, n, p), k, xi, eta);
}

SPoly torsion_combination(const std::vector<SPoly>& rho_by_degree, int k) {
  if (k < 0) throw ParameterOutOfRange("torsion weight exponent must be non-negative");
  SPoly total;
  for (std::size_t p = 0; p < rho_by_degree.size(); ++p) {
    mpz_class weight;
    mpz_ui_pow_ui(weight.get_mpz_t(), p, static_cast<unsigned long>(k));
    if (p % 2 == 0) weight = -weight;
    total += Rational(weight) * rho_by_degree[p];
  }
  return total;
}

SPoly torsion_sum(OperatorKind op, int n, int k, const PerturbH& h, const Covector& xi) {
  std::vector<SPoly> rho;
  for (int p = 0; p <= n; ++p) rho.push_back(grouped_symbol(op, n, p, h, xi).value);
  return torsion_combination(rho, k);
}

InequalitySurvey projector_inequalities(const PerturbH& h, const Covector& xi) {
  const int n = h.dimension();
  if (xi.dimension() != n) throw DimensionMismatch("projector_inequalities: dimension mismatch");
  if (n < 2) throw ParameterOutOfRange("projector_inequalities: need n >= 2");
  InequalitySurvey r;
  r.traces = projector_traces(h, xi);

  // The only candidate: contracting h = xi eta^T + eta xi^T with xi twice
  // and once determines eta.
  const Rational& x2 = xi.norm2();
  const Rational xhx = scalar_invariants(h, xi).xhx;
  const auto hxi = apply(h, xi);
  r.eta.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    r.eta[static_cast<std::size_t>(i)] = hxi[static_cast<std::size_t>(i)] / x2 - xhx / (2 * x2 * x2) * xi[i];
  r.gauge = PerturbH::symmetric_outer(xi.components(), r.eta) == h;

  const Rational nm1 = n - 1;
  r.t2_positive = r.traces.t2 > 0;
  r.t1sq_nonnegative = r.traces.t1sq >= 0;
  r.cauchy_schwarz = r.traces.t1sq <= nm1 * r.traces.t2;
  r.reversed_reading = r.traces.t2 / nm1 >= r.traces.t1sq;
  return r;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::FiniteIndexMin: return "FiniteIndexMin";
    case Classification::FiniteIndexMax: return "FiniteIndexMax";
    case Classification::EssentialSaddle: return "EssentialSaddle";
    case Classification::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

}  // namespace

Classification theorem2_classify(const FPair& f, int n, const Rational& s, int k) {
  if (n < 3) throw ParameterOutOfRange("theorem2_classify: need n >= 3");
  if (!(s < Rational(n, 2) - 1)) throw ParameterOutOfRange("theorem2_classify: need s < n/2 - 1");
  if (k < 0) throw ParameterOutOfRange("theorem2_classify: k must be non-negative");
  const Rational S = s - Rational(n, 2);
  const Rational a = f.f1.evaluate(S);
  const Rational b = a / (n - 1) + f.f2.evaluate(S);
  const int sa = sign_of(a), sb = sign_of(b);
  if (sa == 0 || sb == 0) return Classification::Degenerate;
  if (sa != sb) return Classification::EssentialSaddle;
  const int dir = (k % 2 == 0 ? 1 : -1) * sa;
  return dir > 0 ? Classification::FiniteIndexMin : Classification::FiniteIndexMax;
}

std::string to_string(ScanOperator op) {
  switch (op) {
    case ScanOperator::Bochner: return "bochner";
    case ScanOperator::DeRham: return "derham";
    case ScanOperator::DStarD: return "dstar_d";
    case ScanOperator::DDStar: return "d_dstar";
  }
  return "?";
}

FPair scan_fpair(ScanOperator op, int n, int p) {
  switch (op) {
    case ScanOperator::Bochner: return closed_form_fpair(OperatorKind::Bochner, n, p);
    case ScanOperator::DeRham: return closed_form_fpair(OperatorKind::DeRham, n, p);
    case ScanOperator::DStarD: return dstar_d_fpair(n, p).alt_sum;
    case ScanOperator::DDStar: return d_dstar_fpair(n, p);
  }
  throw std::invalid_argument("unknown scan operator");
}

int gamma_sign(double x) {
  if (x > 0) return 1;
  if (x == std::floor(x)) throw GammaPole("Gamma has a pole at a non-positive integer");
  return static_cast<long>(std::ceil(-x)) % 2 == 0 ? 1 : -1;
}

std::optional<std::string> odd_det_direction(const FPair& f, int n) {
  if (n % 2 == 0) return std::nullopt;
  const int s1 = sign_of(f.f1.evaluate(Rational(-n, 2)));
  if (s1 == 0) return std::nullopt;
  const int conv = gamma_sign(-0.5 * n);
  return -s1 * conv > 0 ? "det" : "1/det";
}

CorollaryReport corollary_scan(int n_max) {
  if (n_max < 4 || n_max > kMaxDimension) throw ParameterOutOfRange("corollary_scan: need 4 <= n_max <= 20");
  CorollaryReport rep;
  rep.n_max = n_max;
  for (ScanOperator op : {ScanOperator::Bochner, ScanOperator::DeRham, ScanOperator::DStarD, ScanOperator::DDStar})
    for (int n = 3; n <= n_max; ++n)
      for (int p = 0; p <= n; ++p) {
        const FPair f = scan_fpair(op, n, p);
        CorollaryRow row;
        row.op = op;
        row.n = n;
        row.p = p;
        const Rational S(-n, 2);
        row.a = f.f1.evaluate(S);
        row.b = row.a / (n - 1) + f.f2.evaluate(S);
        row.cls = theorem2_classify(f, n, 0, 1);
        row.trivial = f.is_zero();
        const bool finite = row.cls == Classification::FiniteIndexMin || row.cls == Classification::FiniteIndexMax;
        if (finite) row.det_direction = odd_det_direction(f, n);

        if (op == ScanOperator::Bochner) {
          if (row.cls == Classification::EssentialSaddle &&
              (!rep.bochner_smallest_saddle || n < *rep.bochner_smallest_saddle))
            rep.bochner_smallest_saddle = n;
        } else {
          if (row.cls == Classification::EssentialSaddle) rep.derham_family_no_saddle = false;
          if (n % 2 == 1 && !row.trivial) {
            const std::string expected = n % 4 == 1 ? "det" : "1/det";
            if (!finite || row.det_direction != expected) rep.odd_direction_consistent = false;
          }
        }
        rep.rows.push_back(std::move(row));
      }
  return rep;
}

ZetaConstants zeta_constants(int n, double s) {
  if (n < 1) throw ParameterOutOfRange("zeta_constants: need n >= 1");
  const double S = s - 0.5 * n;
  const double g1 = 1 - S, g2 = 2 - 2 * S;
  if ((g1 <= 0 && g1 == std::floor(g1)) || (g2 <= 0 && g2 == std::floor(g2)))
    throw GammaPole("C(n,s): Gamma argument at a pole");
  ZetaConstants z;
  z.n = n;
  z.s = s;
  const double gamma1 = std::tgamma(g1);
  z.c = std::pow(4 * std::numbers::pi, -0.5 * n) * gamma1 * gamma1 / std::tgamma(g2);
  if (n % 2 == 1) z.conversion_sign = gamma_sign(S);
  return z;
}

}  // namespace zetahess
