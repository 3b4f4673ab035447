#pragma once

// Consequences of the closed form: gauge directions, alternating sums over
// form degree, projector inequalities and the sign classification of
// critical metrics.

#include <optional>
#include <string>
#include <vector>

#include "zetahess/exactalg.hpp"
#include "zetahess/symbolengine.hpp"
#include "zetahess/variation.hpp"

namespace zetahess {

/// xi (x) eta + eta (x) xi
PerturbH gauge_perturbation(const Covector& xi, const Covector& eta);

/// Polarized form B(k, h) = (Q(k+h) - Q(k-h)) / 4 of the grouped symbol.
SPoly polarized_symbol(const VariationTensor& vt, const PerturbH& k, const PerturbH& h, const Covector& xi);

/// B(k, xi (x) eta + eta (x) xi) at covector xi.  Zero for every k.
SPoly gauge_kernel_check(const VariationTensor& vt, const PerturbH& k, const Covector& xi, const Covector& eta);
SPoly gauge_kernel_check(OperatorKind op, int n, int p, const PerturbH& k, const Covector& xi, const Covector& eta);

/// sum_p (-1)^{p+1} p^k rho_p, with 0^0 = 1.  rho_by_degree[p] holds rho_p.
SPoly torsion_combination(const std::vector<SPoly>& rho_by_degree, int k);
/// The same with rho_p from the grouped route for every 0 <= p <= n.
SPoly torsion_sum(OperatorKind op, int n, int k, const PerturbH& h, const Covector& xi);

/// Exact survey of the projector-trace inequalities at one (h, xi).
struct InequalitySurvey {
  ProjectorTraces traces;
  /// h = xi (x) eta + eta (x) xi for the solved eta.
  bool gauge = false;
  std::vector<Rational> eta;
  bool t2_positive = false;
  bool t1sq_nonnegative = false;
  /// (tr H Pi)^2 <= (n-1) tr((H Pi)^2)
  bool cauchy_schwarz = false;
  /// tr((H Pi)^2) / (n-1) >= (tr H Pi)^2, the reversed reading.
  bool reversed_reading = false;
  /// Positivity for non-gauge h, plus the Cauchy-Schwarz bound.
  bool holds() const { return (gauge || t2_positive) && t1sq_nonnegative && cauchy_schwarz; }
};

/// Throws DimensionMismatch if h and xi disagree on n, or n < 2.
InequalitySurvey projector_inequalities(const PerturbH& h, const Covector& xi);

enum class Classification { FiniteIndexMin, FiniteIndexMax, EssentialSaddle, Degenerate };

std::string to_string(Classification c);

/// Sign test on a = f1(S) and b = f1(S)/(n-1) + f2(S) at S = s - n/2.
/// FiniteIndexMin / FiniteIndexMax describe (d/ds)^k of the modified zeta
/// function itself: Min when (-1)^k sgn(a) > 0.
/// Throws ParameterOutOfRange unless n >= 3 and s < n/2 - 1.
Classification theorem2_classify(const FPair& f, int n, const Rational& s, int k);

/// Operator variants covered by the scan.
enum class ScanOperator { Bochner, DeRham, DStarD, DDStar };
std::string to_string(ScanOperator op);
/// The pair used for the variant; DStarD / DDStar use the alternating sums.
FPair scan_fpair(ScanOperator op, int n, int p);

struct CorollaryRow {
  ScanOperator op = ScanOperator::Bochner;
  int n = 0;
  int p = 0;
  Rational a;  ///< f1 at S = -n/2
  Rational b;  ///< f1/(n-1) + f2 at S = -n/2
  Classification cls = Classification::Degenerate;
  /// Identically zero operator (dd* on functions, d*d on top forms).
  bool trivial = false;
  /// Odd n, finite index: "det" or "1/det", whichever has finite index.
  std::optional<std::string> det_direction;
};

struct CorollaryReport {
  int n_max = 0;
  std::vector<CorollaryRow> rows;
  std::optional<int> bochner_smallest_saddle;
  /// No EssentialSaddle among DeRham, DStarD, DDStar rows.
  bool derham_family_no_saddle = true;
  /// Every odd-n finite-index de Rham family row gives det for n = 1 mod 4
  /// and 1/det for n = 3 mod 4.
  bool odd_direction_consistent = true;
};

/// Scans 3 <= n <= n_max, 0 <= p <= n at (s, k) = (0, 1).  Throws
/// ParameterOutOfRange for n_max < 4 or n_max > kMaxDimension.
CorollaryReport corollary_scan(int n_max);

/// For odd n at s = 0, Hess Z(0) = Hess Z'(0) / Gamma(-n/2), so
/// log det = -Z'(0) has finite index iff -sgn(f1) * sgn Gamma(-n/2) > 0.
/// Returns "det" or "1/det"; nullopt for even n or f1(-n/2) = 0.
std::optional<std::string> odd_det_direction(const FPair& f, int n);

struct ZetaConstants {
  int n = 0;
  double s = 0;
  /// (4 pi)^{-n/2} Gamma(1-S)^2 / Gamma(2-2S), S = s - n/2
  double c = 0;
  /// sgn Gamma(s - n/2) for odd n.
  std::optional<int> conversion_sign;
};

/// Throws GammaPole when 1-S or 2-2S is a non-positive integer, or when
/// s - n/2 is one for odd n.
ZetaConstants zeta_constants(int n, double s);

/// Sign of Gamma(x) for x off the poles; throws GammaPole on a pole.
int gamma_sign(double x);

}  // namespace zetahess
