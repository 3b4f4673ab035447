#pragma once

// The reduced Hessian symbol rho(S), defined by
//   <h, u_s(x, xi) h> = C(n,s) |xi|^{n-2s-4} rho(S)   (times 2 on a complex line),
// computed three ways: the raw kernel double sum, the grouped decomposition
// u1 + u2 + u3 + u4, and the closed form |xi|^4 (f1 t2 + f2 t1sq).

#include <functional>
#include <optional>

#include "zetahess/exactalg.hpp"
#include "zetahess/variation.hpp"

namespace zetahess {

/// Derivative placement in one kernel slot.
enum class SlotShape {
  CoefficientHessian,  ///< (d d, I): both derivatives on h
  Split,               ///< (d, d): one on h, one on the section
  SectionHessian,      ///< (I, d d): both on the section
};

std::string to_string(SlotShape shape);

struct KernelPattern {
  SlotShape left;
  SlotShape right;
  int j, k, p, q;
};

/// Kernel coefficients grouped by the power of |xi| they multiply
/// (relative to |xi|^{n-2s}).
struct KernelValue {
  SPoly xi_minus4;
  SPoly xi_minus2;
  SPoly xi_zero;
  /// Multiplied through by |xi|^4.
  SPoly reduced(const Rational& xi2) const;
};

/// Throws ParameterOutOfRange for indices outside [0, n).
KernelValue kernel_value(const KernelPattern& pattern, const Covector& xi);

enum class LineMode { Real, Complex };

struct ReducedSymbol {
  SPoly value;
  friend bool operator==(const ReducedSymbol&, const ReducedSymbol&) = default;
  friend ReducedSymbol operator+(const ReducedSymbol& a, const ReducedSymbol& b) { return {a.value + b.value}; }
};

ReducedSymbol u_part1(const CoeffSymbolSet& css, const Covector& xi);
ReducedSymbol u_part2(const CoeffSymbolSet& css, const Covector& xi);
ReducedSymbol u_part3(const CoeffSymbolSet& css, const PerturbH& h, const Covector& xi);
/// Raw polynomial form.
ReducedSymbol u_part4(int n, int p, const PerturbH& h, const Covector& xi, LineMode mode = LineMode::Real);
/// Same quantity rewritten through the projector traces.
ReducedSymbol u_part4_projector(int n, int p, const PerturbH& h, const Covector& xi,
                                LineMode mode = LineMode::Real);

ReducedSymbol grouped_symbol(const VariationTensor& vt, const PerturbH& h, const Covector& xi,
                             LineMode mode = LineMode::Real);
ReducedSymbol grouped_symbol(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi,
                             LineMode mode = LineMode::Real);

ReducedSymbol direct_symbol(const VariationTensor& vt, const PerturbH& h, const Covector& xi,
                            LineMode mode = LineMode::Real);
ReducedSymbol direct_symbol(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi,
                            LineMode mode = LineMode::Real);

/// Throws ParameterOutOfRange unless 0 <= p <= n.
FPair closed_form_fpair(OperatorKind op, int n, int p);

ReducedSymbol theorem1_reduced(const FPair& f, const PerturbH& h, const Covector& xi,
                               LineMode mode = LineMode::Real);
ReducedSymbol theorem1_reduced(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi,
                               LineMode mode = LineMode::Real);

/// Alternating sum of de Rham pairs against the one-dimension-lower formula.
struct DStarD {
  FPair alt_sum;
  FPair closed;
  /// alt_sum = scale * closed, when such a constant exists and closed != 0.
  std::optional<Rational> scale;
  bool proportional = false;
  /// f1 + f2 of each side: the only observable combination when n = 2,
  /// where tr((H Pi)^2) = (tr H Pi)^2.
  SPoly alt_trace_sum;
  SPoly closed_trace_sum;
};

/// d*d on p-forms: sum_{q<=p} (-1)^{p-q} f(de Rham, n, q) against f(de Rham, n-1, p),
/// both in the same variable S = s - n/2.
DStarD dstar_d_fpair(int n, int p);
/// dd* on p-forms is isospectral to d*d on (p-1)-forms; zero pair at p = 0.
FPair d_dstar_fpair(int n, int p);

/// Recovers the invariant-basis coefficients of a quadratic symbol by
/// evaluating it at five probe perturbations with xi = e_0.
/// Throws ParameterOutOfRange for n < 3 (the five invariants are linearly
/// dependent when n = 2).
using SymbolRoute = std::function<SPoly(const PerturbH&, const Covector&)>;
InvariantVector fit_invariants(int n, const SymbolRoute& route);

}  // namespace zetahess
