#pragma once

// Exact scalar and polynomial arithmetic for symbol computations.
//
// All symbols computed by this library are polynomials in the shifted
// spectral parameter S = s - n/2 with rational coefficients.  Perturbations
// h and covectors xi are concrete rational data in coordinates that are
// orthonormal for the background metric, so H = h g^{-1} is just h.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetahess/error.hpp"

namespace zetahess {

using Rational = mpq_class;

/// Canonical text form: "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on bad input.
Rational parse_rational(const std::string& text);

/// Exact polynomial in S with rational coefficients.
///
/// Coefficients are stored by ascending power with trailing zeros removed,
/// so equality is structural.
class SPoly {
 public:
  SPoly() = default;
  SPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  SPoly(long constant);             // NOLINT(google-explicit-constructor)
  explicit SPoly(std::vector<Rational> ascending);

  /// The monomial S.
  static SPoly variable();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of S^power (zero beyond the degree).
  Rational coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& s_shifted) const;
  double evaluate(double s_shifted) const;

  SPoly& operator+=(const SPoly& other);
  SPoly& operator-=(const SPoly& other);
  SPoly& operator*=(const SPoly& other);
  SPoly& operator*=(const Rational& factor);

  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(SPoly a, const SPoly& b) { return a *= b; }
  friend SPoly operator*(SPoly a, const Rational& b) { return a *= b; }
  friend SPoly operator*(const Rational& a, SPoly b) { return b *= a; }
  SPoly operator-() const;

  friend bool operator==(const SPoly& a, const SPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Descending powers of S, explicit rational coefficients, e.g.
  /// "8*S^2+8*S-3", "4*S-1/2", "S^2+S-1/2", "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const SPoly& p);

/// Symmetric perturbation h in S^2_x M, written in g-orthonormal coordinates.
class PerturbH {
 public:
  PerturbH() = default;
  /// Throws std::invalid_argument unless rows form a symmetric square matrix.
  explicit PerturbH(const std::vector<std::vector<Rational>>& rows);
  PerturbH(std::initializer_list<std::initializer_list<long>> rows);

  static PerturbH zero(int n);
  static PerturbH identity(int n);
  /// a b^T + b a^T
  static PerturbH symmetric_outer(const std::vector<Rational>& a, const std::vector<Rational>& b);

  int dimension() const { return n_; }
  const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }
  bool is_diagonal() const;

  /// Sets both (i,j) and (j,i).
  void set(int i, int j, const Rational& value);

  PerturbH& operator+=(const PerturbH& other);
  PerturbH& operator-=(const PerturbH& other);
  PerturbH& operator*=(const Rational& factor);
  friend PerturbH operator+(PerturbH a, const PerturbH& b) { return a += b; }
  friend PerturbH operator-(PerturbH a, const PerturbH& b) { return a -= b; }
  friend PerturbH operator*(const Rational& f, PerturbH a) { return a *= f; }
  friend bool operator==(const PerturbH& a, const PerturbH& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<Rational> entries_;
};

/// A non-zero covector xi.
class Covector {
 public:
  /// Throws ZeroCovector if all components vanish.
  explicit Covector(std::vector<Rational> components);
  Covector(std::initializer_list<long> components);

  /// e_i in dimension n.
  static Covector unit(int n, int i);

  int dimension() const { return static_cast<int>(components_.size()); }
  const Rational& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& components() const { return components_; }
  /// |xi|^2 > 0.
  const Rational& norm2() const { return norm2_; }

  Covector scaled(const Rational& factor) const;
  std::string to_string() const;

 private:
  std::vector<Rational> components_;
  Rational norm2_;
};

/// The scalar invariants |h|^2, |h.xi|^2, xi.h.xi, tr h and |xi|^2.
struct ScalarInvariants {
  Rational hnorm2;
  Rational hxi2;
  Rational xhx;
  Rational trh;
  Rational xi2;
};

ScalarInvariants scalar_invariants(const PerturbH& h, const Covector& xi);

/// (h.xi)_i = sum_j h_ij xi_j
std::vector<Rational> apply(const PerturbH& h, const Covector& xi);

/// t2 = tr((H Pi^perp)^2), t1sq = (tr H Pi^perp)^2.
struct ProjectorTraces {
  Rational t2;
  Rational t1sq;
  friend bool operator==(const ProjectorTraces&, const ProjectorTraces&) = default;
};

/// Explicit matrix products with Pi^perp = I - xi xi^T / |xi|^2.
ProjectorTraces projector_traces_matrix(const PerturbH& h, const Covector& xi);
/// Expansion in the scalar invariants.
ProjectorTraces projector_traces_expansion(const PerturbH& h, const Covector& xi);
/// Both routes; throws RouteMismatch if they differ.
ProjectorTraces projector_traces(const PerturbH& h, const Covector& xi);

/// Quadratic form in h over the invariant basis
///   |xi|^4|h|^2, |xi|^2|h.xi|^2, (xi.h.xi)^2, |xi|^2 (tr h)(xi.h.xi), |xi|^4 (tr h)^2.
struct InvariantVector {
  std::array<SPoly, 5> c;

  InvariantVector& operator+=(const InvariantVector& other);
  friend InvariantVector operator+(InvariantVector a, const InvariantVector& b) { return a += b; }
  friend InvariantVector operator*(const SPoly& f, InvariantVector v) {
    for (auto& x : v.c) x *= f;
    return v;
  }
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  bool is_zero() const;
  std::string to_string() const;
};

/// The five basis invariants evaluated at (h, xi), with their |xi|^2 powers.
std::array<Rational, 5> invariant_basis_values(const PerturbH& h, const Covector& xi);

/// Coefficient pair of tr((H Pi^perp)^2) and (tr H Pi^perp)^2.
struct FPair {
  SPoly f1;
  SPoly f2;
  friend bool operator==(const FPair&, const FPair&) = default;
  friend FPair operator+(const FPair& a, const FPair& b) { return {a.f1 + b.f1, a.f2 + b.f2}; }
  friend FPair operator*(const Rational& k, const FPair& a) { return {k * a.f1, k * a.f2}; }
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
};

/// (f1, f2) -> (f1, -2 f1, f1 + f2, -2 f2, f2)
InvariantVector fpair_to_invariant(const FPair& f);

/// Residual (c2 + 2c1, c3 - c1 - c5, c4 + 2c5); zero iff v is in the projector span.
std::array<SPoly, 3> projector_span_residual(const InvariantVector& v);

class NotInProjectorSpan : public std::domain_error {
 public:
  explicit NotInProjectorSpan(std::array<SPoly, 3> residual);
  const std::array<SPoly, 3>& residual() const { return residual_; }

 private:
  std::array<SPoly, 3> residual_;
};

/// Inverse of fpair_to_invariant on its image; throws NotInProjectorSpan.
FPair invariant_to_fpair(const InvariantVector& v);

/// sum_i c_i(S) * value_i(h, xi): the reduced symbol rho(S).
SPoly evaluate_reduced(const InvariantVector& v, const PerturbH& h, const Covector& xi);

}  // namespace zetahess
