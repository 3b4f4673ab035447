#pragma once

// Subsets of {0, ..., n-1} indexing the basis dx^I of p-forms, and the
// sign calculus on them.
//
// Indices are zero-based throughout the C++ API.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "zetahess/exactalg.hpp"

namespace zetahess {

inline constexpr int kMaxDimension = 20;

/// Binomial coefficient with C(m, k) = 0 whenever k < 0 or k > m.
std::int64_t binomial(int m, int k);

/// A p-element subset of {0, ..., n-1} stored as a bit set.
class FormIndex {
 public:
  FormIndex() = default;
  /// Throws ParameterOutOfRange if n is outside [0, kMaxDimension] or bits
  /// has members >= n.
  FormIndex(int n, std::uint32_t bits);
  static FormIndex of(int n, std::initializer_list<int> members);
  static FormIndex of(int n, const std::vector<int>& members);

  int dimension() const { return n_; }
  int degree() const;
  std::uint32_t bits() const { return bits_; }
  bool contains(int j) const { return j >= 0 && j < n_ && ((bits_ >> j) & 1U) != 0; }
  std::vector<int> members() const;
  /// I' = {0..n-1} \ I
  FormIndex complement() const;
  FormIndex with(int j) const;
  FormIndex without(int j) const;

  /// Degree first, then lexicographic on the sorted member list.
  friend std::strong_ordering operator<=>(const FormIndex& a, const FormIndex& b);
  friend bool operator==(const FormIndex& a, const FormIndex& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

  /// "{0,2}"
  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// All C(n, p) subsets of size p, in lexicographic order.
std::vector<FormIndex> enumerate_forms(int n, int p);

/// chi_I(j): 1 if j in I, else 0.  Throws ParameterOutOfRange for j outside [0, n).
int chi(const FormIndex& form, int j);
/// sgn_I(j): +1 if j in I, else -1.  Equals chi_I(j) - chi_{I'}(j).
int sgn(const FormIndex& form, int j);
/// N(i, J) = #{ j in J : j < i }.  dx^{{i} u J} = (-1)^N(i,J) dx^i ^ dx^J for i not in J.
int crossing_count(int i, const FormIndex& form);

enum class FactorKind { Chi, ChiComplement, Sgn };

/// Product shape sum_I prod_m factor_m(I, j_m) with at most four factors.
class FactorPattern {
 public:
  FactorPattern() = default;
  /// Throws std::invalid_argument for more than four factors.
  explicit FactorPattern(std::vector<FactorKind> factors);
  FactorPattern(std::initializer_list<FactorKind> factors)
      : FactorPattern(std::vector<FactorKind>(factors)) {}

  static FactorPattern repeated(FactorKind kind, int count);

  const std::vector<FactorKind>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::string to_string() const;

 private:
  std::vector<FactorKind> factors_;
};

/// Value of one summand prod_m factor_m(I, fixed_m).
int pattern_value(const FactorPattern& pattern, const FormIndex& form, const std::vector<int>& fixed);

/// Brute-force subset sum beside the closed form for the same fixed indices.
struct IdentitySum {
  Rational brute;
  Rational closed;
  /// True when `closed` came from one of the printed formulas (chi chi',
  /// sgn sgn, distinct sgn^4) rather than the generic reduction.
  bool printed_formula = false;
  bool agrees() const { return brute == closed; }
};

/// sum over all subsets I of size p of prod_m factor_m(I, fixed_m).
///
/// The closed form merges coincident fixed indices (sgn^2 = 1, chi sgn = chi,
/// chi chi' = 0, ...) and then evaluates the free term of the reduced pattern.
/// Throws std::invalid_argument if |fixed| != |pattern|, ParameterOutOfRange
/// for indices outside [0, n).
IdentitySum identity_sum(int n, int p, const FactorPattern& pattern, const std::vector<int>& fixed);

/// Value of the subset sum when all fixed indices are distinct, obtained by
/// expanding sgn = chi - chi' and counting subsets by inclusion pattern.
/// Throws ParameterOutOfRange if n < |pattern|.
Rational free_term(int n, int p, const FactorPattern& pattern);

/// sum_I chi_I(i) chi_{I'}(j) = C(n-2, p-1) (1 - delta_ij)
Rational chi_chicomp_closed(int n, int p, int i, int j);
/// sum_I sgn_I(j) sgn_I(k) = C(n,p) - 4 C(n-2,p-1) + 4 C(n-2,p-1) delta_jk
Rational sgn_sgn_closed(int n, int p, int j, int k);
/// Free term of sum_I sgn_I(i) sgn_I(j) sgn_I(k) sgn_I(l):
/// 16 C(n-4,p-2) - 8 C(n-2,p-1) + C(n,p)
Rational sgn4_free_term_closed(int n, int p);

}  // namespace zetahess
