#pragma once

// Total-degree-2 part of the variation of the Bochner and de Rham
// Laplacians on p-forms, as coefficient tensors over pairs of form indices.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetahess/exactalg.hpp"
#include "zetahess/formcombi.hpp"

namespace zetahess {

enum class OperatorKind { Bochner, DeRham };

std::string to_string(OperatorKind op);
/// Accepts "bochner" and "derham"; throws std::invalid_argument otherwise.
OperatorKind parse_operator(const std::string& name);

/// Four index slots of one tensor coefficient.
using Slots = std::array<int, 4>;
using SlotMap = std::map<Slots, Rational>;

/// Coefficients of one (K, I) matrix entry, summed over ordered pairs.
///
///   second: (j,k,a,b) -> coefficient of h_jk d^2_ab
///   first:  (j,k,c,a) -> coefficient of (d_c h_jk) d_a
///   zeroth: (j,k,c,d) -> coefficient of d^2_cd h_jk
struct MatrixEntry {
  SlotMap second;
  SlotMap first;
  SlotMap zeroth;
  bool empty() const { return second.empty() && first.empty() && zeroth.empty(); }
};

/// (K, I): K is the input component, I the output row.
using FormPair = std::pair<FormIndex, FormIndex>;

class VariationTensor {
 public:
  VariationTensor(OperatorKind op, int n, int p, std::map<FormPair, MatrixEntry> entries);

  OperatorKind op() const { return op_; }
  int dimension() const { return n_; }
  int degree() const { return p_; }
  const std::vector<FormIndex>& forms() const { return forms_; }
  const std::map<FormPair, MatrixEntry>& entries() const { return entries_; }
  /// nullptr when the entry vanishes identically.
  const MatrixEntry* find(const FormIndex& k, const FormIndex& i) const;

 private:
  OperatorKind op_;
  int n_;
  int p_;
  std::vector<FormIndex> forms_;
  std::map<FormPair, MatrixEntry> entries_;
};

/// Throws ParameterOutOfRange unless 2 <= n <= kMaxDimension and 0 <= p <= n.
VariationTensor variation_tensor(OperatorKind op, int n, int p);

/// First-derivative jet of h: (c, j, k) -> d_c h_jk, absent keys are zero.
using FirstJet = std::map<std::array<int, 3>, Rational>;

/// G_i^{jk} = (d_i h_jk + d_j h_ik - d_k h_ij) / 2
Rational christoffel_variation(const FirstJet& dh, int i, int j, int k);

/// One contracted coefficient: value multiplies xi_a xi_b (or the derivative
/// pair it stands for).
struct SlotTerm {
  int a;
  int b;
  Rational value;
};

/// A matrix entry contracted with h on its (j,k) slots, leaving the two
/// derivative slots open.
struct ContractedEntry {
  std::vector<SlotTerm> second;
  std::vector<SlotTerm> first;
  std::vector<SlotTerm> zeroth;
};

std::map<FormPair, ContractedEntry> contract_with_h(const VariationTensor& vt, const PerturbH& h);

/// sum over terms of value * xi_a xi_b
Rational contract_xi(const std::vector<SlotTerm>& terms, const Covector& xi);

/// Coefficient symbols and their (k, l) components, per matrix entry.
struct CoeffSymbolSet {
  int n = 0;
  /// Diagonal entries only, keyed by I.
  std::map<FormIndex, Rational> sigma2;
  std::map<FormPair, Rational> sigma1;
  std::map<FormPair, Rational> sigma0;
  /// Row-major n x n components per entry; sigma1 comp (k, l) has k on h
  /// and l on the section.
  std::map<FormPair, std::vector<Rational>> sigma1_comp;
  std::map<FormPair, std::vector<Rational>> sigma0_comp;

  /// Zero for absent entries.
  Rational s2(const FormIndex& i) const;
  Rational s1(const FormIndex& k, const FormIndex& i) const;
  Rational s0(const FormIndex& k, const FormIndex& i) const;
  Rational s1_comp(int k, int l, const FormIndex& kk, const FormIndex& ii) const;
  Rational s0_comp(int k, int l, const FormIndex& kk, const FormIndex& ii) const;
};

/// Throws DimensionMismatch if h, xi and the tensor disagree on n.
CoeffSymbolSet coefficient_symbols(const VariationTensor& vt, const PerturbH& h, const Covector& xi);

}  // namespace zetahess
