#include <stdexcept>

#include "zetahess/variation.hpp"

namespace zetahess {

std::string to_string(OperatorKind op) { return op == OperatorKind::Bochner ? "bochner" : "derham"; }

OperatorKind parse_operator(const std::string& name) {
  if (name == "bochner") return OperatorKind::Bochner;
  if (name == "derham") return OperatorKind::DeRham;
  throw std::invalid_argument("unknown operator '" + name + "'");
}

VariationTensor::VariationTensor(OperatorKind op, int n, int p, std::map<FormPair, MatrixEntry> entries)
    : op_(op), n_(n), p_(p), forms_(enumerate_forms(n, p)), entries_(std::move(entries)) {}

const MatrixEntry* VariationTensor::find(const FormIndex& k, const FormIndex& i) const {
  auto it = entries_.find({k, i});
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

class Builder {
 public:
  enum Kind { Second, First, Zeroth };

  void add(const FormIndex& k, const FormIndex& i, Kind kind, Slots slots, const Rational& v) {
    MatrixEntry& e = entries_[{k, i}];
    SlotMap& m = kind == Second ? e.second : kind == First ? e.first : e.zeroth;
    m[slots] += v;
  }

  std::map<FormPair, MatrixEntry> finish() {
    for (auto it = entries_.begin(); it != entries_.end();) {
      for (SlotMap* m : {&it->second.second, &it->second.first, &it->second.zeroth})
        std::erase_if(*m, [](const auto& kv) { return kv.second == 0; });
      it = it->second.empty() ? entries_.erase(it) : std::next(it);
    }
    return std::move(entries_);
  }

 private:
  std::map<FormPair, MatrixEntry> entries_;
};

int parity_sign(int count) { return count % 2 == 0 ? 1 : -1; }

void add_diagonal(Builder& b, OperatorKind op, const FormIndex& I, int n) {
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.add(I, I, Builder::Second, {i, j, i, j}, 1);
      b.add(I, I, Builder::First, {i, j, i, j}, 1);
      if (op == OperatorKind::Bochner) {
        b.add(I, I, Builder::First, {i, i, j, j}, half * sgn(I, i));
        if (I.contains(i)) b.add(I, I, Builder::Zeroth, {i, i, j, j}, half);
      } else {
        b.add(I, I, Builder::First, {j, j, i, i}, half * sgn(I, j));
        if (I.contains(i) && !I.contains(j)) b.add(I, I, Builder::Zeroth, {i, j, i, j}, 1);
        if (I.contains(i)) b.add(I, I, Builder::Zeroth, {j, j, i, i}, half * sgn(I, j));
      }
    }
}

// K = J + {k}, I = J + {i}.
void add_single_swap(Builder& b, OperatorKind op, const FormIndex& I, int n) {
  const Rational half(1, 2);
  for (int i : I.members()) {
    const FormIndex J = I.without(i);
    for (int k = 0; k < n; ++k) {
      if (I.contains(k)) continue;
      const FormIndex K = J.with(k);
      const Rational s = parity_sign(crossing_count(i, J) + crossing_count(k, J));
      for (int j = 0; j < n; ++j) {
        b.add(K, I, Builder::First, {j, k, i, j}, s);
        b.add(K, I, Builder::First, {i, k, j, j}, s);
        b.add(K, I, Builder::First, {i, j, k, j}, -s);
        if (op == OperatorKind::Bochner) {
          b.add(K, I, Builder::Zeroth, {j, k, i, j}, half * s);
          b.add(K, I, Builder::Zeroth, {i, j, j, k}, -half * s);
          b.add(K, I, Builder::Zeroth, {i, k, j, j}, half * s);
        } else {
          b.add(K, I, Builder::Zeroth, {j, k, i, j}, s);
          b.add(K, I, Builder::Zeroth, {j, j, i, k}, -half * s);
          if (I.contains(j)) {
            b.add(K, I, Builder::Zeroth, {j, j, i, k}, s);
            b.add(K, I, Builder::Zeroth, {i, k, j, j}, s);
            b.add(K, I, Builder::Zeroth, {j, k, i, j}, -s);
            b.add(K, I, Builder::Zeroth, {i, j, j, k}, -s);
          }
        }
      }
    }
  }
}

// de Rham only: L = J + {k, l}, I = J + {i, j}, i < j and k < l outside I.
void add_double_swap(Builder& b, const FormIndex& I, int n) {
  const auto members = I.members();
  for (std::size_t x = 0; x < members.size(); ++x)
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      const int i = members[x], j = members[y];
      const FormIndex J = I.without(i).without(j);
      for (int k = 0; k < n; ++k) {
        if (I.contains(k)) continue;
        for (int l = k + 1; l < n; ++l) {
          if (I.contains(l)) continue;
          const FormIndex L = J.with(k).with(l);
          const Rational s = parity_sign(crossing_count(i, J) + crossing_count(j, J) +
                                         crossing_count(k, J) + crossing_count(l, J));
          b.add(L, I, Builder::Zeroth, {j, l, i, k}, s);
          b.add(L, I, Builder::Zeroth, {i, k, j, l}, s);
          b.add(L, I, Builder::Zeroth, {j, k, i, l}, -s);
          b.add(L, I, Builder::Zeroth, {i, l, j, k}, -s);
        }
      }
    }
}

}  // namespace

VariationTensor variation_tensor(OperatorKind op, int n, int p) {
  if (n < 2 || n > kMaxDimension) throw ParameterOutOfRange("variation_tensor: n must lie in [2, 20]");
  if (p < 0 || p > n) throw ParameterOutOfRange("variation_tensor: p must lie in [0, n]");
  Builder b;
  for (const auto& I : enumerate_forms(n, p)) {
    add_diagonal(b, op, I, n);
    add_single_swap(b, op, I, n);
    if (op == OperatorKind::DeRham) add_double_swap(b, I, n);
  }
  return VariationTensor(op, n, p, b.finish());
}

Rational christoffel_variation(const FirstJet& dh, int i, int j, int k) {
  auto at = [&](int c, int a, int b) -> Rational {
    auto it = dh.find({c, a, b});
    return it == dh.end() ? Rational(0) : it->second;
  };
  return Rational(1, 2) * (at(i, j, k) + at(j, i, k) - at(k, i, j));
}

namespace {

std::vector<SlotTerm> contract_map(const SlotMap& m, const PerturbH& h) {
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [s, v] : m) {
    const Rational& hv = h(s[0], s[1]);
    if (hv != 0) acc[{s[2], s[3]}] += v * hv;
  }
  std::vector<SlotTerm> out;
  for (const auto& [ab, v] : acc)
    if (v != 0) out.push_back({ab.first, ab.second, v});
  return out;
}

std::vector<Rational> dense(const std::vector<SlotTerm>& terms, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n * n));
  for (const auto& t : terms) out[static_cast<std::size_t>(t.a * n + t.b)] += t.value;
  return out;
}

}  // namespace

std::map<FormPair, ContractedEntry> contract_with_h(const VariationTensor& vt, const PerturbH& h) {
  if (h.dimension() != vt.dimension()) throw DimensionMismatch("contract_with_h: dimension mismatch");
  std::map<FormPair, ContractedEntry> out;
  for (const auto& [key, e] : vt.entries())
    out.emplace(key, ContractedEntry{contract_map(e.second, h), contract_map(e.first, h), contract_map(e.zeroth, h)});
  return out;
}

Rational contract_xi(const std::vector<SlotTerm>& terms, const Covector& xi) {
  Rational r;
  for (const auto& t : terms) r += t.value * xi[t.a] * xi[t.b];
  return r;
}

namespace {

template <class Map, class Key>
Rational lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

Rational CoeffSymbolSet::s2(const FormIndex& i) const { return lookup(sigma2, i); }
Rational CoeffSymbolSet::s1(const FormIndex& k, const FormIndex& i) const { return lookup(sigma1, FormPair{k, i}); }
Rational CoeffSymbolSet::s0(const FormIndex& k, const FormIndex& i) const { return lookup(sigma0, FormPair{k, i}); }

Rational CoeffSymbolSet::s1_comp(int k, int l, const FormIndex& kk, const FormIndex& ii) const {
  auto it = sigma1_comp.find({kk, ii});
  return it == sigma1_comp.end() ? Rational(0) : it->second[static_cast<std::size_t>(k * n + l)];
}

Rational CoeffSymbolSet::s0_comp(int k, int l, const FormIndex& kk, const FormIndex& ii) const {
  auto it = sigma0_comp.find({kk, ii});
  return it == sigma0_comp.end() ? Rational(0) : it->second[static_cast<std::size_t>(k * n + l)];
}

CoeffSymbolSet coefficient_symbols(const VariationTensor& vt, const PerturbH& h, const Covector& xi) {
  if (xi.dimension() != vt.dimension()) throw DimensionMismatch("coefficient_symbols: dimension mismatch");
  const int n = vt.dimension();
  CoeffSymbolSet css;
  css.n = n;
  for (const auto& [key, e] : contract_with_h(vt, h)) {
    if (!e.second.empty()) {
      if (!(key.first == key.second)) throw std::logic_error("second-order term off the diagonal");
      css.sigma2[key.first] = contract_xi(e.second, xi);
    }
    css.sigma1[key] = contract_xi(e.first, xi);
    css.sigma0[key] = contract_xi(e.zeroth, xi);
    css.sigma1_comp[key] = dense(e.first, n);
    css.sigma0_comp[key] = dense(e.zeroth, n);
  }
  return css;
}

}  // namespace zetahess
