#include <array>

#include "zetahess/symbolengine.hpp"

namespace zetahess {

namespace {

void check_dims(int n, const PerturbH& h, const Covector& xi) {
  if (h.dimension() != n || xi.dimension() != n) throw DimensionMismatch("symbol: dimension mismatch");
}

Rational line_factor(LineMode mode) { return mode == LineMode::Complex ? 2 : 1; }

Rational dim_e(int n, int p, LineMode mode) { return Rational(binomial(n, p)) * line_factor(mode); }

template <class Map>
Rational lookup(const Map& m, const FormPair& key) {
  auto it = m.find(key);
  return it == m.end() ? Rational(0) : it->second;
}

// sum_i xi_i sigma1_comp(i, j), as a vector over j
std::vector<Rational> xi_row(const std::vector<Rational>& comp, const Covector& xi) {
  const int n = xi.dimension();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] += xi[i] * comp[static_cast<std::size_t>(i * n + j)];
  return out;
}

}  // namespace

// ------------------------------------------------------------- grouped route

ReducedSymbol u_part1(const CoeffSymbolSet& css, const Covector& xi) {
  (void)xi;
  auto g = [&](const FormPair& key) {
    Rational v = 4 * lookup(css.sigma0, key) - 2 * lookup(css.sigma1, key);
    if (key.first == key.second) v += css.s2(key.first);
    return v;
  };
  Rational tr;
  for (const auto& [key, unused] : css.sigma1) tr += g(key) * g({key.second, key.first});
  return {SPoly(std::vector<Rational>{Rational(-1, 4), 0, 1}) * tr};
}

ReducedSymbol u_part2(const CoeffSymbolSet& css, const Covector& xi) {
  const Rational& x2 = xi.norm2();
  Rational tr;
  for (const auto& [key, s1] : css.sigma1) {
    const FormPair back{key.second, key.first};
    auto it = css.sigma1_comp.find(back);
    if (it == css.sigma1_comp.end()) continue;
    tr += s1 * lookup(css.sigma1, back);
    const auto a = xi_row(css.sigma1_comp.at(key), xi);
    const auto b = xi_row(it->second, xi);
    Rational dot;
    for (std::size_t j = 0; j < a.size(); ++j) dot += a[j] * b[j];
    tr -= x2 * dot;
  }
  return {SPoly(std::vector<Rational>{-1, 2}) * tr};
}

ReducedSymbol u_part3(const CoeffSymbolSet& css, const PerturbH& h, const Covector& xi) {
  const int n = css.n;
  check_dims(n, h, xi);
  const auto inv = scalar_invariants(h, xi);
  const auto hxi = apply(h, xi);
  Rational tr;
  for (const auto& [key, s1] : css.sigma1) {
    if (!(key.first == key.second)) continue;
    const Rational s0 = lookup(css.sigma0, key);
    tr += inv.xhx * (-s1 - 2 * s0) + inv.xi2 * inv.trh * (-s1 + 2 * s0);
    const auto& comp = css.sigma1_comp.at(key);
    Rational mixed;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mixed += comp[static_cast<std::size_t>(i * n + j)] *
                 (xi[i] * hxi[static_cast<std::size_t>(j)] + xi[j] * hxi[static_cast<std::size_t>(i)]);
    tr += inv.xi2 * mixed;
  }
  return {SPoly(std::vector<Rational>{-1, 2}) * tr};
}

ReducedSymbol u_part4(int n, int p, const PerturbH& h, const Covector& xi, LineMode mode) {
  check_dims(n, h, xi);
  const auto v = scalar_invariants(h, xi);
  const SPoly S = SPoly::variable();
  const Rational x4 = v.xi2 * v.xi2;
  SPoly r = SPoly(Rational(1, 2) * x4 * v.hnorm2) + Rational(-2 * v.xi2 * v.hxi2) * S +
            (S + SPoly(Rational(1, 4))) * Rational(v.xhx * v.xhx) +
            (S - SPoly(1)) * Rational(v.xi2 * v.trh * v.xhx) + SPoly(Rational(1, 4) * x4 * v.trh * v.trh);
  return {dim_e(n, p, mode) * r};
}

ReducedSymbol u_part4_projector(int n, int p, const PerturbH& h, const Covector& xi, LineMode mode) {
  check_dims(n, h, xi);
  const auto v = scalar_invariants(h, xi);
  const auto t = projector_traces(h, xi);
  const SPoly S = SPoly::variable();
  const Rational x4 = v.xi2 * v.xi2;
  SPoly r = (S - SPoly(Rational(1, 2))) * Rational(-2 * v.xi2 * v.hxi2 + v.xhx * v.xhx + v.xi2 * v.xhx * v.trh) +
            SPoly(x4 * (Rational(1, 2) * t.t2 + Rational(1, 4) * t.t1sq));
  return {dim_e(n, p, mode) * r};
}

ReducedSymbol grouped_symbol(const VariationTensor& vt, const PerturbH& h, const Covector& xi, LineMode mode) {
  check_dims(vt.dimension(), h, xi);
  const auto css = coefficient_symbols(vt, h, xi);
  const SPoly parts = u_part1(css, xi).value + u_part2(css, xi).value + u_part3(css, h, xi).value;
  return {line_factor(mode) * parts + u_part4(vt.dimension(), vt.degree(), h, xi, mode).value};
}

ReducedSymbol grouped_symbol(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi, LineMode mode) {
  return grouped_symbol(variation_tensor(op, n, p), h, xi, mode);
}

// -------------------------------------------------------------- direct route

namespace {

constexpr std::array<SlotShape, 3> kShapeOrder{SlotShape::SectionHessian, SlotShape::Split,
                                               SlotShape::CoefficientHessian};

const std::vector<SlotTerm>& terms_of(const ContractedEntry& e, int shape) {
  return shape == 0 ? e.second : shape == 1 ? e.first : e.zeroth;
}

}  // namespace

ReducedSymbol direct_symbol(const VariationTensor& vt, const PerturbH& h, const Covector& xi, LineMode mode) {
  const int n = vt.dimension();
  check_dims(n, h, xi);
  const auto contracted = contract_with_h(vt, h);
  const std::size_t n2 = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  // Accumulate trace(A_KI A_IK) weights per kernel cell, then contract
  // with the kernel once per touched cell.
  struct Cells {
    std::vector<Rational> weight;
    std::vector<char> touched;
  };
  std::array<std::array<Cells, 3>, 3> cells;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      cells[a][b].weight.resize(n2 * n2);
      cells[a][b].touched.assign(n2 * n2, 0);
    }

  Rational prod;
  for (const auto& [key, m] : contracted) {
    auto it = contracted.find({key.second, key.first});
    if (it == contracted.end()) continue;
    const ContractedEntry& m2 = it->second;
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        Cells& c = cells[a][b];
        for (const auto& t1 : terms_of(m, a)) {
          const std::size_t row = static_cast<std::size_t>(t1.a * n + t1.b) * n2;
          for (const auto& t2 : terms_of(m2, b)) {
            const std::size_t idx = row + static_cast<std::size_t>(t2.a * n + t2.b);
            mpq_mul(prod.get_mpq_t(), t1.value.get_mpq_t(), t2.value.get_mpq_t());
            c.weight[idx] += prod;
            c.touched[idx] = 1;
          }
        }
      }
  }

  SPoly total;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      const Cells& c = cells[a][b];
      std::array<Rational, 3> acc;
      for (std::size_t idx = 0; idx < c.weight.size(); ++idx) {
        if (!c.touched[idx] || c.weight[idx] == 0) continue;
        const int j = static_cast<int>(idx / (n2 * n)), k = static_cast<int>((idx / n2) % n);
        const int p = static_cast<int>((idx / n) % n), q = static_cast<int>(idx % n);
        const SPoly kv = kernel_value({kShapeOrder[a], kShapeOrder[b], j, k, p, q}, xi).reduced(xi.norm2());
        for (std::size_t e = 0; e < kv.coefficients().size(); ++e) acc[e] += c.weight[idx] * kv.coefficients()[e];
      }
      total += Rational(a == b ? 1 : 2) * SPoly(std::vector<Rational>(acc.begin(), acc.end()));
    }
  return {line_factor(mode) * total};
}

ReducedSymbol direct_symbol(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi, LineMode mode) {
  return direct_symbol(variation_tensor(op, n, p), h, xi, mode);
}

// --------------------------------------------------------------- closed form

FPair closed_form_fpair(OperatorKind op, int n, int p) {
  if (p < 0 || p > n) throw ParameterOutOfRange("closed_form_fpair: p must lie in [0, n]");
  const Rational b(binomial(n - 2, p - 1));
  const Rational c(binomial(n, p));
  const SPoly S = SPoly::variable();
  const SPoly Q = S * S + S - SPoly(Rational(3, 4));
  if (op == OperatorKind::Bochner)
    return {Rational(4) * b * (S - SPoly(Rational(1, 2))) + SPoly(c / 2), c * Q + SPoly(c / 4)};
  return {Rational(4) * b * Q + SPoly(c / 2), Rational(c - 4 * b) * Q + SPoly(c / 4)};
}

ReducedSymbol theorem1_reduced(const FPair& f, const PerturbH& h, const Covector& xi, LineMode mode) {
  const auto t = projector_traces(h, xi);
  const Rational x4 = xi.norm2() * xi.norm2();
  return {line_factor(mode) * x4 * (f.f1 * t.t2 + f.f2 * t.t1sq)};
}

ReducedSymbol theorem1_reduced(OperatorKind op, int n, int p, const PerturbH& h, const Covector& xi, LineMode mode) {
  check_dims(n, h, xi);
  return theorem1_reduced(closed_form_fpair(op, n, p), h, xi, mode);
}

DStarD dstar_d_fpair(int n, int p) {
  if (n < 1 || p < 0 || p > n) throw ParameterOutOfRange("dstar_d_fpair: need n >= 1 and 0 <= p <= n");
  DStarD r;
  for (int q = 0; q <= p; ++q) {
    const FPair f = closed_form_fpair(OperatorKind::DeRham, n, q);
    r.alt_sum = r.alt_sum + Rational((p - q) % 2 == 0 ? 1 : -1) * f;
  }
  r.closed = p <= n - 1 ? closed_form_fpair(OperatorKind::DeRham, n - 1, p) : FPair{};
  r.alt_trace_sum = r.alt_sum.f1 + r.alt_sum.f2;
  r.closed_trace_sum = r.closed.f1 + r.closed.f2;

  // Look for alt_sum = lambda * closed.
  std::optional<Rational> lambda;
  for (const SPoly* c : {&r.closed.f1, &r.closed.f2}) {
    if (c->is_zero()) continue;
    const SPoly& a = c == &r.closed.f1 ? r.alt_sum.f1 : r.alt_sum.f2;
    const std::size_t lead = static_cast<std::size_t>(c->degree());
    lambda = a.coefficient(lead) / c->coefficient(lead);
    break;
  }
  if (lambda) {
    r.proportional = r.alt_sum == *lambda * r.closed;
    if (r.proportional) r.scale = lambda;
  } else {
    r.proportional = r.alt_sum.is_zero();
  }
  return r;
}

FPair d_dstar_fpair(int n, int p) {
  if (p < 0 || p > n) throw ParameterOutOfRange("d_dstar_fpair: p must lie in [0, n]");
  return p == 0 ? FPair{} : dstar_d_fpair(n, p - 1).alt_sum;
}

// ------------------------------------------------------------------- fitting

InvariantVector fit_invariants(int n, const SymbolRoute& route) {
  if (n < 3) throw ParameterOutOfRange("fit_invariants: the invariant basis is degenerate for n < 3");
  const Covector xi = Covector::unit(n, 0);
  std::array<PerturbH, 5> probes;
  for (auto& h : probes) h = PerturbH::zero(n);
  probes[0].set(0, 0, 1);
  probes[1].set(1, 1, 1);
  probes[2].set(0, 1, 1);
  probes[3].set(1, 1, 1);
  probes[3].set(2, 2, 1);
  probes[4].set(0, 0, 1);
  probes[4].set(1, 1, 1);

  std::array<std::array<Rational, 5>, 5> m;
  std::array<SPoly, 5> rhs;
  for (std::size_t r = 0; r < 5; ++r) {
    m[r] = invariant_basis_values(probes[r], xi);
    rhs[r] = route(probes[r], xi);
  }
  // Gauss-Jordan elimination; the probe matrix is fixed and invertible.
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < 5; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 5; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  InvariantVector v;
  for (std::size_t i = 0; i < 5; ++i) v.c[i] = rhs[i];
  return v;
}

}  // namespace zetahess
