#include <bit>

#include "doctest.h"
#include "zetahess/sampling.hpp"
#include "zetahess/variation.hpp"

using namespace zetahess;

namespace {

Rational slot(const SlotMap& m, Slots s) {
  auto it = m.find(s);
  return it == m.end() ? Rational(0) : it->second;
}

int symmetric_difference(const FormIndex& a, const FormIndex& b) { return std::popcount(a.bits() ^ b.bits()); }

}  // namespace

TEST_CASE("operator names") {
  CHECK(parse_operator("bochner") == OperatorKind::Bochner);
  CHECK(to_string(OperatorKind::DeRham) == "derham");
  CHECK_THROWS_AS(parse_operator("hodge"), std::invalid_argument);
}

TEST_CASE("christoffel variation") {
  FirstJet dh;
  dh[{0, 1, 1}] = 1;
  CHECK(christoffel_variation(dh, 0, 1, 1) == Rational(1, 2));
  CHECK(christoffel_variation(FirstJet{}, 0, 1, 2) == 0);

  Sampler s(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 3;
    FirstJet jet;
    for (int c = 0; c < n; ++c)
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) jet[{c, j, k}] = jet[{c, k, j}] = s.integer(-5, 5);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          CHECK(christoffel_variation(jet, i, j, k) == christoffel_variation(jet, j, i, k));
          const Rational expanded = Rational(1, 2) * (jet[{i, j, k}] + jet[{j, i, k}] - jet[{k, i, j}]);
          CHECK(christoffel_variation(jet, i, j, k) == expanded);
        }
  }
}

TEST_CASE("variation tensor entries") {
  SUBCASE("Bochner single swap, n=2 p=1") {
    const auto vt = variation_tensor(OperatorKind::Bochner, 2, 1);
    const auto* e = vt.find(FormIndex::of(2, {1}), FormIndex::of(2, {0}));
    REQUIRE(e != nullptr);
    CHECK(slot(e->first, {1, 1, 0, 1}) == 1);
  }
  SUBCASE("de Rham double swap, n=4 p=2") {
    const auto vt = variation_tensor(OperatorKind::DeRham, 4, 2);
    const auto* e = vt.find(FormIndex::of(4, {2, 3}), FormIndex::of(4, {0, 1}));
    REQUIRE(e != nullptr);
    CHECK(e->second.empty());
    CHECK(e->first.empty());
    CHECK(e->zeroth.size() == 4);
    CHECK(slot(e->zeroth, {1, 3, 0, 2}) == 1);
    CHECK(slot(e->zeroth, {0, 2, 1, 3}) == 1);
    CHECK(slot(e->zeroth, {1, 2, 0, 3}) == -1);
    CHECK(slot(e->zeroth, {0, 3, 1, 2}) == -1);
  }
  SUBCASE("operators coincide on functions and top forms") {
    for (int n = 2; n <= 6; ++n)
      for (int p : {0, n}) {
        const auto a = variation_tensor(OperatorKind::Bochner, n, p);
        const auto b = variation_tensor(OperatorKind::DeRham, n, p);
        REQUIRE(a.entries().size() == b.entries().size());
        for (const auto& [key, e] : a.entries()) {
          const auto* f = b.find(key.first, key.second);
          REQUIRE(f != nullptr);
          CHECK(e.second == f->second);
          CHECK(e.first == f->first);
          CHECK(e.zeroth == f->zeroth);
        }
      }
  }
  SUBCASE("sparsity pattern") {
    for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
      for (int n = 2; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
          const auto vt = variation_tensor(op, n, p);
          for (const auto& [key, e] : vt.entries()) {
            const int d = symmetric_difference(key.first, key.second);
            CHECK((d == 0 || d == 2 || d == 4));
            if (d == 4) CHECK(op == OperatorKind::DeRham);
            if (d != 0) CHECK(e.second.empty());
            if (d == 0) {
              for (const auto& [s, v] : e.second) {
                CHECK(s[0] == s[2]);
                CHECK(s[1] == s[3]);
                CHECK(v == 1);
              }
              CHECK(static_cast<int>(e.second.size()) == n * n);
            }
          }
        }
  }
  CHECK_THROWS_AS(variation_tensor(OperatorKind::Bochner, 3, 4), ParameterOutOfRange);
  CHECK_THROWS_AS(variation_tensor(OperatorKind::DeRham, 1, 0), ParameterOutOfRange);
}

TEST_CASE("coefficient symbols") {
  Sampler s(17);
  SUBCASE("Bochner diagonal first-order symbol") {
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(OperatorKind::Bochner, n, p);
        const auto h = s.perturbation(n);
        const auto xi = s.covector(n);
        const auto css = coefficient_symbols(vt, h, xi);
        const auto inv = scalar_invariants(h, xi);
        for (const auto& I : vt.forms()) {
          Rational signed_trace;
          for (int i = 0; i < n; ++i) signed_trace += sgn(I, i) * h(i, i);
          CHECK(css.s1(I, I) == inv.xhx + Rational(1, 2) * inv.xi2 * signed_trace);
          CHECK(css.s2(I) == inv.xhx);
        }
      }
  }
  SUBCASE("Bochner off-diagonal cancellation") {
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(OperatorKind::Bochner, n, p);
        const auto css = coefficient_symbols(vt, s.perturbation(n), s.covector(n));
        for (const auto& [key, v] : css.sigma1)
          if (!(key.first == key.second)) CHECK(-2 * v + 4 * css.s0(key.first, key.second) == 0);
      }
  }
  SUBCASE("de Rham diagonal zeroth-order symbol, diagonal h") {
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(OperatorKind::DeRham, n, p);
        const auto h = s.perturbation(n, true);
        const auto xi = s.covector(n);
        const auto css = coefficient_symbols(vt, h, xi);
        for (const auto& I : vt.forms()) {
          Rational expected;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) expected += chi(I, j) * sgn(I, i) * xi[j] * xi[j] * h(i, i);
          CHECK(css.s0(I, I) == Rational(1, 2) * expected);
        }
      }
  }
  SUBCASE("double swaps vanish for diagonal h") {
    for (int n = 4; n <= 6; ++n)
      for (int p = 2; p <= n - 2; ++p) {
        const auto vt = variation_tensor(OperatorKind::DeRham, n, p);
        const auto contracted = contract_with_h(vt, s.perturbation(n, true));
        for (const auto& [key, e] : contracted)
          if (symmetric_difference(key.first, key.second) == 4) CHECK(e.zeroth.empty());
      }
  }
  SUBCASE("components recontract to the symbols") {
    for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
      for (int n = 2; n <= 5; ++n)
        for (int p = 0; p <= n; ++p) {
          const auto vt = variation_tensor(op, n, p);
          const auto xi = s.covector(n);
          const auto css = coefficient_symbols(vt, s.perturbation(n), xi);
          for (const auto& [key, v] : css.sigma1) {
            Rational r1, r0;
            for (int k = 0; k < n; ++k)
              for (int l = 0; l < n; ++l) {
                r1 += xi[k] * xi[l] * css.s1_comp(k, l, key.first, key.second);
                r0 += xi[k] * xi[l] * css.s0_comp(k, l, key.first, key.second);
              }
            CHECK(r1 == v);
            CHECK(r0 == css.s0(key.first, key.second));
          }
        }
  }
  CHECK_THROWS_AS(coefficient_symbols(variation_tensor(OperatorKind::Bochner, 3, 1), PerturbH::identity(2),
                                      Covector{1, 0, 0}),
                  DimensionMismatch);
}
