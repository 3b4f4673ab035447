#include "doctest.h"
#include "oracles.hpp"
#include "zetahess/sampling.hpp"
#include "zetahess/symbolengine.hpp"

using namespace zetahess;
using Sh = SlotShape;

namespace {

const SPoly S = SPoly::variable();

SPoly poly(std::initializer_list<Rational> c) { return SPoly(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("kernel table") {
  const Covector e1 = Covector::unit(3, 0);
  const auto a = kernel_value({Sh::CoefficientHessian, Sh::CoefficientHessian, 0, 0, 0, 0}, e1);
  CHECK(a.xi_minus4 == poly({-4, 0, 16}));
  CHECK(a.xi_minus2.is_zero());
  CHECK(a.xi_zero.is_zero());

  const Covector e3 = Covector::unit(3, 2);
  const auto b = kernel_value({Sh::SectionHessian, Sh::SectionHessian, 0, 0, 1, 1}, e3);
  CHECK(b.xi_minus4.is_zero());
  CHECK(b.xi_minus2.is_zero());
  CHECK(b.xi_zero == SPoly(Rational(1, 4)));

  const auto c = kernel_value({Sh::Split, Sh::Split, 0, 1, 2, 3}, Covector{0, 0, 0, 0, 1});
  CHECK(c.xi_minus4.is_zero());
  CHECK(c.xi_minus2.is_zero());
  CHECK(c.xi_zero.is_zero());

  // Unprinted orderings follow from swapping the slots.
  Sampler s(1);
  const auto xi = s.covector(3);
  const std::array<Sh, 3> shapes{Sh::SectionHessian, Sh::Split, Sh::CoefficientHessian};
  for (auto l : shapes)
    for (auto r : shapes)
      for (int j = 0; j < 3; ++j)
        for (int q = 0; q < 3; ++q) {
          const auto x = kernel_value({l, r, j, 1, 2, q}, xi);
          const auto y = kernel_value({r, l, 2, q, j, 1}, xi);
          CHECK(x.reduced(xi.norm2()) == y.reduced(xi.norm2()));
        }
  CHECK_THROWS_AS(kernel_value({Sh::Split, Sh::Split, 0, 0, 0, 3}, e1), ParameterOutOfRange);
}

TEST_CASE("closed forms") {
  const auto b31 = closed_form_fpair(OperatorKind::Bochner, 3, 1);
  CHECK(b31.f1 == poly({Rational(-1, 2), 4}));
  CHECK(b31.f2 == poly({Rational(-3, 2), 3, 3}));
  CHECK(b31.f1.to_string() == "4*S-1/2");
  CHECK(b31.f2.to_string() == "3*S^2+3*S-3/2");

  const auto d42 = closed_form_fpair(OperatorKind::DeRham, 4, 2);
  CHECK(d42.f1.to_string() == "8*S^2+8*S-3");
  CHECK(d42.f2.to_string() == "-2*S^2-2*S+3");

  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 9; ++n) {
      const auto f = closed_form_fpair(op, n, 0);
      CHECK(f.f1 == SPoly(Rational(1, 2)));
      CHECK(f.f2 == poly({Rational(-1, 2), 1, 1}));
    }
  for (int n = 2; n <= 12; ++n)
    for (int p = 0; p <= n; ++p)
      CHECK(closed_form_fpair(OperatorKind::DeRham, n, p) == closed_form_fpair(OperatorKind::DeRham, n, n - p));
  CHECK_THROWS_AS(closed_form_fpair(OperatorKind::Bochner, 3, 4), ParameterOutOfRange);
}

TEST_CASE("u_part4") {
  Sampler s(2);
  for (int n = 2; n <= 6; ++n) {
    const auto xi = s.covector(n);
    const Rational x4 = xi.norm2() * xi.norm2();
    for (int p = 0; p <= n; ++p) {
      const Rational dim(binomial(n, p));
      const auto expected = dim * x4 * (Rational(n - 1) * S + SPoly(Rational((n - 1) * (n - 1), 4)));
      CHECK(u_part4(n, p, PerturbH::identity(n), xi).value == expected);
      CHECK(u_part4(n, p, PerturbH::zero(n), xi).value.is_zero());
      const auto h = s.perturbation(n);
      CHECK(u_part4(n, p, h, xi) == u_part4_projector(n, p, h, xi));
      CHECK(u_part4(n, p, h, xi, LineMode::Complex).value == Rational(2) * u_part4(n, p, h, xi).value);
    }
  }
}

TEST_CASE("grouped parts against their closed forms") {
  Sampler s(4);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(op, n, p);
        const bool diagonal = op == OperatorKind::DeRham;
        const auto h = s.perturbation(n, diagonal);
        const auto xi = s.covector(n);
        const auto css = coefficient_symbols(vt, h, xi);
        const auto want = oracle::part_closed_forms(op, n, p, h, xi);
        CHECK(u_part1(css, xi).value == want[0]);
        CHECK(u_part2(css, xi).value == want[1]);
        CHECK(u_part3(css, h, xi).value == want[2]);

        const auto zero = coefficient_symbols(vt, PerturbH::zero(n), xi);
        CHECK(u_part1(zero, xi).value.is_zero());
        CHECK(u_part2(zero, xi).value.is_zero());
        CHECK(u_part3(zero, PerturbH::zero(n), xi).value.is_zero());
      }
}

TEST_CASE("specific grouped-part cases") {
  SUBCASE("Bochner first part is a squared trace") {
    Sampler s(8);
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto h = s.perturbation(n);
        const auto xi = s.covector(n);
        const auto inv = oracle::invariants(h, xi);
        const Rational sq = (inv.xi2 * inv.trh - inv.xhx) * (inv.xi2 * inv.trh - inv.xhx);
        const auto css = coefficient_symbols(variation_tensor(OperatorKind::Bochner, n, p), h, xi);
        CHECK(u_part1(css, xi).value == poly({Rational(-1, 4), 0, 1}) * Rational(binomial(n, p)) * sq);
      }
  }
  SUBCASE("second part is shared by both operators") {
    Sampler s(9);
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto h = s.perturbation(n);
        const auto xi = s.covector(n);
        const auto a = coefficient_symbols(variation_tensor(OperatorKind::Bochner, n, p), h, xi);
        const auto b = coefficient_symbols(variation_tensor(OperatorKind::DeRham, n, p), h, xi);
        CHECK(u_part2(a, xi) == u_part2(b, xi));
      }
  }
  SUBCASE("de Rham n=3 p=1, h = diag(1,0,0), xi = e2") {
    PerturbH h = PerturbH::zero(3);
    h.set(0, 0, 1);
    const Covector xi = Covector::unit(3, 1);
    const auto css = coefficient_symbols(variation_tensor(OperatorKind::DeRham, 3, 1), h, xi);
    // Projector traces are both 1, the remaining invariants vanish.
    CHECK(u_part1(css, xi).value == poly({Rational(-1, 4), 0, 1}) * Rational(3));
    CHECK(u_part1(css, xi).value == oracle::part_closed_forms(OperatorKind::DeRham, 3, 1, h, xi)[0]);
  }
  SUBCASE("second part at a rank-one projector perturbation") {
    const Covector xi{1, 2, 2};
    auto h = Rational(1, 2) * PerturbH::symmetric_outer(xi.components(), xi.components());
    h *= 1 / xi.norm2();
    for (int p = 0; p <= 3; ++p) {
      const auto css = coefficient_symbols(variation_tensor(OperatorKind::Bochner, 3, p), h, xi);
      CHECK(u_part2(css, xi).value == oracle::part_closed_forms(OperatorKind::Bochner, 3, p, h, xi)[1]);
    }
  }
}

TEST_CASE("routes agree") {
  Sampler s(12);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(op, n, p);
        for (int t = 0; t < 2; ++t) {
          const auto h = s.perturbation(n);
          const auto xi = s.covector(n);
          const auto th = theorem1_reduced(op, n, p, h, xi);
          CHECK(direct_symbol(vt, h, xi) == th);
          CHECK(grouped_symbol(vt, h, xi) == th);
        }
        CHECK(direct_symbol(vt, PerturbH::zero(n), s.covector(n)).value.is_zero());
      }
}

TEST_CASE("scalar case") {
  const FPair scalar{SPoly(Rational(1, 2)), poly({Rational(-1, 2), 1, 1})};
  Sampler s(13);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 5; ++n) {
      const auto h = s.perturbation(n);
      const auto xi = s.covector(n);
      CHECK(grouped_symbol(op, n, 0, h, xi) == theorem1_reduced(scalar, h, xi));
    }
  const auto d = direct_symbol(OperatorKind::Bochner, 3, 0, PerturbH::identity(3), Covector::unit(3, 0));
  // t2 = 2, t1sq = 4
  CHECK(d.value == Rational(2) * scalar.f1 + Rational(4) * scalar.f2);
}

TEST_CASE("theorem1 special perturbations") {
  Sampler s(14);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 6; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto xi = s.covector(n);
        const auto eta = s.covector(n);
        const auto gauge = PerturbH::symmetric_outer(xi.components(), eta.components());
        CHECK(theorem1_reduced(op, n, p, gauge, xi).value.is_zero());
        const auto f = closed_form_fpair(op, n, p);
        const Rational x4 = xi.norm2() * xi.norm2();
        CHECK(theorem1_reduced(op, n, p, PerturbH::identity(n), xi).value ==
              x4 * (Rational(n - 1) * f.f1 + Rational((n - 1) * (n - 1)) * f.f2));
      }
  const auto h = s.perturbation(5);
  const auto xi = s.covector(5);
  CHECK(theorem1_reduced(OperatorKind::Bochner, 5, 2, h, xi) == grouped_symbol(OperatorKind::Bochner, 5, 2, h, xi));
  CHECK(theorem1_reduced(OperatorKind::Bochner, 5, 2, h, xi, LineMode::Complex).value ==
        Rational(2) * theorem1_reduced(OperatorKind::Bochner, 5, 2, h, xi).value);
  const auto h4 = s.perturbation(4);
  const auto xi4 = s.covector(4);
  CHECK(direct_symbol(OperatorKind::DeRham, 4, 2, h4, xi4, LineMode::Complex).value ==
        Rational(2) * direct_symbol(OperatorKind::DeRham, 4, 2, h4, xi4).value);
}

TEST_CASE("d*d alternating sums") {
  const auto p0 = dstar_d_fpair(5, 0);
  CHECK(p0.alt_sum == FPair{SPoly(Rational(1, 2)), poly({Rational(-1, 2), 1, 1})});

  const auto a = dstar_d_fpair(4, 1);
  const SPoly Q = poly({Rational(-3, 4), 1, 1});
  CHECK(a.alt_sum.f1 == (Rational(4) * Q + SPoly(2)) - SPoly(Rational(1, 2)));

  for (int n = 3; n <= 7; ++n)
    for (int p = 0; p <= n; ++p) {
      const auto r = dstar_d_fpair(n, p);
      CHECK(r.proportional);
      if (r.scale) CHECK(*r.scale == 1);
      CHECK(r.alt_sum + d_dstar_fpair(n, p) == closed_form_fpair(OperatorKind::DeRham, n, p));
    }
  // n = 2: only f1 + f2 is observable.
  for (int p = 0; p <= 2; ++p) CHECK(dstar_d_fpair(2, p).alt_trace_sum == dstar_d_fpair(2, p).closed_trace_sum);
  CHECK_FALSE(dstar_d_fpair(2, 1).proportional);
  CHECK(d_dstar_fpair(4, 0).is_zero());
}

TEST_CASE("symbols lie in the projector span") {
  Sampler s(21);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 3; n <= 5; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(op, n, p);
        const auto fitted = fit_invariants(n, [&](const PerturbH& h, const Covector& xi) {
          return direct_symbol(vt, h, xi).value;
        });
        CHECK(invariant_to_fpair(fitted) == closed_form_fpair(op, n, p));
        const auto h = s.perturbation(n);
        const auto xi = s.covector(n);
        CHECK(evaluate_reduced(fitted, h, xi) == grouped_symbol(vt, h, xi).value);
      }
  CHECK_THROWS_AS(fit_invariants(2, [](const PerturbH&, const Covector&) { return SPoly(); }), ParameterOutOfRange);
}

TEST_CASE("grouped symbol is a quadratic form") {
  Sampler s(22);
  for (auto op : {OperatorKind::Bochner, OperatorKind::DeRham})
    for (int n = 2; n <= 4; ++n)
      for (int p = 0; p <= n; ++p) {
        const auto vt = variation_tensor(op, n, p);
        const auto xi = s.covector(n);
        const auto h = s.perturbation(n), k = s.perturbation(n), m = s.perturbation(n);
        const Rational lam(5, 3);
        CHECK(grouped_symbol(vt, lam * h, xi).value == lam * lam * grouped_symbol(vt, h, xi).value);
        auto B = [&](const PerturbH& x, const PerturbH& y) {
          return Rational(1, 4) * (grouped_symbol(vt, x + y, xi).value - grouped_symbol(vt, x - y, xi).value);
        };
        CHECK(B(k, h) == B(h, k));
        CHECK(B(k + m, h) == B(k, h) + B(m, h));
        CHECK(B(lam * k, h) == lam * B(k, h));
        CHECK(B(h, h) == grouped_symbol(vt, h, xi).value);
      }
}
