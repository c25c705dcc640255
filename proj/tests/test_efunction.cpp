#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efcert/efunction.hpp"
#include "efcert/error.hpp"
#include "oracles.hpp"

using namespace efcert;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

HypergeometricParams hyp(std::vector<Rational> a, std::vector<Rational> b) { return {std::move(a), std::move(b)}; }

// Stream coefficients turned into Taylor coefficients and fed to the annihilator.
bool stream_satisfies_annihilator(const EFunction& f, std::size_t n = 80) {
  auto a = f.coefficients(n);
  TruncatedSeries c{0, a};
  for (std::size_t k = 0; k < n; ++k) c.coeffs[k] /= oracle::fact(static_cast<unsigned>(k));
  auto out = op_apply(f.annihilator(), c);
  return out.all_zero() && out.end() >= static_cast<long>(n - f.annihilator().order());
}

bool bound_holds(const EFunction& f, std::size_t n = 150) {
  if (!f.growth_bound()) return false;
  auto a = f.coefficients(n);
  Rational p = f.growth_bound()->K;
  for (std::size_t k = 0; k < n; ++k) {
    if (abs(a[k]) > p) return false;
    p *= f.growth_bound()->C;
  }
  return true;
}

}  // namespace

TEST_CASE("built-in coefficient streams") {
  CHECK(ef_exp().coefficients(5) == std::vector<Rational>{1, 1, 1, 1, 1});
  auto j = ef_bessel_j0().coefficients(5);
  CHECK(j == std::vector<Rational>{1, 0, q(-1, 2), 0, q(3, 8)});
  CHECK(ef_bessel_j0().coefficients(60) == oracle::e_normalise(oracle::taylor_j0(60)));
  CHECK(ef_sin_integral().coefficients(60) == oracle::e_normalise(oracle::taylor_si(60)));
  auto s = psi_series(ef_sin_integral(), 5);
  CHECK(s.coeffs == std::vector<Rational>{0, 1, 0, q(-1, 3), 0, q(1, 5)});
  CHECK(psi_series(ef_exp(), 3).coeffs == std::vector<Rational>{1, 1, 1, 1});
}

TEST_CASE("every constructor's stream satisfies its annihilator") {
  std::vector<EFunction> fs = {
      ef_exp(),
      ef_bessel_j0(),
      ef_sin_integral(),
      ef_hypergeometric(hyp({}, {1})),
      ef_hypergeometric(hyp({}, {1, 1})),
      ef_hypergeometric(hyp({1}, {1, 2})),
      ef_hypergeometric(hyp({q(1, 3)}, {q(1, 2), q(2, 3), q(-5, 2)})),
      ef_hypergeometric(hyp({}, {q(1, 2), 1, q(3, 4)})),
      ef_hypergeometric(hyp({}, {1, 1, 1, 1})),
      ef_scale(ef_bessel_j0(), q(-3, 2)),
      ef_sum(ef_exp(), ef_bessel_j0()),
      ef_sum(ef_sin_integral(), ef_scale(ef_exp(), 2)),
      ef_derivative(ef_sin_integral()),
      ef_derivative(ef_bessel_j0()),
      ef_derivative(ef_exp()),
      ef_mul_poly(ef_exp(), Polynomial{0, 1}),
      ef_mul_poly(ef_bessel_j0(), Polynomial{1, -2, q(1, 3)}),
      ef_lagrange_combo(ef_exp(), {1, 2}),
      ef_from_ode("airy-like", parse_operator("∂^2 - z"), {1, 2}),
  };
  for (const auto& f : fs) {
    INFO(f.name());
    CHECK(stream_satisfies_annihilator(f));
    CHECK(f.coefficients(f.initial_values().size()) == f.initial_values());
  }
}

TEST_CASE("rigorous growth bounds hold on long prefixes") {
  std::vector<EFunction> fs = {
      ef_exp(),
      ef_bessel_j0(),
      ef_sin_integral(),
      ef_hypergeometric(hyp({}, {q(1, 2)})),
      ef_hypergeometric(hyp({q(7, 2)}, {q(1, 10), q(1, 3)})),
      ef_hypergeometric(hyp({}, {q(1, 5), q(1, 5), q(-7, 3)})),
      ef_scale(ef_exp(), q(-5, 3)),
      ef_derivative(ef_sin_integral()),
      ef_mul_poly(ef_exp(), Polynomial{3, 0, -1}),
      ef_lagrange_combo(ef_exp(), {1, 2}),
  };
  for (const auto& f : fs) {
    INFO(f.name());
    CHECK(bound_holds(f));
  }
}

TEST_CASE("ef_hypergeometric") {
  CHECK(ef_hypergeometric(hyp({}, {1})).coefficients(60) == ef_exp().coefficients(60));
  // b = (1, 1): c_{2n} = 1/(n!)^2 in z, so J0(z) has c_{2n} (-1/4)^n times these
  auto f = ef_hypergeometric(hyp({}, {1, 1})).coefficients(40);
  auto j = oracle::taylor_j0(40);
  for (unsigned n = 0; n < 40; ++n) {
    Rational c = f[n] / oracle::fact(n);
    if (n % 2) {
      CHECK(c == 0);
    } else {
      CHECK(c * efcert::pow(q(-1, 4), n / 2) == j[n]);
    }
  }
  // a = (1), b = (1, 2): c_n = 1/(n+1)!
  auto g = ef_hypergeometric(hyp({1}, {1, 2})).coefficients(30);
  for (unsigned n = 0; n < 30; ++n) CHECK(g[n] / oracle::fact(n) == 1 / oracle::fact(n + 1));
  CHECK_THROWS_AS(ef_hypergeometric(hyp({}, {-1})), Error);
  CHECK_THROWS_AS(ef_hypergeometric(hyp({}, {0})), Error);
  CHECK_THROWS_AS(ef_hypergeometric(hyp({1}, {2})), Error);
  CHECK_THROWS_AS(ef_hypergeometric(hyp({1, 1}, {2})), Error);
  CHECK_NOTHROW(ef_hypergeometric(hyp({-1}, {q(-1, 2), 3})));
}

TEST_CASE("ef_scale") {
  auto e2 = ef_scale(ef_exp(), 2).coefficients(10);
  for (unsigned n = 0; n < 10; ++n) CHECK(e2[n] == efcert::pow(Rational(2), n));
  auto j = ef_bessel_j0();
  auto same = ef_scale(j, 1);
  CHECK(same.annihilator() == j.annihilator());
  CHECK(same.coefficients(20) == j.coefficients(20));
  CHECK(ef_scale(ef_exp(), q(1, 3)).annihilator() == parse_operator("3*∂ - 1"));
  auto lm = ef_scale(ef_scale(j, q(2, 3)), q(-5, 7)).coefficients(40);
  CHECK(lm == ef_scale(j, q(-10, 21)).coefficients(40));
  auto sqrt2 = AlgebraicNumber::from_box(Polynomial{-2, 0, 1}, ComplexBox(ComplexRational(q(3, 2)), q(1, 4)));
  try {
    ef_scale(ef_exp(), sqrt2);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
  CHECK_THROWS_AS(ef_scale(ef_exp(), 0), Error);
}

TEST_CASE("ef_sum") {
  auto two = ef_sum(ef_exp(), ef_exp());
  CHECK(two.coefficients(10) == std::vector<Rational>(10, Rational(2)));
  CHECK(two.annihilator().order() == 1);
  std::vector<EFunction> pool = {ef_exp(), ef_bessel_j0(), ef_sin_integral(), ef_scale(ef_exp(), -1),
                                 ef_hypergeometric(hyp({}, {q(1, 2)}))};
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      auto h = ef_sum(pool[i], pool[j]);
      auto a = psi_series(pool[i], 60).coeffs, b = psi_series(pool[j], 60).coeffs, c = psi_series(h, 60).coeffs;
      for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == a[k] + b[k]);
      CHECK(stream_satisfies_annihilator(h, 120));
    }
  SumOptions tight;
  tight.max_degree = 0;
  CHECK_THROWS_AS(ef_sum(ef_exp(), ef_bessel_j0(), tight), Error);
}

TEST_CASE("ef_derivative and ef_mul_poly") {
  // term-by-term differentiation of the Si Taylor series
  auto c = oracle::taylor_si(41);
  std::vector<Rational> dc(40);
  for (unsigned n = 0; n < 40; ++n) dc[n] = c[n + 1] * (n + 1);
  CHECK(ef_derivative(ef_sin_integral()).coefficients(40) == oracle::e_normalise(dc));
  // sin(z)/z has E-coefficients (-1)^m / (2m+1) at even indices
  auto sinc = ef_derivative(ef_sin_integral()).coefficients(6);
  CHECK(sinc == std::vector<Rational>{1, 0, q(-1, 3), 0, q(1, 5), 0});
  auto ze = ef_mul_poly(ef_exp(), Polynomial{0, 1}).coefficients(12);
  for (unsigned n = 0; n < 12; ++n) CHECK(ze[n] == n);
  CHECK_THROWS_AS(ef_mul_poly(ef_exp(), Polynomial()), Error);
}

TEST_CASE("lagrange basis is Kronecker at the nodes") {
  std::vector<std::vector<Rational>> node_sets = {{1}, {1, 2}, {q(1, 2), -3, 5}, {2, q(-1, 7), q(3, 4), 9}};
  for (const auto& pts : node_sets)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Polynomial L = lagrange_basis(pts, i);
      CHECK(L.degree() == static_cast<long>(pts.size()));
      CHECK(L(Rational(0)) == 0);
      for (std::size_t j = 0; j < pts.size(); ++j) CHECK(L(pts[j]) == (i == j ? 1 : 0));
    }
  auto single = ef_lagrange_combo(ef_exp(), {1});
  // L_1 = z, so g = z e^z
  CHECK(single.coefficients(10) == ef_mul_poly(ef_exp(), Polynomial{0, 1}).coefficients(10));
  CHECK_THROWS_AS(ef_lagrange_combo(ef_exp(), {1, 1}), Error);
  CHECK_THROWS_AS(ef_lagrange_combo(ef_exp(), {0, 1}), Error);
  CHECK_THROWS_AS(ef_lagrange_combo(ef_exp(), {}), Error);
}

TEST_CASE("ef_from_ode") {
  auto j = ef_from_ode("j0", parse_operator("z∂^2 + ∂ + z"), {1, 0});
  CHECK(j.coefficients(50) == ef_bessel_j0().coefficients(50));
  CHECK_THROWS_AS(ef_from_ode("bad", parse_operator("z∂^2 + ∂ + z"), {1, 1}), Error);
  CHECK_THROWS_AS(ef_from_ode("short", parse_operator("∂^2 + 1"), {1}), Error);
  try {
    ef_from_ode("under", parse_operator("z^2∂^2 - 2"), {0, 0});
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unsupported);
  }
  // supplying the free coefficient resolves it
  CHECK(ef_from_ode("z2", parse_operator("z^2∂^2 - 2"), {0, 0, 2}).coefficients(5) ==
        std::vector<Rational>{0, 0, 2, 0, 0});
}

TEST_CASE("growth_check") {
  auto e = growth_check(ef_exp(), 40);
  CHECK(e.c_estimate == doctest::Approx(1.0));
  CHECK(e.violations.empty());
  auto h = growth_check(ef_hypergeometric(hyp({}, {q(1, 2)})), 60);
  CHECK(h.violations.empty());
  // a_n = 4^n (n!)^2 / (2n)!: binomial(2n, n) divides lcm(1..2n), so d_n does
  // too, and lcm(1..m) < 3^m gives d_n < 9^n.
  CHECK(h.c_estimate <= 9.0);
  auto a = ef_hypergeometric(hyp({}, {q(1, 2)})).coefficients(61);
  Integer d = 1, lcm_1_2n = 1;
  for (unsigned n = 0; n <= 60; ++n) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a[n].get_den_mpz_t());
    if (n > 0) {
      Integer m1 = 2 * n - 1, m2 = 2 * n;
      mpz_lcm(lcm_1_2n.get_mpz_t(), lcm_1_2n.get_mpz_t(), m1.get_mpz_t());
      mpz_lcm(lcm_1_2n.get_mpz_t(), lcm_1_2n.get_mpz_t(), m2.get_mpz_t());
    }
    CHECK(mpz_divisible_p(lcm_1_2n.get_mpz_t(), d.get_mpz_t()) != 0);
  }
  EFunction fact_stream("factorials", parse_operator("∂"), {1}, [](std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(oracle::fact(static_cast<unsigned>(k)));
    return v;
  });
  auto bad = growth_check(fact_stream, 60);
  CHECK_FALSE(bad.violations.empty());
  CHECK(growth_check(ef_sin_integral(), 40).violations.empty());
  CHECK(growth_check(ef_bessel_j0(), 40).violations.empty());
  CHECK_THROWS_AS(growth_check(ef_exp(), 4), Error);
}
