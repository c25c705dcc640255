#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "efcert/error.hpp"
#include "efcert/singularities.hpp"
#include "oracles.hpp"

using namespace efcert;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

AlgebraicNumber rat(long p, long d = 1) { return AlgebraicNumber::from_rational(q(p, d)); }

RootSet closed(Polynomial p) { return make_rootset(p, Provenance::ClosedForm); }

bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).second.is_zero(); }

}  // namespace

TEST_CASE("built-in singularity sets") {
  RootSet e = singularity_superset(ef_exp());
  CHECK(e.poly == Polynomial{-1, 1});
  CHECK_FALSE(e.includes_zero);
  CHECK(e.provenance == Provenance::ClosedForm);
  for (const auto& f : {ef_bessel_j0(), ef_sin_integral()}) {
    RootSet s = singularity_superset(f);
    CHECK(s.poly == Polynomial{1, 0, 1});
    CHECK(s.provenance == Provenance::ClosedForm);
    auto els = s.elements();
    REQUIRE(els.size() == 2);
    CHECK(els[0].box().contains(ComplexRational(0, -1)));
    CHECK(els[1].box().contains(ComplexRational(0, 1)));
  }
}

TEST_CASE("leading-coefficient supersets contain the closed forms") {
  std::vector<EFunction> fs = {ef_exp(), ef_bessel_j0(), ef_sin_integral(),
                               ef_hypergeometric({{}, {1, 1}}), ef_hypergeometric({{q(1, 2)}, {q(1, 3), 2}}),
                               ef_hypergeometric({{}, {q(1, 2), q(1, 2), q(1, 2)}}), ef_scale(ef_bessel_j0(), 3)};
  for (const auto& f : fs) {
    INFO(f.name());
    RootSet sup = leading_coefficient_superset(f);
    CHECK(sup.provenance == Provenance::LeadingCoefficientSuperset);
    REQUIRE(f.closed_form_singularities());
    CHECK(divides(f.closed_form_singularities()->poly, sup.poly));
  }
  // exp's superset is exactly {1}
  CHECK(leading_coefficient_superset(ef_exp()).poly == Polynomial{-1, 1});
  // function given only by an operator: the superset route is used
  auto j = ef_from_ode("j0", parse_operator("z∂^2 + ∂ + z"), {1, 0});
  RootSet s = singularity_superset(j);
  CHECK(s.provenance == Provenance::LeadingCoefficientSuperset);
  CHECK(divides(Polynomial{1, 0, 1}, s.poly));
}

TEST_CASE("hypergeometric locus") {
  for (unsigned k = 1; k <= 4; ++k) {
    RootSet s = hypergeometric_singularities(k);
    Polynomial kz = Polynomial::monomial(efcert::pow(Rational(k), k), k) - Polynomial::constant(1);
    CHECK(s.poly == kz.primitive());
    CHECK(s.provenance == Provenance::ClosedForm);
    auto els = s.elements();
    CHECK(els.size() == k);
    for (const auto& r : els) CHECK(std::abs(std::sqrt(r.box().center().norm2().get_d()) - 1.0 / k) < 1e-9);
  }
  CHECK(hypergeometric_singularities(1) == singularity_superset(ef_exp()));
  CHECK(hypergeometric_singularities(2).poly == Polynomial{-1, 0, 4});
  auto numeric = oracle::numeric_roots(Polynomial{-1, 0, 0, 27});
  auto els = hypergeometric_singularities(3).elements();
  for (auto z : numeric) {
    bool found = false;
    for (const auto& r : els) {
      double dr = r.box().re().get_d() - static_cast<double>(z.real());
      double di = r.box().im().get_d() - static_cast<double>(z.imag());
      found |= std::hypot(dr, di) < 1e-9;
    }
    CHECK(found);
  }
  CHECK(singularity_superset(ef_hypergeometric({{}, {q(1, 2), q(3, 2)}})) == hypergeometric_singularities(2));
}

TEST_CASE("rootset_scale") {
  RootSet one = closed(Polynomial{-1, 1}), ii = closed(Polynomial{1, 0, 1});
  CHECK(rootset_scale(one, rat(2)).poly == Polynomial{-1, 2});
  CHECK(rootset_scale(ii, rat(-1)) == ii);
  CHECK(rootset_scale(one, rat(1, 3)).poly == Polynomial{-3, 1});
  CHECK_THROWS_AS(rootset_scale(one, rat(0)), Error);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = oracle::random_poly(rng, 1 + t % 4, 5);
    if (p.coeff(0) == 0 || !is_squarefree(p)) continue;
    RootSet s = closed(p);
    std::uniform_int_distribution<long> d(-9, 9);
    long n = d(rng), m = std::abs(d(rng)) + 1;
    if (n == 0) n = 1;
    auto alpha = rat(n, m);
    auto back = rootset_scale(rootset_scale(s, alpha), alg_div(rat(1), alpha));
    CHECK(back == s);
  }
  // irrational factor: {1} / sqrt2 contains 1/sqrt2 and is flagged as a superset
  auto sqrt2 = AlgebraicNumber::from_box(Polynomial{-2, 0, 1}, ComplexBox(ComplexRational(q(3, 2)), q(1, 4)));
  RootSet sc = rootset_scale(one, sqrt2);
  CHECK(sc.provenance == Provenance::LeadingCoefficientSuperset);
  CHECK(alg_is_root_of(alg_div(rat(1), sqrt2), sc.poly));
}

TEST_CASE("rootsets_disjoint") {
  RootSet one = closed(Polynomial{-1, 1}), ii = closed(Polynomial{1, 0, 1});
  RootSet half = hypergeometric_singularities(2);
  CHECK(rootsets_disjoint(one, ii));
  CHECK_FALSE(rootsets_disjoint(ii, ii));
  CHECK(rootsets_disjoint(one, half));
  RootSet z1 = closed(Polynomial{0, -1, 1}), z2 = closed(Polynomial{0, 1, 1});
  CHECK(z1.includes_zero);
  CHECK(rootsets_disjoint(z1, ii));
  CHECK_FALSE(rootsets_disjoint(z1, z2));
  CHECK_FALSE(rootsets_disjoint(closed(Polynomial{-2, 0, 1}), closed(Polynomial{-4, 0, 0, 0, 1})));
}

TEST_CASE("ratio_condition") {
  RootSet one = closed(Polynomial{-1, 1}), ii = closed(Polynomial{1, 0, 1});
  CHECK(ratio_condition(ii, ii, rat(2), rat(3)));
  CHECK_FALSE(ratio_condition(ii, ii, rat(2), rat(-2)));
  CHECK(ratio_condition(one, one, rat(2), rat(3)));
  CHECK(ratio_condition(one, one, rat(1, 2), rat(-3)));
  CHECK_THROWS_AS(ratio_condition(one, one, rat(0), rat(1)), Error);
  auto i = AlgebraicNumber::roots_of(Polynomial{1, 0, 1})[1];
  CHECK(ratio_condition(ii, ii, rat(1), i));
  CHECK_FALSE(ratio_condition(ii, one, i, rat(1)));
  // empty set: nothing to avoid
  CHECK(ratio_condition(closed(Polynomial{1}), one, rat(1), rat(1)));
}

TEST_CASE("ratio_condition is symmetric and fails on equal points") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-6, 6);
  int checked = 0;
  while (checked < 40) {
    Polynomial p = oracle::random_poly(rng, 1 + checked % 3, 3), r = oracle::random_poly(rng, 1 + checked % 2, 3);
    if (p.coeff(0) == 0 || r.coeff(0) == 0 || p.degree() < 1 || r.degree() < 1) continue;
    ++checked;
    RootSet a = closed(p), b = closed(r);
    long n1 = d(rng), n2 = d(rng);
    if (n1 == 0 || n2 == 0) continue;
    auto x = rat(n1, 1 + std::abs(d(rng))), y = rat(n2, 1 + std::abs(d(rng)));
    CHECK(ratio_condition(a, b, x, y) == ratio_condition(b, a, y, x));
    CHECK_FALSE(ratio_condition(a, a, x, x));
  }
}
