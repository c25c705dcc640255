#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "efcert/algebraic.hpp"
#include "efcert/error.hpp"
#include "oracles.hpp"

using namespace efcert;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).second.is_zero(); }

AlgebraicNumber root_near(const Polynomial& p, double re, double im) {
  return AlgebraicNumber::from_box(p, ComplexBox(ComplexRational(Rational(re), Rational(im)), Rational(1, 4)));
}

AlgebraicNumber rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return AlgebraicNumber::from_rational(r);
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("2e-2") == Rational(1, 50));
  CHECK(parse_rational("\xE2\x88\x92" "1") == Rational(-1));
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-2, 3), 2) == "-0.67");
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({1, 0, 1}), P({-1, 0, 1})) == P({1}));
  Polynomial g = poly_gcd(P({0, -1, 0, 1}), P({-1, 0, 1}));
  // division oracle: the result divides both inputs and has maximal degree
  CHECK(divides(g, P({0, -1, 0, 1})));
  CHECK(divides(g, P({-1, 0, 1})));
  CHECK(g == P({-1, 0, 1}));
  CHECK(poly_gcd(P({2, 4}), Polynomial()) == Polynomial{Rational(1, 2), 1});
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));
  CHECK(squarefree_part(P({1, 0, 1})) == P({1, 0, 1}));
  Polynomial p = P({0, 0, -1, 1});
  Polynomial expected = exact_quotient(p, poly_gcd(p, p.derivative())).monic();
  CHECK(squarefree_part(p) == expected);
  CHECK(squarefree_part(p) == P({0, -1, 1}));
  CHECK_THROWS_AS(squarefree_part(Polynomial()), Error);
}

TEST_CASE("resultant") {
  CHECK(resultant(P({-1, 1}), P({1, 1})) == 2);
  CHECK(resultant(P({1, 0, 1}), P({1, 0, 1})) == 0);
  CHECK(resultant(P({1, 0, 1}), P({-1, 0, 1})) == 4);
  CHECK(resultant(Polynomial::constant(3), P({1, 0, 1})) == 9);
  CHECK(resultant(Polynomial{Rational(1, 2), 1}, P({0, 2})) == -1);
  CHECK_THROWS_AS(resultant(Polynomial(), P({1})), Error);
}

TEST_CASE("resultant vanishes exactly when gcd is nonconstant") {
  std::mt19937_64 rng(7);
  int shared = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> deg(1, 6);
    Polynomial p = oracle::random_poly(rng, deg(rng), 3);
    Polynomial q = oracle::random_poly(rng, deg(rng), 3);
    if (trial % 3 == 0) {
      Polynomial f = oracle::random_poly(rng, 1 + trial % 2, 2);
      p = p * f;
      q = q * f;
    }
    if (p.degree() < 1 || q.degree() < 1) continue;
    bool zero = resultant(p, q) == 0;
    bool common = poly_gcd(p, q).degree() >= 1;
    CHECK(zero == common);
    shared += common;
  }
  CHECK(shared >= 30);
}

TEST_CASE("isolate_roots") {
  auto i_boxes = isolate_roots(P({1, 0, 1}), 20);
  REQUIRE(i_boxes.size() == 2);
  CHECK(i_boxes[0].contains(ComplexRational(0, -1)));
  CHECK(i_boxes[1].contains(ComplexRational(0, 1)));
  CHECK_FALSE(i_boxes[0].intersects(i_boxes[1]));

  auto half = isolate_roots(Polynomial{Rational(-1, 2), 1}, 10);
  REQUIRE(half.size() == 1);
  CHECK(half[0].contains(ComplexRational(Rational(1, 2))));

  auto cube = isolate_roots(P({-2, 0, 0, 1}), 40);
  REQUIRE(cube.size() == 3);
  auto numeric = oracle::numeric_roots(P({-2, 0, 0, 1}));
  int real_count = 0;
  for (const auto& b : cube) {
    if (b.radius() < Rational(1, 1 << 20) && b.im() == 0) ++real_count;
    bool matched = false;
    for (auto z : numeric)
      matched |= std::abs(std::complex<double>(b.re().get_d(), b.im().get_d()) -
                          std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()))) < 1e-9;
    CHECK(matched);
  }
  bool has_real = false;
  for (const auto& b : cube) has_real |= std::abs(b.re().get_d() - std::cbrt(2.0)) < 1e-12 && std::abs(b.im().get_d()) < 1e-12;
  CHECK(has_real);
  CHECK_THROWS_AS(isolate_roots(P({1, -2, 1}), 10), Error);
}

TEST_CASE("isolation invariants: disjoint, degree-many, nested under refinement") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> deg(2, 8);
    Polynomial p = oracle::random_poly(rng, deg(rng), 9);
    if (!is_squarefree(p)) continue;
    auto coarse = isolate_roots(p, 16);
    REQUIRE(static_cast<long>(coarse.size()) == p.degree());
    for (std::size_t i = 0; i < coarse.size(); ++i)
      for (std::size_t j = i + 1; j < coarse.size(); ++j) CHECK_FALSE(coarse[i].intersects(coarse[j]));
    for (const auto& b : coarse) {
      ComplexBox fine = refine_root(p, b, 32);
      CHECK(b.contains(fine));
      CHECK(fine.radius() <= Rational(1, Integer(1) << 32));
    }
  }
}

TEST_CASE("isolation handles clustered and high-degree inputs") {
  // (27 z^3 - 1) and z^40 - 1
  CHECK(isolate_roots(P({-1, 0, 0, 27}), 30).size() == 3);
  CHECK(isolate_roots(Polynomial::monomial(1, 40) - Polynomial::constant(1), 20).size() == 40);
  // Two roots 2^-30 apart.
  Rational eps(1, Integer(1) << 30);
  Polynomial close = Polynomial{-1, 1} * Polynomial{-(1 + eps), 1};
  auto boxes = isolate_roots(close, 8);
  CHECK(boxes.size() == 2);
}

TEST_CASE("alg_div") {
  auto q = alg_div(rat(2), rat(3));
  CHECK(q.poly() == P({-2, 3}));
  AlgebraicNumber i = root_near(P({1, 0, 1}), 0, 1);
  AlgebraicNumber minus_i = root_near(P({1, 0, 1}), 0, -1);
  CHECK(alg_equals(alg_div(i, i), rat(1)));
  CHECK(alg_equals(alg_div(i, minus_i), rat(-1)));
  CHECK_THROWS_AS(alg_div(i, rat(0)), Error);
  // irrational divisor: sqrt2 / sqrt3 squared is 2/3
  AlgebraicNumber s2 = root_near(P({-2, 0, 1}), 1.4, 0), s3 = root_near(P({-3, 0, 1}), 1.7, 0);
  CHECK(alg_equals(alg_pow(alg_div(s2, s3), 2), rat(2, 3)));
}

TEST_CASE("alg_pow") {
  AlgebraicNumber s2 = root_near(P({-2, 0, 1}), 1.4, 0);
  CHECK(alg_equals(alg_pow(s2, 0), rat(1)));
  CHECK(alg_equals(alg_pow(s2, 2), rat(2)));
  CHECK(alg_equals(alg_pow(s2, -2), rat(1, 2)));
  AlgebraicNumber i = root_near(P({1, 0, 1}), 0, 1);
  CHECK(alg_equals(alg_pow(i, 4), rat(1)));
  CHECK(alg_equals(alg_pow(i, 2), rat(-1)));
  CHECK(alg_equals(alg_pow(rat(0), 3), rat(0)));
  CHECK_THROWS_AS(alg_pow(rat(0), -1), Error);
}

TEST_CASE("alg_equals") {
  CHECK(alg_equals(rat(1, 2), rat(2, 4)));
  auto roots = AlgebraicNumber::roots_of(P({1, 0, 1}));
  REQUIRE(roots.size() == 2);
  CHECK_FALSE(alg_equals(roots[0], roots[1]));
  AlgebraicNumber a = root_near(P({-2, 0, 1}), 1.4, 0);
  AlgebraicNumber b = root_near(P({-4, 0, 0, 0, 1}), 1.4, 0);
  CHECK(std::abs(b.box().re().get_d() - std::sqrt(2.0)) < 1e-6);
  CHECK(alg_equals(a, b));
  CHECK_FALSE(alg_equals(a, root_near(P({-4, 0, 0, 0, 1}), -1.4, 0)));
}

TEST_CASE("alg_equals is an equivalence on differently represented numbers") {
  // sqrt(2) four ways, -sqrt(2) two ways, i two ways
  std::vector<std::pair<AlgebraicNumber, int>> pool = {
      {root_near(P({-2, 0, 1}), 1.4, 0), 0},
      {root_near(P({-4, 0, 0, 0, 1}), 1.4, 0), 0},
      {root_near(P({-2, 0, 1}) * P({-3, 1}), 1.4, 0), 0},
      {alg_div(rat(2), root_near(P({-2, 0, 1}), 1.4, 0)), 0},
      {root_near(P({-2, 0, 1}), -1.4, 0), 1},
      {alg_neg(root_near(P({-4, 0, 0, 0, 1}), 1.4, 0)), 1},
      {root_near(P({1, 0, 1}), 0, 1), 2},
      {root_near(P({1, 0, 0, 0, 0, 0, 1}), 0, 1), 2},
  };
  for (const auto& [x, cx] : pool)
    for (const auto& [y, cy] : pool) CHECK(alg_equals(x, y) == (cx == cy));
}

TEST_CASE("division then multiplication recovers the dividend") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    long n1 = d(rng), n2 = d(rng);
    long m1 = std::abs(d(rng)) + 1, m2 = std::abs(d(rng)) + 1;
    if (n2 == 0) n2 = 1;
    auto a = rat(n1, m1), b = rat(n2, m2);
    CHECK(alg_equals(alg_mul(alg_div(a, b), b), a));
  }
  AlgebraicNumber s = root_near(P({-2, 0, 1}), 1.4, 0), c = root_near(P({-2, 0, 0, 1}), 1.26, 0);
  CHECK(alg_equals(alg_mul(alg_div(s, c), c), s));
}

TEST_CASE("ratio_set_poly") {
  auto rootset = [](const Polynomial& p) { return AlgebraicNumber::roots_of(p); };
  auto r1 = rootset(ratio_set_poly(P({-1, 1}), P({-1, 1})));
  REQUIRE(r1.size() == 1);
  CHECK(alg_equals(r1[0], rat(1)));
  Polynomial ii = ratio_set_poly(P({1, 0, 1}), P({1, 0, 1}));
  CHECK(ii == P({-1, 0, 1}));
  CHECK(ratio_set_poly(P({-2, 1}), P({-3, 1})) == P({-2, 3}));
  CHECK_THROWS_AS(ratio_set_poly(P({1, 1}), P({0, 1})), Error);
}

TEST_CASE("ratio_set_poly brute force on random pairs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 25) {
    std::uniform_int_distribution<int> deg(1, 4);
    Polynomial p = oracle::random_poly(rng, deg(rng), 6), q = oracle::random_poly(rng, deg(rng), 6);
    if (q.coeff(0) == 0 || !is_squarefree(p) || !is_squarefree(q)) continue;
    ++checked;
    Polynomial r = ratio_set_poly(p, q);
    auto boxes = isolate_roots(r, 20);
    CHECK(static_cast<long>(boxes.size()) <= p.degree() * q.degree());
    auto pr = oracle::numeric_roots(p), qr = oracle::numeric_roots(q);
    std::vector<oracle::cplx> ratios;
    for (auto x : pr)
      for (auto y : qr) ratios.push_back(x / y);
    auto near = [](const ComplexBox& b, oracle::cplx z) {
      long double dr = b.re().get_d() - z.real(), di = b.im().get_d() - z.imag();
      return std::sqrt(dr * dr + di * di) <= b.radius().get_d() + 1e-8L * (1 + std::abs(z));
    };
    for (auto z : ratios) {
      bool in_some = false;
      for (const auto& b : boxes) in_some |= near(b, z);
      CHECK(in_some);
    }
    for (const auto& b : boxes) {
      bool explained = false;
      for (auto z : ratios) explained |= near(b, z);
      CHECK(explained);
    }
  }
}

TEST_CASE("is_root_of_unity") {
  CHECK(is_root_of_unity(rat(1)) == 1U);
  CHECK(is_root_of_unity(rat(-1)) == 2U);
  AlgebraicNumber w = AlgebraicNumber::roots_of(P({1, 1, 1}))[0];
  CHECK(is_root_of_unity(w) == 3U);
  AlgebraicNumber phi = root_near(P({-1, -1, 1}), 1.6, 0);
  CHECK_FALSE(is_root_of_unity(phi).has_value());
  // a root of z^4 + 1 is a primitive 8th root of unity even when given a non-minimal polynomial
  AlgebraicNumber e8 = root_near(P({1, 0, 0, 0, 1}) * P({-5, 1}), 0.7, 0.7);
  CHECK(is_root_of_unity(e8) == 8U);
  // on the unit circle but not a root of unity: (3+4i)/5
  AlgebraicNumber t = root_near(P({25, -30, 25}), 0.6, 0.8);
  CHECK_FALSE(is_root_of_unity(t).has_value());
}

TEST_CASE("from_box rejects boxes that do not isolate a root") {
  CHECK_THROWS_AS(AlgebraicNumber::from_box(P({-2, 0, 1}), ComplexBox(ComplexRational(5), Rational(1, 2))), Error);
  CHECK_THROWS_AS(AlgebraicNumber::from_box(P({-2, 0, 1}), ComplexBox(ComplexRational(0), Rational(2))), Error);
  // non-squarefree input is reduced
  auto a = AlgebraicNumber::from_box(P({-2, 0, 1}) * P({-2, 0, 1}), ComplexBox(ComplexRational(1), Rational(1, 2)));
  CHECK(a.poly() == P({-2, 0, 1}));
}
