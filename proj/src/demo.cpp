#include "efcert/demo.hpp"

namespace efcert {

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

AlgebraicNumber at(long p, long d = 1) { return AlgebraicNumber::from_rational(q(p, d)); }

AlgebraicNumber imaginary_unit(const PrecisionPolicy& policy) {
  for (const auto& r : AlgebraicNumber::roots_of(Polynomial{1, 0, 1}, policy))
    if (r.box().im() > 0) return r;
  return AlgebraicNumber();
}

HypergeometricParams hyp(std::vector<Rational> a, std::vector<Rational> b) { return {std::move(a), std::move(b)}; }

}  // namespace

std::vector<DemoCase> demo_cases() {
  using V = Verdict;
  const auto C = V::CertifiedIndependent, I = V::Inconclusive;
  std::vector<DemoCase> cs;
  cs.push_back({"exp at 1, 2, 1/2, -3 (Lindemann-Weierstrass)",
                [](const PrecisionPolicy& p) { return certify_single(ef_exp(), {at(1), at(2), at(1, 2), at(-3)}, p); }, C});
  cs.push_back({"exp at 1, 2, 3",
                [](const PrecisionPolicy& p) { return certify_single(ef_exp(), {at(1), at(2), at(3)}, p); }, C});
  cs.push_back({"J0 at 2, -2 (ratio -1 is a singularity ratio)",
                [](const PrecisionPolicy& p) { return certify_single(ef_bessel_j0(), {at(2), at(-2)}, p); }, I});
  cs.push_back({"J0 at 2, 3", [](const PrecisionPolicy& p) { return certify_single(ef_bessel_j0(), {at(2), at(3)}, p); },
                C});
  cs.push_back({"J0 at 1, i",
                [](const PrecisionPolicy& p) { return certify_single(ef_bessel_j0(), {at(1), imaginary_unit(p)}, p); }, C,
                false});
  cs.push_back({"exp and J0 at 1 (disjoint singularity sets)",
                [](const PrecisionPolicy& p) { return certify_main({ef_exp(), ef_bessel_j0()}, at(1), p); }, C});
  cs.push_back({"J0 and Si at 1 (both sets are {i, -i})",
                [](const PrecisionPolicy& p) { return certify_main({ef_bessel_j0(), ef_sin_integral()}, at(1), p); }, I});
  cs.push_back({"exp at 0", [](const PrecisionPolicy& p) { return certify_main({ef_exp()}, at(0), p); }, I});
  cs.push_back({"Si at 1", [](const PrecisionPolicy& p) { return certify_multi({ef_sin_integral()}, {at(1)}, p); }, C});
  cs.push_back({"hypergeometric k = 1, 2 at 1/2, 1",
                [](const PrecisionPolicy& p) {
                  return certify_hypergeometric({hyp({}, {1}), hyp({}, {1, 1})}, {at(1, 2), at(1)}, p);
                },
                C});
  cs.push_back({"hypergeometric k = 1, 2 at 8, 1",
                [](const PrecisionPolicy& p) {
                  return certify_hypergeometric({hyp({}, {1}), hyp({}, {1, 1})}, {at(8), at(1)}, p);
                },
                C});
  cs.push_back({"hypergeometric k = 1, 2 at 2, 1 (power condition boundary)",
                [](const PrecisionPolicy& p) {
                  return certify_hypergeometric({hyp({}, {1}), hyp({}, {1, 1})}, {at(2), at(1)}, p);
                },
                I});
  cs.push_back({"hypergeometric k = 2, 2 at 2, -2 (equal k, distinct points)",
                [](const PrecisionPolicy& p) {
                  return certify_hypergeometric({hyp({}, {1, 1}), hyp({q(1, 3)}, {q(1, 2), 1, 1})}, {at(2), at(-2)}, p);
                },
                C});
  cs.push_back({"hypergeometric k = 1, 1 at 2, 3",
                [](const PrecisionPolicy& p) {
                  return certify_hypergeometric({hyp({}, {1}), hyp({q(1, 2)}, {q(3, 2), 2})}, {at(2), at(3)}, p);
                },
                C});
  cs.push_back({"Si integrals over [1, 2] and [3, 4]",
                [](const PrecisionPolicy& p) { return certify_si_integrals({{at(1), at(2)}, {at(3), at(4)}}, p); }, C});
  cs.push_back({"Si integral over [1, -1] (equal squares)",
                [](const PrecisionPolicy& p) { return certify_si_integrals({{at(1), at(-1)}}, p); }, I});
  cs.push_back({"Si integral over [0, 1]",
                [](const PrecisionPolicy& p) { return certify_si_integrals({{at(0), at(1)}}, p); }, C});
  cs.push_back({"Lagrange combination g of exp over 1, 2 at the points 1, 2",
                [](const PrecisionPolicy& p) {
                  EFunction g = ef_lagrange_combo(ef_exp(), {1, 2});
                  return certify_multi({g, g}, {at(1), at(2)}, p);
                },
                I, true, true});
  return cs;
}

}  // namespace efcert
