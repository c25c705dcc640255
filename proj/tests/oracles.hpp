#pragma once

// Test-only reference computations, independent of the library code paths
// they are used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "efcert/polynomial.hpp"

namespace oracle {

using cplx = std::complex<long double>;

inline std::vector<cplx> numeric_roots(const efcert::Polynomial& p) {
  const long n = p.degree();
  std::vector<long double> c;
  for (const auto& q : p.coefficients()) c.push_back(q.get_d());
  for (auto& x : c) x /= c.back();
  std::vector<cplx> z(static_cast<std::size_t>(n));
  const cplx seed(0.4L, 0.9L);
  for (long k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::pow(seed, static_cast<long double>(k));
  auto eval = [&](cplx x) {
    cplx acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    for (long i = 0; i < n; ++i) {
      cplx denom = 1;
      for (long j = 0; j < n; ++j)
        if (j != i) denom *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      z[static_cast<std::size_t>(i)] -= eval(z[static_cast<std::size_t>(i)]) / denom;
    }
  }
  return z;
}

inline efcert::Polynomial random_poly(std::mt19937_64& rng, int degree, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<efcert::Rational> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(d(rng));
  if (c.back() == 0) c.back() = 1;
  return efcert::Polynomial(c);
}

// Taylor coefficients c_n (not E-normalised) from textbook closed forms.
inline efcert::Rational fact(unsigned n) {
  efcert::Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return efcert::Rational(r);
}

inline std::vector<efcert::Rational> taylor_exp(unsigned count) {
  std::vector<efcert::Rational> c;
  for (unsigned n = 0; n < count; ++n) c.push_back(1 / fact(n));
  return c;
}

// J0(z) = sum (-1)^m (z/2)^(2m) / (m!)^2
inline std::vector<efcert::Rational> taylor_j0(unsigned count) {
  std::vector<efcert::Rational> c(count, efcert::Rational(0));
  for (unsigned m = 0; 2 * m < count; ++m) {
    efcert::Rational v = 1 / (fact(m) * fact(m) * efcert::Rational(efcert::Integer(1) << (2 * m)));
    c[2 * m] = m % 2 ? efcert::Rational(-v) : v;
  }
  return c;
}

// Si(z) = sum (-1)^m z^(2m+1) / ((2m+1) (2m+1)!)
inline std::vector<efcert::Rational> taylor_si(unsigned count) {
  std::vector<efcert::Rational> c(count, efcert::Rational(0));
  for (unsigned m = 0; 2 * m + 1 < count; ++m) {
    efcert::Rational v = 1 / (efcert::Rational(2 * m + 1) * fact(2 * m + 1));
    c[2 * m + 1] = m % 2 ? efcert::Rational(-v) : v;
  }
  return c;
}

inline std::vector<efcert::Rational> e_normalise(const std::vector<efcert::Rational>& c) {
  std::vector<efcert::Rational> a(c.size());
  for (unsigned n = 0; n < c.size(); ++n) a[n] = c[n] * fact(n);
  return a;
}

// Dense representation of sum_b p_b(z) d^b with polynomial coefficients
// (index [b][e]), solved term by term: for p_s(0) != 0 the z^(m-s)
// coefficient of l(sum_{k<=m} c_k z^k) is linear in c_m.
using DenseOp = std::vector<std::vector<efcert::Rational>>;

inline std::vector<efcert::Rational> apply_dense(const DenseOp& l, const std::vector<efcert::Rational>& c) {
  std::vector<efcert::Rational> out(c.size() + 64, efcert::Rational(0));
  for (std::size_t b = 0; b < l.size(); ++b)
    for (std::size_t e = 0; e < l[b].size(); ++e)
      for (std::size_t m = b; m < c.size(); ++m) {
        efcert::Rational f = c[m] * l[b][e];
        for (std::size_t t = 0; t < b; ++t) f *= static_cast<long>(m - t);
        std::size_t idx = m - b + e;
        if (idx >= out.size()) out.resize(idx + 1, efcert::Rational(0));
        out[idx] += f;
      }
  return out;
}

inline std::vector<efcert::Rational> solve_dense(const DenseOp& l, std::vector<efcert::Rational> c, unsigned count) {
  const std::size_t s = l.size() - 1;
  while (c.size() < count) {
    const std::size_t m = c.size();
    c.push_back(0);
    efcert::Rational rest = apply_dense(l, c)[m - s];
    efcert::Rational lead = l[s][0];
    for (std::size_t t = 0; t < s; ++t) lead *= static_cast<long>(m - t);
    c.back() = -rest / lead;
  }
  return c;
}

}  // namespace oracle
