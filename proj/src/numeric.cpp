#include "efcert/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "efcert/error.hpp"

namespace efcert {

namespace {

Rational upper_exp(const Rational& t) {
  // e^t <= 3^ceil(t) for t >= 0
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return pow(Rational(3), c.get_ui());
}

Rational from_double_upper(double x) {
  Rational r(std::ceil(x * 1024.0));
  return r / 1024;
}

struct Bound {
  Rational K, C;
  bool rigorous;
};

Bound growth_of(const EFunction& f) {
  if (f.growth_bound()) return {f.growth_bound()->K, f.growth_bound()->C, true};
  const std::size_t n = 64;
  GrowthReport rep = growth_check(f, n);
  Rational C = from_double_upper(rep.c_estimate * 1.25);
  if (C < 1) C = 1;
  auto a = f.coefficients(n + 1);
  Rational K = 1, Cm = 1;
  for (std::size_t m = 0; m <= n; ++m) {
    Rational r = abs(a[m]) / Cm;
    if (r > K) K = r;
    Cm *= C;
  }
  return {K, C, false};
}

long bits_for(const Rational& eps) { return -floor_log2(eps) + 2; }

// sum_{n <= M/k} a_(kn) x^n / (kn)!, each term rounded to the 2^-bits grid.
ComplexRational partial_sum(const std::vector<Rational>& a, const ComplexRational& x, unsigned k, std::size_t M,
                            long bits) {
  ComplexRational sum(0), pw(1);
  for (std::size_t n = 0; n * k <= M; ++n) {
    if (n > 0) {
      Integer step = 1;
      for (std::size_t j = k * (n - 1) + 1; j <= k * n; ++j) step *= static_cast<unsigned long>(j);
      pw = pw * x;
      pw.re /= step;
      pw.im /= step;
    }
    const Rational& c = a[k * n];
    if (c == 0) continue;
    sum.re += round_to_grid(c * pw.re, bits);
    sum.im += round_to_grid(c * pw.im, bits);
  }
  return sum;
}

}  // namespace

bool Ball::contains(const ComplexRational& z) const { return (z - mid).norm2() <= radius * radius; }

bool Ball::contains(const Ball& other) const {
  Rational room = radius - other.radius;
  return room >= 0 && (other.mid - mid).norm2() <= room * room;
}

std::string Ball::to_string(unsigned digits) const {
  Rational e_re, e_im;
  std::string s = to_decimal(mid.re, digits, &e_re);
  if (mid.im != 0) {
    std::string im = to_decimal(mid.im, digits, &e_im);
    s += (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "*i";
  }
  s += " +/- " + to_decimal_upper(radius + e_re + e_im, 3 + digits);
  if (heuristic) s += " (heuristic tail)";
  return s;
}

Ball eval_efunction(const EFunction& f, const ComplexBox& x, unsigned digits, const PrecisionPolicy& policy,
                    unsigned root) {
  if (root == 0) fail(ErrorCode::InvalidInput, "evaluation root index must be positive");
  const long needed = static_cast<long>(std::ceil((digits + 12) * std::log2(10.0))) + 16;
  if (needed > policy.max_bits)
    fail(ErrorCode::PrecisionExceeded, "evaluation at " + std::to_string(digits) + " digits needs about " +
                                           std::to_string(needed) + " bits, above the cap of " +
                                           std::to_string(policy.max_bits));
  const Rational target = pow10(-static_cast<long>(digits)) / 2;
  if (x.radius() == 0 && x.center().is_zero()) {
    auto a = f.coefficients(1);
    return {ComplexRational(a[0]), 0, false};
  }
  const Rational eps = pow10(-static_cast<long>(digits) - 10);
  const Bound bd = growth_of(f);
  const Rational R = x.abs_upper();
  const Rational Y = root == 1 ? R : std::max(R, Rational(1));
  const Rational t = bd.C * Y;

  // Smallest M with M + 1 >= 2t and 2K t^(M+1)/(M+1)! <= eps/4; beyond 2t the
  // terms at least halve, so the tail is at most twice its first term.
  std::size_t M = 0;
  Rational first = 1;  // t^(M+1)/(M+1)!
  {
    Integer two_t;
    Rational tt = 2 * t;
    mpz_cdiv_q(two_t.get_mpz_t(), tt.get_num_mpz_t(), tt.get_den_mpz_t());
    first = t;
    while (M + 1 < two_t.get_ui() || 2 * bd.K * first > eps / 4) {
      ++M;
      first = first * t / static_cast<unsigned long>(M + 1);
      if (M > 200000) fail(ErrorCode::PrecisionExceeded, "series truncation order out of range");
    }
  }
  Rational tail = 2 * bd.K * first;

  Rational lip_err = 0;
  if (x.radius() != 0) {
    const Rational t2 = bd.C * std::max(R, Rational(1));
    lip_err = bd.K * t2 * upper_exp(t2) * x.radius();
    if (lip_err > eps / 4)
      fail(ErrorCode::PrecisionExceeded, "evaluation point enclosure too wide for " + std::to_string(digits) + " digits");
  }

  auto sum_at = [&](std::size_t m, Rational& round_err) -> ComplexRational {
    const std::size_t terms = m / root + 1;
    const long bits = bits_for(eps / (4 * Rational(static_cast<unsigned long>(terms + 1))));
    auto a = f.coefficients(m + 1);
    if (root > 1)
      for (std::size_t i = 0; i <= m; ++i)
        if (i % root != 0 && a[i] != 0)
          fail(ErrorCode::InvalidInput, f.name() + " is not a series in z^" + std::to_string(root));
    round_err = Rational(static_cast<unsigned long>(terms)) / pow(Rational(2), static_cast<unsigned long>(bits));
    return partial_sum(a, x.center(), root, m, bits);
  };

  Rational round_err;
  ComplexRational mid = sum_at(M, round_err);
  bool heuristic = !bd.rigorous;
  if (heuristic) {
    // No proven bound: accept once doubling the order no longer moves the sum.
    for (int attempt = 0;; ++attempt) {
      Rational e2;
      ComplexRational next = sum_at(2 * M, e2);
      if (abs_upper(next - mid) <= eps / 4) {
        mid = next;
        round_err = e2;
        break;
      }
      if (attempt == 6) fail(ErrorCode::PrecisionExceeded, "heuristic evaluation of " + f.name() + " did not settle");
      mid = next;
      M *= 2;
    }
  }
  Rational total = tail + round_err + lip_err;
  Ball out{mid, target, heuristic};
  if (total > target) out.radius = total;
  return out;
}

Ball eval_efunction(const EFunction& f, const AlgebraicNumber& x, unsigned digits, const PrecisionPolicy& policy,
                    unsigned root) {
  if (auto r = x.as_rational()) return eval_efunction(f, ComplexBox::exact(*r), digits, policy, root);
  const Bound bd = growth_of(f);
  const Rational t2 = bd.C * (x.box().abs_upper() + 1);
  const Rational eps = pow10(-static_cast<long>(digits) - 10);
  const Rational lip = bd.K * t2 * upper_exp(t2);
  const long bits = bits_for(eps / (8 * lip)) + 4;
  if (bits > policy.max_bits)
    fail(ErrorCode::PrecisionExceeded, "refining " + x.to_string() + " needs " + std::to_string(bits) + " bits");
  AlgebraicNumber fine = x.refined(bits, policy);
  return eval_efunction(f, fine.box(), digits, policy, root);
}

Ball eval_term(const EvalTerm& term, unsigned digits, const PrecisionPolicy& policy) {
  return eval_efunction(term.function, term.point, digits, policy, term.root);
}

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  const std::size_t dim = b[0].size();
  const Rational delta(3, 4);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> B(n);
  {
    std::vector<std::vector<Rational>> bs(n, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t d = 0; d < dim; ++d) bs[i][d] = b[i][d];
      for (std::size_t j = 0; j < i; ++j) {
        Rational dot = 0;
        for (std::size_t d = 0; d < dim; ++d) dot += Rational(b[i][d]) * bs[j][d];
        mu[i][j] = dot / B[j];
        for (std::size_t d = 0; d < dim; ++d) bs[i][d] -= mu[i][j] * bs[j][d];
      }
      B[i] = 0;
      for (std::size_t d = 0; d < dim; ++d) B[i] += bs[i][d] * bs[i][d];
      if (B[i] == 0) fail(ErrorCode::InvalidInput, "LLL basis is linearly dependent");
    }
  }
  auto reduce = [&](std::size_t k, std::size_t l) {
    Rational half(1, 2);
    if (abs(mu[k][l]) <= half) return;
    Rational s = mu[k][l] + half;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    for (std::size_t d = 0; d < dim; ++d) b[k][d] -= q * b[l][d];
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
  };
  std::size_t k = 1;
  while (k < n) {
    reduce(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      Rational m = mu[k][k - 1];
      Rational Bn = B[k] + m * m * B[k - 1];
      mu[k][k - 1] = m * B[k - 1] / Bn;
      B[k] = B[k - 1] * B[k] / Bn;
      B[k - 1] = Bn;
      for (std::size_t i = k + 1; i < n; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
}

RelationReport find_integer_relation(const std::vector<Ball>& values, const Integer& coeff_bound, unsigned digits) {
  if (values.size() < 2) fail(ErrorCode::InvalidInput, "integer relation search needs at least two values");
  if (coeff_bound < 1) fail(ErrorCode::InvalidInput, "coefficient bound must be positive");
  const Rational resolution = pow10(-static_cast<long>(digits));
  const Rational max_radius = pow10(-static_cast<long>(digits) - 10);
  bool complex = false;
  for (const auto& v : values) {
    if (v.radius >= max_radius)
      fail(ErrorCode::PrecisionExceeded, "values too imprecise for a relation search at " + std::to_string(digits) +
                                             " digits (radius must be below 1e-" + std::to_string(digits + 10) + ")");
    complex = complex || v.mid.im != 0;
  }
  const std::size_t m = values.size();
  const Integer W = pow10(static_cast<long>(digits)).get_num();
  auto round_int = [](const Rational& x) {
    Rational s = x + Rational(1, 2);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return q;
  };
  std::vector<std::vector<Integer>> basis(m, std::vector<Integer>(m + 1 + (complex ? 1 : 0), 0));
  for (std::size_t i = 0; i < m; ++i) {
    basis[i][i] = 1;
    basis[i][m] = round_int(values[i].mid.re * W);
    if (complex) basis[i][m + 1] = round_int(values[i].mid.im * W);
  }
  lll_reduce(basis);

  RelationReport rep;
  rep.digits = digits;
  rep.coeff_bound = coeff_bound;
  for (const auto& row : basis) {
    std::vector<Integer> c(row.begin(), row.begin() + static_cast<long>(m));
    Integer l1 = 0, linf = 0;
    for (const auto& x : c) {
      Integer a = abs(x);
      l1 += a;
      linf = std::max(linf, a);
    }
    if (l1 == 0 || linf > coeff_bound) continue;
    ComplexRational comb(0);
    Rational spread = 0;
    for (std::size_t i = 0; i < m; ++i) {
      comb = comb + ComplexRational(Rational(c[i])) * values[i].mid;
      spread += Rational(abs(c[i])) * values[i].radius;
    }
    Rational size = abs_upper(comb);
    if (size <= Rational(l1) * resolution) {
      for (const auto& x : c)
        if (x != 0) {
          if (x < 0)
            for (auto& y : c) y = -y;
          break;
        }
      rep.found = true;
      rep.coefficients = c;
      rep.residual_bound = size + spread;
      rep.note = "relation holds to within " + to_decimal_upper(rep.residual_bound, digits + 12) +
                 "; numerical evidence, not a proof";
      return rep;
    }
  }
  // A relation within the bound would give a lattice vector of squared length
  // at most m B^2 + coords (2 m B)^2; LLL's first vector is within 2^((m-1)/2)
  // of the shortest one.
  Rational Bq = Rational(coeff_bound);
  Rational lambda2 = Rational(static_cast<unsigned long>(m)) * Bq * Bq +
                     Rational(complex ? 2 : 1) * pow(2 * Bq * static_cast<unsigned long>(m), 2);
  Rational b1 = 0;
  for (const auto& x : basis[0]) b1 += Rational(x * x);
  rep.excluded = b1 > pow(Rational(2), m - 1) * lambda2;
  rep.note = rep.excluded ? "no relation with coefficients up to " + coeff_bound.get_str() + " at " +
                                std::to_string(digits) + " digits; numerical evidence, not a proof"
                          : "no relation found, but the precision is too low to exclude one with coefficients up to " +
                                coeff_bound.get_str();
  return rep;
}

FalsifyReport falsify(const Certificate& cert, unsigned digits, const Integer& coeff_bound,
                      const PrecisionPolicy& policy) {
  FalsifyReport out;
  if (cert.terms.empty()) {
    out.skipped = true;
    out.notice = "nothing to evaluate: the certificate lists no evaluable values";
    return out;
  }
  out.labels.push_back("1");
  out.values.push_back(Ball{ComplexRational(1), 0, false});
  bool heuristic = false;
  for (const auto& t : cert.terms) {
    try {
      out.values.push_back(eval_term(t, digits + 11, policy));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unsupported) throw;
      out.skipped = true;
      out.notice = "cannot evaluate " + t.label + ": " + e.what();
      out.values.clear();
      out.labels.clear();
      return out;
    }
    out.labels.push_back(t.label);
    heuristic = heuristic || out.values.back().heuristic;
  }
  out.relation = find_integer_relation(out.values, coeff_bound, digits);
  out.contradiction = out.relation.found && cert.verdict == Verdict::CertifiedIndependent;
  if (heuristic) out.notice = "some values use a heuristic tail bound";
  return out;
}

}  // namespace efcert
