#include "efcert/efunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "efcert/error.hpp"

namespace efcert {

namespace {

DiffOperator theta() { return DiffOperator::term(1, LaurentPolynomial::monomial(1, 1)); }

DiffOperator constant_op(const Rational& c) { return DiffOperator::multiplication(LaurentPolynomial::constant(c)); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational falling(long x, unsigned k) {
  Rational r = 1;
  for (unsigned t = 0; t < k; ++t) r *= x - static_cast<long>(t);
  return r;
}

double log_abs(const Rational& x) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

std::string rat_label(const Rational& r) {
  std::string s = to_string(r);
  return s.find('/') == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

EFunction::EFunction(std::string name, DiffOperator annihilator, std::vector<Rational> initial_values,
                     Generator generator)
    : name_(std::move(name)),
      annihilator_(std::move(annihilator)),
      initial_values_(std::move(initial_values)),
      generator_(std::move(generator)) {
  if (annihilator_.is_zero()) fail(ErrorCode::InvalidInput, "E-function '" + name_ + "' has an empty annihilator");
  if (initial_values_.size() < annihilator_.order())
    fail(ErrorCode::InvalidInput, "E-function '" + name_ + "' needs " + std::to_string(annihilator_.order()) +
                                      " initial values");
}

EFunction& EFunction::with_closed_form(RootSet s) {
  closed_form_ = std::move(s);
  return *this;
}

EFunction& EFunction::with_growth_bound(GrowthBound b) {
  bound_ = std::move(b);
  return *this;
}

EFunction& EFunction::renamed(std::string name) {
  name_ = std::move(name);
  return *this;
}

void HypergeometricParams::validate() const {
  if (lower.size() <= upper.size())
    fail(ErrorCode::InvalidInput, "hypergeometric parameters need s > r >= 0 (got r = " +
                                      std::to_string(upper.size()) + ", s = " + std::to_string(lower.size()) + ")");
  for (std::size_t j = 0; j < lower.size(); ++j) {
    const Rational& b = lower[j];
    if (b.get_den() == 1 && b <= 0)
      fail(ErrorCode::InvalidInput, "lower parameter b_" + std::to_string(j + 1) + " = " + to_string(b) +
                                        " is a nonpositive integer");
  }
}

EFunction ef_exp() {
  EFunction f("exp", parse_operator("∂ - 1"), {1}, [](std::size_t n) { return std::vector<Rational>(n, Rational(1)); });
  f.with_closed_form(make_rootset(Polynomial{-1, 1}, Provenance::ClosedForm)).with_growth_bound({1, 1});
  return f;
}

EFunction ef_bessel_j0() {
  // a_{2m} = (-1)^m binomial(2m, m) / 4^m
  auto gen = [](std::size_t n) {
    std::vector<Rational> a(n, Rational(0));
    for (std::size_t m = 0; 2 * m < n; ++m) {
      Rational v(binomial(2 * m, m), Integer(1) << (2 * m));
      v.canonicalize();
      a[2 * m] = m % 2 ? Rational(-v) : v;
    }
    return a;
  };
  EFunction f("J0", parse_operator("z*∂^2 + ∂ + z"), {1, 0}, gen);
  f.with_closed_form(make_rootset(Polynomial{1, 0, 1}, Provenance::ClosedForm)).with_growth_bound({1, 1});
  return f;
}

EFunction ef_sin_integral() {
  // a_{2m+1} = (-1)^m / (2m + 1)
  auto gen = [](std::size_t n) {
    std::vector<Rational> a(n, Rational(0));
    for (std::size_t m = 0; 2 * m + 1 < n; ++m) {
      Rational v(1, static_cast<unsigned long>(2 * m + 1));
      a[2 * m + 1] = m % 2 ? Rational(-v) : v;
    }
    return a;
  };
  EFunction f("Si", parse_operator("z*∂^3 + 2*∂^2 + z*∂"), {0, 1, 0}, gen);
  f.with_closed_form(make_rootset(Polynomial{1, 0, 1}, Provenance::ClosedForm)).with_growth_bound({1, 1});
  return f;
}

EFunction ef_hypergeometric(const HypergeometricParams& params) {
  params.validate();
  const unsigned k = params.k();
  const std::size_t s = params.lower.size();

  // a_{kn} = (kn)! prod (a_i)_n / prod (b_j)_n, other coefficients zero.
  auto gen = [params, k](std::size_t count) {
    std::vector<Rational> a(count, Rational(0));
    Rational term = 1;
    for (std::size_t n = 0; n * k < count; ++n) {
      a[n * k] = term;
      for (unsigned t = 1; t <= k; ++t) term *= static_cast<unsigned long>(n * k + t);
      for (const auto& ai : params.upper) term *= ai + static_cast<unsigned long>(n);
      for (const auto& bj : params.lower) term /= bj + static_cast<unsigned long>(n);
    }
    return a;
  };

  // theta prod_j (theta + k(b_j - 1)) - k^k z^k (theta + k) prod_i (theta + k a_i)
  DiffOperator lhs = theta();
  for (const auto& bj : params.lower) lhs = op_compose(lhs, theta() + constant_op(Rational(k) * (bj - 1)));
  DiffOperator rhs = theta() + constant_op(k);
  for (const auto& ai : params.upper) rhs = op_compose(rhs, theta() + constant_op(Rational(k) * ai));
  rhs = LaurentPolynomial::monomial(efcert::pow(Rational(k), k), k) * rhs;
  DiffOperator l = (lhs - rhs).normalized();

  std::vector<Rational> init = gen(s + 1);
  std::ostringstream name;
  name << "F(";
  for (std::size_t i = 0; i < params.upper.size(); ++i) name << (i ? "," : "") << to_string(params.upper[i]);
  name << ";";
  for (std::size_t j = 0; j < s; ++j) name << (j ? "," : "") << to_string(params.lower[j]);
  name << ")";

  // For n >= n1 every ratio |a_{k(n+1)} / a_{kn}| <= (2k)^k: it is at most
  // k^k ((n + M)/(n - M))^s with M bounding all |a_i|, |b_j| and 1.
  Rational M = 1;
  for (const auto& x : params.upper) M = std::max(M, abs(x));
  for (const auto& x : params.lower) M = std::max(M, abs(x));
  Integer n1 = M.get_num() / M.get_den() + 1;
  const Rational two_k = efcert::pow(Rational(2), k);
  while (efcert::pow(Rational(n1 + M) / Rational(n1 - M), s) > two_k) ++n1;
  const Rational C = 2 * k;
  Rational K = 0;
  const auto limit = static_cast<std::size_t>(n1.get_ui()) * k + 1;
  auto pre = gen(limit);
  Rational cpow = 1;
  for (std::size_t m = 0; m < limit; ++m) {
    K = std::max(K, Rational(abs(pre[m]) / cpow));
    cpow *= C;
  }

  EFunction f(name.str(), l, init, gen);
  f.with_closed_form(hypergeometric_singularities(k)).with_growth_bound({K, C});
  return f;
}

EFunction ef_from_ode(std::string name, DiffOperator annihilator, std::vector<Rational> initial_values) {
  if (annihilator.is_zero()) fail(ErrorCode::InvalidInput, "ODE function '" + name + "' has an empty operator");
  if (initial_values.size() < annihilator.order())
    fail(ErrorCode::InvalidInput, "ODE function '" + name + "' needs " + std::to_string(annihilator.order()) +
                                      " initial values, got " + std::to_string(initial_values.size()));
  Recurrence rec = recurrence_from_ode(annihilator);
  std::vector<Rational> c0(initial_values.size());
  for (std::size_t k = 0; k < c0.size(); ++k) c0[k] = initial_values[k] / Rational(factorial(k));
  auto gen = [rec, c0](std::size_t count) {
    std::vector<Rational> c = solve_recurrence(rec, c0, count);
    Integer fact = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) fact *= static_cast<unsigned long>(k);
      c[k] *= fact;
    }
    return c;
  };
  // Surface inconsistent or underdetermined data at construction time.
  gen(c0.size() + rec.span() + 8);
  return EFunction(std::move(name), std::move(annihilator), std::move(initial_values), gen);
}

EFunction ef_scale(const EFunction& f, const Rational& lambda) {
  if (lambda == 0) fail(ErrorCode::DomainError, "scaling an E-function by zero");
  if (lambda == 1) return f;
  auto inner = f;
  auto gen = [inner, lambda](std::size_t count) {
    auto a = inner.coefficients(count);
    Rational p = 1;
    for (auto& x : a) {
      x *= p;
      p *= lambda;
    }
    return a;
  };
  std::vector<Rational> init = gen(f.initial_values().size());
  EFunction g(f.name() + "(" + rat_label(lambda) + "*z)", f.annihilator().rescaled(lambda).normalized(), init, gen);
  if (f.closed_form_singularities())
    g.with_closed_form(rootset_scale(*f.closed_form_singularities(), AlgebraicNumber::from_rational(lambda)));
  if (f.growth_bound()) g.with_growth_bound({f.growth_bound()->K, f.growth_bound()->C * abs(lambda)});
  return g;
}

EFunction ef_scale(const EFunction& f, const AlgebraicNumber& lambda) {
  auto r = lambda.as_rational();
  if (!r)
    fail(ErrorCode::Unsupported, "scaling by the irrational number " + lambda.to_string() +
                                     " would leave rational coefficient streams");
  return ef_scale(f, *r);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

constexpr std::uint64_t kPrime = 4611686018427387847ULL;  // 2^62 - 57

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::optional<std::uint64_t> to_mod(const Rational& x) {
  std::uint64_t n = mpz_fdiv_ui(x.get_num_mpz_t(), kPrime), d = mpz_fdiv_ui(x.get_den_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  return mulmod(n, powmod(d, kPrime - 2));
}

// Rank modulo a prime never exceeds the rank over Q, so full rank mod p rules
// out a rational kernel. Returns true when a kernel may exist.
bool may_have_kernel(const std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> r(m.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto v = to_mod(m[i][j]);
      if (!v) return true;
      r[i][j] = *v;
    }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t p = row;
    while (p < r.size() && r[p][col] == 0) ++p;
    if (p == r.size()) return true;
    std::swap(r[p], r[row]);
    std::uint64_t inv = powmod(r[row][col], kPrime - 2);
    for (std::size_t i = row + 1; i < r.size(); ++i) {
      if (r[i][col] == 0) continue;
      std::uint64_t f = mulmod(r[i][col], inv);
      for (std::size_t c = col; c < cols; ++c) r[i][c] = (r[i][c] + kPrime - mulmod(f, r[row][c])) % kPrime;
    }
    ++row;
  }
  return false;
}

std::optional<DiffOperator> ansatz(const std::vector<Rational>& a, unsigned order, unsigned degree) {
  const std::size_t unknowns = static_cast<std::size_t>(order + 1) * (degree + 1);
  const std::size_t rows = unknowns + 16;
  if (a.size() < rows + order) fail(ErrorCode::InvalidInput, "ansatz prefix too short");
  // Coefficient of z^t in (z^e d^i) h, times t!: a_{t-e+i} * t!/(t-e)!.
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(unknowns, Rational(0)));
  for (std::size_t t = 0; t < rows; ++t)
    for (unsigned i = 0; i <= order; ++i)
      for (unsigned e = 0; e <= degree && e <= t; ++e)
        m[t][i * (degree + 1) + e] = a[t - e + i] * falling(static_cast<long>(t), e);
  if (!may_have_kernel(m, unknowns)) return std::nullopt;
  auto pivots = rref(m, unknowns);
  if (pivots.size() == unknowns) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t c = unknowns; c-- > 0;)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) {
      free_col = c;
      break;
    }
  std::vector<Rational> x(unknowns, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free_col];
  std::map<unsigned, LaurentPolynomial> terms;
  for (unsigned i = 0; i <= order; ++i) {
    std::vector<Rational> p(x.begin() + i * (degree + 1), x.begin() + (i + 1) * (degree + 1));
    terms.emplace(i, LaurentPolynomial(0, std::move(p)));
  }
  DiffOperator l(std::move(terms));
  if (l.is_zero()) return std::nullopt;
  return l.normalized();
}

bool annihilates(const DiffOperator& l, const std::vector<Rational>& a) {
  TruncatedSeries c{0, a};
  Integer fact = 1;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    c.coeffs[k] /= fact;
  }
  return op_apply(l, c).all_zero();
}

RootSet union_superset(const RootSet& a, const RootSet& b) {
  RootSet u = make_rootset(a.poly * b.poly, Provenance::LeadingCoefficientSuperset);
  u.includes_zero = a.includes_zero || b.includes_zero;
  return u;
}

}  // namespace

EFunction ef_sum(const EFunction& f, const EFunction& g, const SumOptions& options) {
  const unsigned cap = options.max_order ? options.max_order : f.annihilator().order() + g.annihilator().order();
  auto gen = [f, g](std::size_t count) {
    auto a = f.coefficients(count);
    auto b = g.coefficients(count);
    for (std::size_t k = 0; k < count; ++k) a[k] += b[k];
    return a;
  };
  const std::size_t longest = static_cast<std::size_t>(cap + 1) * (options.max_degree + 1) + 16 + cap;
  const std::vector<Rational> a = gen(longest + options.validation_terms);
  for (unsigned order = 1; order <= cap; ++order) {
    for (unsigned degree = 0; degree <= options.max_degree; ++degree) {
      auto l = ansatz(a, order, degree);
      if (!l || !annihilates(*l, a)) continue;
      std::vector<Rational> init(a.begin(), a.begin() + l->order());
      EFunction h("(" + f.name() + " + " + g.name() + ")", *l, init, gen);
      if (f.closed_form_singularities() && g.closed_form_singularities())
        h.with_closed_form(union_superset(*f.closed_form_singularities(), *g.closed_form_singularities()));
      if (f.growth_bound() && g.growth_bound())
        h.with_growth_bound({f.growth_bound()->K + g.growth_bound()->K,
                             std::max(f.growth_bound()->C, g.growth_bound()->C)});
      return h;
    }
  }
  fail(ErrorCode::Unsupported, "no annihilator of order <= " + std::to_string(cap) + " and degree <= " +
                                   std::to_string(options.max_degree) + " found for " + f.name() + " + " + g.name());
}

EFunction ef_derivative(const EFunction& f) {
  const DiffOperator& l = f.annihilator();
  // l = p_0 + S o d with S = sum_{i>=1} p_i d^(i-1)
  std::map<unsigned, LaurentPolynomial> s_terms;
  for (const auto& [i, p] : l.terms())
    if (i > 0) s_terms.emplace(i - 1, p);
  const DiffOperator S(std::move(s_terms));
  const LaurentPolynomial p0 = l.coeff(0);
  DiffOperator d;
  if (p0.is_zero()) {
    d = S;
  } else {
    // p0 f = -S f'; differentiating and eliminating f:
    // (p0^2 + p0 (d o S) - p0' S) f' = 0
    d = DiffOperator::multiplication(p0 * p0) + p0 * op_compose(DiffOperator::derivation(1), S) -
        p0.derivative() * S;
  }
  if (d.is_zero()) fail(ErrorCode::Unsupported, "derivative annihilator collapsed to zero");
  d = d.normalized();
  auto inner = f;
  auto gen = [inner](std::size_t count) {
    auto a = inner.coefficients(count + 1);
    a.erase(a.begin());
    return a;
  };
  EFunction g(f.name() + "'", d, gen(d.order()), gen);
  if (f.closed_form_singularities()) {
    // psi(f') = (psi(f) - f(0)) / z: same singularities away from zero.
    RootSet s = *f.closed_form_singularities();
    s.includes_zero = false;
    g.with_closed_form(s);
  }
  if (f.growth_bound()) g.with_growth_bound({f.growth_bound()->K * f.growth_bound()->C, f.growth_bound()->C});
  return g;
}

EFunction ef_mul_poly(const EFunction& f, const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "multiplying an E-function by the zero polynomial");
  if (p.is_constant() && p.coeff(0) == 1) return f;
  const DiffOperator& l = f.annihilator();
  const unsigned s = l.order();
  // l o (1/p) cleared by p^(s+1); (1/p)^(k) = N_k / p^(k+1).
  std::vector<Polynomial> N{Polynomial::constant(1)};
  const Polynomial dp = p.derivative();
  for (unsigned k = 0; k < s; ++k) N.push_back(N[k].derivative() * p - Rational(k + 1) * (N[k] * dp));
  std::vector<Polynomial> ppow{Polynomial::constant(1)};
  for (unsigned k = 0; k < s; ++k) ppow.push_back(ppow.back() * p);
  DiffOperator h;
  for (const auto& [i, pi] : l.terms())
    for (unsigned k = 0; k <= i; ++k) {
      LaurentPolynomial c = Rational(binomial(i, k)) * (pi * LaurentPolynomial(N[k] * ppow[s - k]));
      h = h + DiffOperator::term(i - k, c);
    }
  h = h.normalized();

  auto inner = f;
  auto gen = [inner, p](std::size_t count) {
    auto a = inner.coefficients(count);
    std::vector<Rational> b(count, Rational(0));
    // z^k f contributes falling(m, k) a_{m-k} to the m-th E-coefficient
    for (std::size_t m = 0; m < count; ++m)
      for (long k = 0; k <= p.degree() && static_cast<std::size_t>(k) <= m; ++k)
        if (p.coeff(static_cast<std::size_t>(k)) != 0)
          b[m] += p.coeff(static_cast<std::size_t>(k)) * falling(static_cast<long>(m), static_cast<unsigned>(k)) *
                  a[m - static_cast<std::size_t>(k)];
    return b;
  };
  EFunction g("(" + p.to_string() + ")*" + f.name(), h, gen(h.order()), gen);
  if (f.closed_form_singularities()) {
    RootSet sset = *f.closed_form_singularities();
    sset.provenance = Provenance::LeadingCoefficientSuperset;
    g.with_closed_form(sset);
  }
  if (f.growth_bound()) {
    // falling(m, k) <= k! 2^m, so |b_m| <= K sum |p_k| k! (2 max(C, 1))^m
    Rational C = std::max(f.growth_bound()->C, Rational(1));
    Rational weight = 0;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) weight += abs(p.coefficients()[k]) * Rational(factorial(k));
    g.with_growth_bound({f.growth_bound()->K * weight, 2 * C});
  }
  return g;
}

Polynomial lagrange_basis(const std::vector<Rational>& points, std::size_t i) {
  const Rational& ai = points.at(i);
  Polynomial L = Polynomial{0, 1 / ai};
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == i) continue;
    L = L * Polynomial{-points[j] / (ai - points[j]), 1 / (ai - points[j])};
  }
  return L;
}

EFunction ef_lagrange_combo(const EFunction& f, const std::vector<Rational>& points) {
  if (points.empty()) fail(ErrorCode::InvalidInput, "Lagrange combination needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == 0) fail(ErrorCode::InvalidInput, "Lagrange combination points must be nonzero");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) fail(ErrorCode::InvalidInput, "Lagrange combination points must be distinct");
  }
  std::optional<EFunction> g;
  for (std::size_t i = 0; i < points.size(); ++i) {
    EFunction term = ef_mul_poly(ef_scale(f, 1 / points[i]), lagrange_basis(points, i));
    g = g ? ef_sum(*g, term) : term;
  }
  std::ostringstream name;
  name << "lagrange[" << f.name() << "; ";
  for (std::size_t i = 0; i < points.size(); ++i) name << (i ? ", " : "") << to_string(points[i]);
  name << "]";
  g->renamed(name.str());
  return *g;
}

TruncatedSeries psi_series(const EFunction& f, std::size_t n) { return TruncatedSeries{0, f.coefficients(n + 1)}; }

GrowthReport growth_check(const EFunction& f, std::size_t n) {
  if (n < 8) fail(ErrorCode::InvalidInput, "growth check needs a prefix of at least 8 coefficients");
  auto a = f.coefficients(n + 1);
  GrowthReport rep;
  rep.prefix = n;
  Integer d = 1;
  std::vector<double> logc(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a[k].get_den_mpz_t());
    if (k == 0) continue;
    double la = a[k] == 0 ? -INFINITY : log_abs(a[k]);
    double ld = log_abs(Rational(d));
    logc[k] = std::max({la, ld, 0.0}) / static_cast<double>(k);
    rep.c_estimate = std::max(rep.c_estimate, std::exp(logc[k]));
  }
  // A geometric bound makes C_k = max(|a_k|, d_k)^(1/k) level off; a growing
  // trend in log C_k against log k (n! gives slope ~1) is flagged.
  const std::size_t lo = std::max<std::size_t>(2, n / 4);
  double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0;
  for (std::size_t k = lo; k <= n; ++k) {
    double x = std::log(static_cast<double>(k));
    double y = std::log(std::max(std::exp(logc[k]), 1.0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    cnt += 1;
  }
  double denom = cnt * sxx - sx * sx;
  double slope = denom > 0 ? (cnt * sxy - sx * sy) / denom : 0.0;
  if (slope > 0.5) {
    std::ostringstream msg;
    msg << "super-exponential growth of max(|a_k|, d_k)^(1/k): log-log slope " << slope << " over k in [" << lo
        << ", " << n << "]";
    rep.violations.push_back(msg.str());
  }
  return rep;
}

}  // namespace efcert
