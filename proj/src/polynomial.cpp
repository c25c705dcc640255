#include "efcert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "efcert/error.hpp"

namespace efcert {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::DomainError, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexRational Polynomial::operator()(const ComplexRational& x) const {
  ComplexRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + ComplexRational(*it);
  return acc;
}

ComplexBox Polynomial::operator()(const ComplexBox& x) const {
  ComplexBox acc = ComplexBox::exact(ComplexRational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + ComplexBox::exact(ComplexRational(*it));
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return Polynomial(std::move(v));
}

std::vector<Integer> Polynomial::primitive_integers() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

Polynomial Polynomial::primitive() const { return from_integers(primitive_integers()); }

Polynomial Polynomial::scale_argument(const Rational& lambda) const {
  std::vector<Rational> v = coeffs_;
  Rational p = 1;
  for (auto& c : v) {
    c *= p;
    p *= lambda;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_power(unsigned k) const {
  if (is_zero()) return {};
  if (k == 0) return constant((*this)(Rational(1)));
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * k + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return Polynomial(std::move(v));
}

std::size_t Polynomial::z_valuation() const {
  std::size_t v = 0;
  while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
  return coeffs_.empty() ? 0 : v;
}

Polynomial Polynomial::divide_by_z_power(std::size_t v) const {
  if (v > coeffs_.size()) return {};
  for (std::size_t i = 0; i < v; ++i)
    if (coeffs_[i] != 0) fail(ErrorCode::DomainError, "polynomial not divisible by the z power");
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(1), base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r = a.coefficients();
  const auto& bc = b.coefficients();
  std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db, Rational(0));
  Rational inv_lc = 1 / bc.back();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational f = r[k] * inv_lc;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::DomainError, "inexact polynomial division");
  return q;
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = p.monic(), b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "squarefree part of the zero polynomial");
  if (p.is_constant()) return Polynomial::constant(1);
  Polynomial g = poly_gcd(p, p.derivative());
  return exact_quotient(p, g).monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return poly_gcd(p, p.derivative()).degree() == 0 || p.is_constant();
}

namespace {

// Fraction-free (Bareiss) determinant with row pivoting.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Integer sylvester_resultant(const std::vector<Integer>& p, std::size_t p_degree,
                            const std::vector<Integer>& q, std::size_t q_degree) {
  const std::size_t n = p_degree + q_degree;
  if (n == 0) return 1;
  auto coeff = [](const std::vector<Integer>& v, std::size_t i) { return i < v.size() ? v[i] : Integer(0); };
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
  // Rows 0..q_degree-1: shifted copies of p (highest coefficient first).
  for (std::size_t r = 0; r < q_degree; ++r)
    for (std::size_t j = 0; j <= p_degree; ++j) m[r][r + j] = coeff(p, p_degree - j);
  for (std::size_t r = 0; r < p_degree; ++r)
    for (std::size_t j = 0; j <= q_degree; ++j) m[q_degree + r][r + j] = coeff(q, q_degree - j);
  return bareiss_determinant(std::move(m));
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::InvalidInput, "resultant of a zero polynomial");
  // Res(c p', d q') = c^deg q d^deg p Res(p', q') for integer p', q'.
  auto scale_of = [](const Polynomial& f, std::vector<Integer>& ints) -> Rational {
    ints = f.primitive_integers();
    return f.leading() / Rational(ints.back());
  };
  std::vector<Integer> pi, qi;
  Rational cp = scale_of(p, pi), cq = scale_of(q, qi);
  auto dp = static_cast<unsigned long>(p.degree()), dq = static_cast<unsigned long>(q.degree());
  Integer r = sylvester_resultant(pi, dp, qi, dq);
  return Rational(r) * efcert::pow(cp, dq) * efcert::pow(cq, dp);
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) fail(ErrorCode::InvalidInput, "interpolation size mismatch");
  // Newton divided differences.
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Polynomial result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Polynomial{-xs[k], 1} + Polynomial::constant(dd[k]);
  }
  return result;
}

}  // namespace efcert
