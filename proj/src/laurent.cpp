#include "efcert/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "efcert/error.hpp"

namespace efcert {

LaurentPolynomial::LaurentPolynomial(long zmin, std::vector<Rational> coeffs)
    : zmin_(zmin), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPolynomial::LaurentPolynomial(const Polynomial& p) : zmin_(0), coeffs_(p.coefficients()) { normalize(); }

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    zmin_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) zmin_ = 0;
}

Rational LaurentPolynomial::coeff(long exponent) const {
  long i = exponent - zmin_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial LaurentPolynomial::to_polynomial() const {
  if (!is_polynomial()) fail(ErrorCode::DomainError, "Laurent polynomial has negative powers of z");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(zmin_), Rational(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  std::vector<Rational> d(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) d[i] = coeffs_[i] * (zmin_ + static_cast<long>(i));
  return LaurentPolynomial(zmin_ - 1, std::move(d));
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  if (is_zero()) return {};
  return LaurentPolynomial(zmin_ + k, coeffs_);
}

LaurentPolynomial LaurentPolynomial::scale_argument(const Rational& lambda) const {
  if (lambda == 0) fail(ErrorCode::DomainError, "Laurent polynomial scaled by zero");
  std::vector<Rational> v = coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    long e = zmin_ + static_cast<long>(i);
    Rational f = efcert::pow(lambda, static_cast<unsigned long>(e < 0 ? -e : e));
    v[i] = e < 0 ? Rational(v[i] / f) : Rational(v[i] * f);
  }
  return LaurentPolynomial(zmin_, std::move(v));
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.zmin_, b.zmin_), hi = std::max(a.zmax(), b.zmax());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[static_cast<std::size_t>(a.zmin_ - lo) + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[static_cast<std::size_t>(b.zmin_ - lo) + i] += b.coeffs_[i];
  return LaurentPolynomial(lo, std::move(v));
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return LaurentPolynomial(a.zmin_, std::move(v));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.zmin_ + b.zmin_, std::move(v));
}

LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return LaurentPolynomial(a.zmin_, std::move(v));
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    long e = zmin_ + static_cast<long>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << efcert::to_string(mag);
      continue;
    }
    if (mag != 1) out << efcert::to_string(mag) << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

Rational TruncatedSeries::coeff(long exponent) const {
  if (exponent < start) return 0;
  if (exponent >= end()) fail(ErrorCode::InvalidInput, "series coefficient beyond truncation");
  return coeffs[static_cast<std::size_t>(exponent - start)];
}

bool TruncatedSeries::all_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace efcert
