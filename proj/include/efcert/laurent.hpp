#pragma once

#include <string>
#include <vector>

#include "efcert/polynomial.hpp"

namespace efcert {

/// Finite sum of c_e z^e with e in Z. Stored as coefficients of
/// z^zmin, z^(zmin+1), ...; both ends are trimmed, and the zero element has
/// zmin 0 and no coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long zmin, std::vector<Rational> coeffs);
  LaurentPolynomial(const Polynomial& p);  // NOLINT: implicit by design
  static LaurentPolynomial constant(const Rational& c) { return LaurentPolynomial(0, {c}); }
  static LaurentPolynomial monomial(const Rational& c, long exponent) { return LaurentPolynomial(exponent, {c}); }

  bool is_zero() const { return coeffs_.empty(); }
  long zmin() const { return zmin_; }
  /// Highest exponent; zmin - 1 for zero.
  long zmax() const { return zmin_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(long exponent) const;

  bool is_polynomial() const { return is_zero() || zmin_ >= 0; }
  /// Requires is_polynomial().
  Polynomial to_polynomial() const;

  LaurentPolynomial derivative() const;
  /// z^k * this.
  LaurentPolynomial shifted(long k) const;
  /// this(lambda z).
  LaurentPolynomial scale_argument(const Rational& lambda) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.zmin_ == b.zmin_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  long zmin_ = 0;
  std::vector<Rational> coeffs_;
};

/// Coefficients of z^start, z^(start+1), ... that are known exactly; every
/// later coefficient is unknown.
struct TruncatedSeries {
  long start = 0;
  std::vector<Rational> coeffs;

  Rational coeff(long exponent) const;
  /// One past the last known exponent.
  long end() const { return start + static_cast<long>(coeffs.size()); }
  bool all_zero() const;
};

}  // namespace efcert
