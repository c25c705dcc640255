#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "efcert/complex_box.hpp"
#include "efcert/rational.hpp"

namespace efcert {

/// Dense univariate polynomial over the rationals; coefficient i multiplies z^i.
/// The zero polynomial has no stored coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial z() { return monomial(1, 1); }
  static Polynomial from_integers(const std::vector<Integer>& coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  ComplexRational operator()(const ComplexRational& x) const;
  ComplexBox operator()(const ComplexBox& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Content-1 integer coefficients with positive leading coefficient.
  std::vector<Integer> primitive_integers() const;
  /// The polynomial with those primitive integer coefficients.
  Polynomial primitive() const;
  /// p(lambda z).
  Polynomial scale_argument(const Rational& lambda) const;
  /// p(z^k).
  Polynomial substitute_power(unsigned k) const;
  /// Largest v with z^v | p (0 for the zero polynomial).
  std::size_t z_valuation() const;
  Polynomial divide_by_z_power(std::size_t v) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned n) const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DomainError for b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws DomainError when b does not divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);
/// Monic product of the distinct irreducible factors of p; p != 0.
Polynomial squarefree_part(const Polynomial& p);
bool is_squarefree(const Polynomial& p);

/// Resultant of two nonzero polynomials (Sylvester determinant).
Rational resultant(const Polynomial& p, const Polynomial& q);

/// Sylvester resultant of integer polynomials with formal degrees (leading
/// coefficients may vanish); used for specialisations of bivariate resultants.
Integer sylvester_resultant(const std::vector<Integer>& p, std::size_t p_degree,
                            const std::vector<Integer>& q, std::size_t q_degree);

/// Interpolating polynomial through (x_i, y_i), distinct x_i.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace efcert
