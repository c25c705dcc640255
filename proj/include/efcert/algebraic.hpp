#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efcert/complex_box.hpp"
#include "efcert/polynomial.hpp"
#include "efcert/roots.hpp"

namespace efcert {

/// An algebraic number: a squarefree primitive integer polynomial that
/// vanishes at it, together with a disk isolating it among that polynomial's
/// roots. The polynomial need not be minimal; equality is decided with gcds
/// and refined disks.
class AlgebraicNumber {
 public:
  /// Zero.
  AlgebraicNumber();
  static AlgebraicNumber from_rational(const Rational& r);
  /// Certifies that `box` contains exactly one root of `poly` (after the
  /// polynomial is reduced to its squarefree part). Throws InvalidInput if the
  /// box contains no root or cannot be made to isolate one.
  static AlgebraicNumber from_box(const Polynomial& poly, const ComplexBox& box,
                                  const PrecisionPolicy& policy = {});
  /// All roots of a nonzero polynomial, in isolation order.
  static std::vector<AlgebraicNumber> roots_of(const Polynomial& poly,
                                               const PrecisionPolicy& policy = {});
  /// Trusted constructor: `box` must already isolate a root of squarefree `poly`.
  static AlgebraicNumber unchecked(Polynomial poly, ComplexBox box);

  const Polynomial& poly() const { return poly_; }
  const ComplexBox& box() const { return box_; }
  std::optional<Rational> as_rational() const;
  bool is_rational() const { return poly_.degree() == 1; }

  /// Same number, disk radius <= 2^-bits.
  AlgebraicNumber refined(long bits, const PrecisionPolicy& policy = {}) const;

  std::string to_string(unsigned digits = 20) const;

 private:
  AlgebraicNumber(Polynomial poly, ComplexBox box) : poly_(std::move(poly)), box_(std::move(box)) {}
  Polynomial poly_;
  ComplexBox box_;
};

bool alg_equals(const AlgebraicNumber& a, const AlgebraicNumber& b, const PrecisionPolicy& policy = {});
bool alg_is_zero(const AlgebraicNumber& a, const PrecisionPolicy& policy = {});
/// True iff q(a) = 0.
bool alg_is_root_of(const AlgebraicNumber& a, const Polynomial& q, const PrecisionPolicy& policy = {});

AlgebraicNumber alg_mul(const AlgebraicNumber& a, const AlgebraicNumber& b,
                        const PrecisionPolicy& policy = {});
/// Throws DomainError when b = 0.
AlgebraicNumber alg_div(const AlgebraicNumber& a, const AlgebraicNumber& b,
                        const PrecisionPolicy& policy = {});
/// Throws DomainError for 0 raised to a negative power.
AlgebraicNumber alg_pow(const AlgebraicNumber& a, long n, const PrecisionPolicy& policy = {});
AlgebraicNumber alg_neg(const AlgebraicNumber& a);

/// Smallest m >= 1 with a^m = 1, if any.
std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& a, const PrecisionPolicy& policy = {});

/// Squarefree primitive polynomial whose roots are exactly the ratios r1/r2
/// with p(r1) = 0 and q(r2) = 0. Requires q(0) != 0.
Polynomial ratio_set_poly(const Polynomial& p, const Polynomial& q);
/// Same for the products r1 * r2.
Polynomial product_set_poly(const Polynomial& p, const Polynomial& q);
/// Same for the powers r^n, n >= 1.
Polynomial power_set_poly(const Polynomial& p, unsigned n);

}  // namespace efcert
