#pragma once

#include <string>

#include "efcert/rational.hpp"

namespace efcert {

/// Exact complex rational.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// |z| <= abs_upper(z); cheap bound |re| + |im| refined by a square root.
Rational abs_upper(const ComplexRational& z);
/// |z| >= abs_lower(z).
Rational abs_lower(const ComplexRational& z);

/// Closed disk {z : |z - center| <= radius} in the complex plane. Used as an
/// isolating region for algebraic numbers and as the enclosure type of ball
/// arithmetic. Every operation is conservative: the true result of the
/// operation applied to any points of the operands lies in the output.
class ComplexBox {
 public:
  ComplexBox() = default;
  ComplexBox(ComplexRational center, Rational radius);
  static ComplexBox exact(const ComplexRational& z) { return ComplexBox(z, 0); }

  const ComplexRational& center() const { return center_; }
  const Rational& re() const { return center_.re; }
  const Rational& im() const { return center_.im; }
  const Rational& radius() const { return radius_; }

  bool contains(const ComplexRational& z) const;
  bool contains(const ComplexBox& other) const;
  bool intersects(const ComplexBox& other) const;
  bool contains_zero() const { return contains(ComplexRational(0)); }

  Rational abs_upper() const;
  Rational abs_lower() const;  // 0 when the disk contains 0

  /// Rounds the center to the 2^-bits grid and the radius up, keeping containment.
  ComplexBox rounded(long bits) const;
  ComplexBox widened(const Rational& extra) const { return {center_, radius_ + extra}; }

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
  friend ComplexBox operator-(const ComplexBox& a);
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
  /// Requires 0 outside b; throws DomainError otherwise.
  friend ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);

  ComplexBox inverse() const;
  ComplexBox pow(unsigned long n) const;

  std::string to_string(unsigned digits = 20) const;

 private:
  ComplexRational center_;
  Rational radius_ = 0;
};

}  // namespace efcert
