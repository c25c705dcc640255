#include "efcert/complex_box.hpp"

#include <algorithm>

#include "efcert/error.hpp"

namespace efcert {

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  Rational n = b.norm2();
  if (n == 0) fail(ErrorCode::DomainError, "complex division by zero");
  ComplexRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

Rational abs_upper(const ComplexRational& z) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_upper(z.norm2());
}

Rational abs_lower(const ComplexRational& z) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_lower(z.norm2());
}

ComplexBox::ComplexBox(ComplexRational center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_ < 0) fail(ErrorCode::InvalidInput, "negative box radius");
}

bool ComplexBox::contains(const ComplexRational& z) const {
  return (z - center_).norm2() <= radius_ * radius_;
}

bool ComplexBox::contains(const ComplexBox& other) const {
  if (other.radius_ > radius_) return false;
  Rational slack = radius_ - other.radius_;
  return (other.center_ - center_).norm2() <= slack * slack;
}

bool ComplexBox::intersects(const ComplexBox& other) const {
  Rational reach = radius_ + other.radius_;
  return (other.center_ - center_).norm2() <= reach * reach;
}

Rational ComplexBox::abs_upper() const { return efcert::abs_upper(center_) + radius_; }

Rational ComplexBox::abs_lower() const {
  Rational l = efcert::abs_lower(center_) - radius_;
  return l > 0 ? l : Rational(0);
}

ComplexBox ComplexBox::rounded(long bits) const {
  ComplexRational c{round_to_grid(center_.re, bits), round_to_grid(center_.im, bits)};
  Rational err = abs(c.re - center_.re) + abs(c.im - center_.im);
  Rational r = radius_ + err;
  if (r != 0) r = ceil_to_grid(r, bits + 2);
  return {c, r};
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
  return {a.center_ + b.center_, a.radius_ + b.radius_};
}

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
  return {a.center_ - b.center_, a.radius_ + b.radius_};
}

ComplexBox operator-(const ComplexBox& a) { return {-a.center_, a.radius_}; }

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  // |xy - ab| <= |a| rb + |b| ra + ra rb
  Rational r = 0;
  if (b.radius_ != 0) r += efcert::abs_upper(a.center_) * b.radius_;
  if (a.radius_ != 0) r += efcert::abs_upper(b.center_) * a.radius_ + a.radius_ * b.radius_;
  return {a.center_ * b.center_, r};
}

ComplexBox ComplexBox::inverse() const {
  if (radius_ == 0) {
    if (center_.is_zero()) fail(ErrorCode::DomainError, "inverse of zero");
    return exact(ComplexRational(1) / center_);
  }
  Rational lower = efcert::abs_lower(center_);
  if (lower <= radius_) fail(ErrorCode::DomainError, "inverse of a disk containing zero");
  // 1/z for |z - c| <= r lies in D(1/c, r / (|c| (|c| - r)))
  return {ComplexRational(1) / center_, radius_ / (lower * (lower - radius_))};
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) { return a * b.inverse(); }

ComplexBox ComplexBox::pow(unsigned long n) const {
  ComplexBox result = exact(ComplexRational(1));
  ComplexBox base = *this;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string ComplexBox::to_string(unsigned digits) const {
  std::string s = "[" + to_decimal(center_.re, digits);
  if (center_.im != 0) {
    std::string im = to_decimal(center_.im, digits);
    s += (im[0] == '-' ? " - " + im.substr(1) : " + " + im) + "i";
  }
  s += " +/- " + to_decimal_upper(radius_, digits) + "]";
  return s;
}

}  // namespace efcert
