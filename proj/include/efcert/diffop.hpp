#pragma once

#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "efcert/laurent.hpp"

namespace efcert {

/// Linear differential operator sum_i p_i(z) d^i with Laurent coefficients.
/// Zero coefficients are never stored.
class DiffOperator {
 public:
  DiffOperator() = default;
  explicit DiffOperator(std::map<unsigned, LaurentPolynomial> terms);

  static DiffOperator identity() { return multiplication(LaurentPolynomial::constant(1)); }
  static DiffOperator multiplication(const LaurentPolynomial& p);
  /// d^k.
  static DiffOperator derivation(unsigned k = 1);
  static DiffOperator term(unsigned dorder, const LaurentPolynomial& p);

  bool is_zero() const { return terms_.empty(); }
  /// Highest derivative order; requires a nonzero operator.
  unsigned order() const;
  const std::map<unsigned, LaurentPolynomial>& terms() const { return terms_; }
  LaurentPolynomial coeff(unsigned dorder) const;
  /// Smallest power of z over all coefficients (0 for the zero operator).
  long zmin() const;

  /// Applies the operator to a Laurent polynomial exactly.
  LaurentPolynomial apply(const LaurentPolynomial& f) const;

  /// z^N * this with N chosen so all powers are >= 0 and the common z power is
  /// removed, then integer content 1 with positive leading coefficient.
  DiffOperator normalized() const;

  /// g(z) -> this applied to g, conjugated by z -> lambda z: the returned
  /// operator annihilates f(lambda z) whenever this annihilates f.
  DiffOperator rescaled(const Rational& lambda) const;

  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator*(const LaurentPolynomial& p, const DiffOperator& a);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

  /// Text form with explicit parentheses, e.g. "(z - 1)*∂ + (-1)".
  std::string to_string() const;

 private:
  std::map<unsigned, LaurentPolynomial> terms_;
};

/// l1 o l2.
DiffOperator op_compose(const DiffOperator& l1, const DiffOperator& l2);

/// Applies l to a truncated series. The result holds every coefficient that is
/// determined by the known input coefficients; throws InvalidInput when none is.
TruncatedSeries op_apply(const DiffOperator& l, const TruncatedSeries& series);

/// Parses the text form: sums and products of rationals, z, ∂ (or D),
/// parenthesised groups and integer powers. Products compose, so "∂*z" is z∂ + 1.
DiffOperator parse_operator(std::string_view text);

struct InhomogeneousResult {
  DiffOperator op;
  LaurentPolynomial remainder;
};

/// M and r with M(psi f) = r, obtained by rewriting every monomial z^a d^b of l
/// through psi(z h) = (z^2 d + z) psi(h) and psi(h') = (psi(h) - h(0)) / z.
InhomogeneousResult psi_transform_inhomogeneous(const DiffOperator& l, const std::vector<Rational>& initial_values,
                                                std::stop_token stop = {});

/// Homogenised and normalised annihilator of psi(f).
DiffOperator psi_transform(const DiffOperator& l, const std::vector<Rational>& initial_values,
                           std::stop_token stop = {});

/// Coefficient polynomial of the highest derivative after clearing negative
/// powers of z, with integer content 1 and positive leading coefficient.
Polynomial leading_coefficient(const DiffOperator& l);

/// sum_{j=0}^{J} q[j](n) c_{n+j} = 0 for every integer n, with c_m = 0 for m < 0.
struct Recurrence {
  std::vector<Polynomial> q;
  /// Coefficient of z^(n + offset) in l(sum c_m z^m) is the relation at n.
  long offset = 0;

  unsigned span() const { return static_cast<unsigned>(q.size()) - 1; }
  Rational residual(long n, const std::vector<Rational>& c) const;
};

Recurrence recurrence_from_ode(const DiffOperator& l);

/// Extends the given prefix c_0..c_{m-1} to `count` terms. Throws InvalidInput
/// when the prefix violates the recurrence, and Unsupported when a term is not
/// determined by the prefix (supply a longer prefix).
std::vector<Rational> solve_recurrence(const Recurrence& rec, const std::vector<Rational>& prefix,
                                       std::size_t count);

}  // namespace efcert
