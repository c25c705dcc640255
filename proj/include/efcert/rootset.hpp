#pragma once

#include <string>
#include <vector>

#include "efcert/algebraic.hpp"

namespace efcert {

enum class Provenance { ClosedForm, LeadingCoefficientSuperset };

/// Finite set of algebraic numbers: the roots of `poly` (squarefree,
/// primitive, not divisible by z) plus zero when `includes_zero` is set.
struct RootSet {
  Polynomial poly = Polynomial::constant(1);
  bool includes_zero = false;
  Provenance provenance = Provenance::ClosedForm;

  bool empty() const { return poly.degree() <= 0 && !includes_zero; }
  /// Nonzero elements, in isolation order.
  std::vector<AlgebraicNumber> elements(const PrecisionPolicy& policy = {}) const;
  std::string to_string(unsigned digits = 10) const;
  friend bool operator==(const RootSet& a, const RootSet& b) {
    return a.poly == b.poly && a.includes_zero == b.includes_zero && a.provenance == b.provenance;
  }
};

/// Roots of a nonzero polynomial, with the z-power moved into the zero flag.
RootSet make_rootset(const Polynomial& p, Provenance provenance);

const char* provenance_name(Provenance p);

/// {rho / k : rho^k = 1}, the roots of (k z)^k - 1.
RootSet hypergeometric_singularities(unsigned k);

/// {rho / alpha : rho in s}. For irrational alpha the set is built from the
/// defining polynomial of alpha and therefore includes conjugate quotients;
/// it is then labelled a superset.
RootSet rootset_scale(const RootSet& s, const AlgebraicNumber& alpha, const PrecisionPolicy& policy = {});

/// gcd(poly1, poly2) constant and not both sets containing zero.
bool rootsets_disjoint(const RootSet& a, const RootSet& b);

/// alpha_i / alpha_j differs from every rho1 / rho2 with rho1 in s_i \ {0},
/// rho2 in s_j \ {0}.
bool ratio_condition(const RootSet& s_i, const RootSet& s_j, const AlgebraicNumber& alpha_i,
                     const AlgebraicNumber& alpha_j, const PrecisionPolicy& policy = {});

}  // namespace efcert
