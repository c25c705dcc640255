#include "efcert/rootset.hpp"

#include <sstream>

#include "efcert/error.hpp"

namespace efcert {

std::vector<AlgebraicNumber> RootSet::elements(const PrecisionPolicy& policy) const {
  if (poly.degree() <= 0) return {};
  return AlgebraicNumber::roots_of(poly, policy);
}

std::string RootSet::to_string(unsigned digits) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  if (includes_zero) {
    out << "0";
    first = false;
  }
  for (const auto& a : elements()) {
    out << (first ? "" : ", ") << a.to_string(digits);
    first = false;
  }
  out << "}";
  return out.str();
}

RootSet make_rootset(const Polynomial& p, Provenance provenance) {
  if (p.is_zero()) fail(ErrorCode::InvalidInput, "root set of the zero polynomial");
  RootSet s;
  s.provenance = provenance;
  const std::size_t v = p.z_valuation();
  s.includes_zero = v > 0;
  Polynomial rest = p.divide_by_z_power(v);
  s.poly = rest.is_constant() ? Polynomial::constant(1) : squarefree_part(rest).primitive();
  return s;
}

const char* provenance_name(Provenance p) {
  return p == Provenance::ClosedForm ? "closed_form" : "superset";
}

RootSet hypergeometric_singularities(unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidInput, "hypergeometric locus needs k >= 1");
  Rational kk = efcert::pow(Rational(k), k);
  return make_rootset(Polynomial::monomial(kk, k) - Polynomial::constant(1), Provenance::ClosedForm);
}

RootSet rootset_scale(const RootSet& s, const AlgebraicNumber& alpha, const PrecisionPolicy& policy) {
  if (alg_is_zero(alpha, policy)) fail(ErrorCode::DomainError, "root set scaled by zero");
  RootSet out = s;
  if (s.poly.degree() <= 0) return out;
  if (auto r = alpha.as_rational()) {
    // rho / alpha is a root of poly(alpha z)
    out.poly = s.poly.scale_argument(*r).primitive();
    return out;
  }
  out.poly = ratio_set_poly(s.poly, alpha.poly());
  out.provenance = Provenance::LeadingCoefficientSuperset;
  return out;
}

bool rootsets_disjoint(const RootSet& a, const RootSet& b) {
  if (a.includes_zero && b.includes_zero) return false;
  return poly_gcd(a.poly, b.poly).degree() <= 0;
}

bool ratio_condition(const RootSet& s_i, const RootSet& s_j, const AlgebraicNumber& alpha_i,
                     const AlgebraicNumber& alpha_j, const PrecisionPolicy& policy) {
  if (alg_is_zero(alpha_i, policy) || alg_is_zero(alpha_j, policy))
    fail(ErrorCode::DomainError, "ratio condition needs nonzero points");
  if (s_i.poly.degree() <= 0 || s_j.poly.degree() <= 0) return true;
  Polynomial ratios = ratio_set_poly(s_i.poly, s_j.poly);
  return !alg_is_root_of(alg_div(alpha_i, alpha_j, policy), ratios, policy);
}

}  // namespace efcert
