#include "efcert/singularities.hpp"

namespace efcert {

RootSet leading_coefficient_superset(const EFunction& f, std::stop_token stop) {
  DiffOperator m = psi_transform(f.annihilator(), f.initial_values(), stop);
  return make_rootset(leading_coefficient(m), Provenance::LeadingCoefficientSuperset);
}

RootSet singularity_superset(const EFunction& f, std::stop_token stop) {
  if (f.closed_form_singularities()) return *f.closed_form_singularities();
  return leading_coefficient_superset(f, stop);
}

}  // namespace efcert
