#pragma once

#include <stop_token>

#include "efcert/efunction.hpp"
#include "efcert/rootset.hpp"

namespace efcert {

/// Roots of the leading coefficient of psi_transform(annihilator, initial
/// values): a superset of the finite singularities of psi(f).
RootSet leading_coefficient_superset(const EFunction& f, std::stop_token stop = {});

/// The attached singularity set when there is one, otherwise
/// leading_coefficient_superset(f).
RootSet singularity_superset(const EFunction& f, std::stop_token stop = {});

}  // namespace efcert
