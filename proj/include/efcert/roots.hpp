#pragma once

#include <vector>

#include "efcert/complex_box.hpp"
#include "efcert/polynomial.hpp"

namespace efcert {

/// Working-precision schedule shared by every certified numeric decision:
/// start at `start_bits`, double on indeterminate outcomes, and raise
/// PrecisionExceeded past `max_bits`.
struct PrecisionPolicy {
  long start_bits = 64;
  long max_bits = 65536;
};

/// Isolating disks for the complex roots of a squarefree nonzero polynomial,
/// one per root, pairwise disjoint, each of radius <= 2^-precision_bits.
/// Ordered by center (real part, then imaginary part).
std::vector<ComplexBox> isolate_roots(const Polynomial& p, long precision_bits,
                                      const PrecisionPolicy& policy = {});

/// A disk of radius <= 2^-precision_bits, nested in `box`, around the unique
/// root of `p` that `box` isolates.
ComplexBox refine_root(const Polynomial& p, const ComplexBox& box, long precision_bits,
                       const PrecisionPolicy& policy = {});

}  // namespace efcert
