#ifndef CASIMIR_ROOTS_HPP
#define CASIMIR_ROOTS_HPP

#include <vector>

#include "casimir/rational.hpp"

namespace casimir::exact {

/// All rational roots, with multiplicity, of the univariate polynomial
/// sum_k coeffs[k] t^k. Candidates come from the rational root theorem after
/// clearing denominators; multiplicities by repeated deflation.
/// Roots are returned in ascending order. Throws std::invalid_argument for
/// the zero polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace casimir::exact

#endif
