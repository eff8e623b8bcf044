#pragma once

#include <span>

#include "liaison/polynomial.hpp"
#include "liaison/random.hpp"

namespace liaison {

/// Every monomial of multidegree md with an independent uniform coefficient.
Polynomial random_form(const RingPtr& ring, const Multidegree& md, Rng& rng);
/// Uniform linear combination of the given polynomials (all in one ring).
Polynomial random_combination(std::span<const Polynomial> basis, Rng& rng);

}  // namespace liaison
