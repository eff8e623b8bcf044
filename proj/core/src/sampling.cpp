#include "liaison/sampling.hpp"

namespace liaison {

Polynomial random_form(const RingPtr& ring, const Multidegree& md, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_multidegree(*ring, md)) terms.push_back({m, rng.element(ring->field())});
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_combination(std::span<const Polynomial> basis, Rng& rng) {
  if (basis.empty()) throw Error(ErrorCode::kInvalidArgument, "combination of an empty family");
  Polynomial acc(basis.front().ring());
  for (const auto& b : basis) acc += b.scaled(rng.element(b.ring()->field()));
  return acc;
}

}  // namespace liaison
