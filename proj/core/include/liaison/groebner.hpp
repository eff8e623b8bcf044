#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

struct GroebnerOptions {
  /// Select pairs by sugar degree instead of the weighted degree of the lcm.
  bool sugar = false;
  /// Drop S-pairs whose selection degree exceeds this bound; the result is
  /// then a truncated basis, complete only up to that degree.
  std::optional<int> degree_bound;
};

/// Counters from the most recent buchberger() call on this thread.
struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};
const GroebnerStats& last_groebner_stats();

/// Reduced Groebner basis (monic, auto-reduced, sorted by increasing leading
/// monomial) with respect to the order of its ring.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool truncated = false);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool truncated() const noexcept { return truncated_; }
  bool is_unit() const;
  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool truncated_ = false;
};

/// Full multivariate division remainder of f by G (any generating list, not
/// necessarily monic); deterministic for a fixed order and list.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria. Returns the reduced basis.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

/// Is every S-polynomial of G reducible to zero? (Used by tests.)
bool is_groebner_basis(std::span<const Polynomial> G);

}  // namespace liaison
