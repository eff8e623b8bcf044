#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/hilbert.hpp"

namespace liaison {

/// Homogeneous ideal with a lazily computed, write-once Groebner basis in the
/// ring's own order. Copies share the cache.
class Ideal {
 public:
  /// Zero generators are dropped; the rest must be homogeneous.
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {}, bool saturated = false);
  /// Adopts a reduced basis as both generators and cache.
  static Ideal from_groebner(GroebnerBasis gb, bool saturated = false);
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// Set once saturation with respect to the irrelevant ideal has been applied.
  bool saturated() const noexcept { return saturated_; }
  Ideal marked_saturated() const;

  const GroebnerBasis& groebner() const;
  bool has_groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Hilbert numerator of the leading-term ideal (standard multigradings only).
  HilbertNumerator hilbert() const;

  /// Equal as ideals (reduced bases coincide).
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool saturated_ = false;
  std::shared_ptr<Cache> cache_;
};

/// Optional persistent store for Groebner bases, keyed by ring and generators.
/// Installed once at startup (the CLI wires it to LIAISONLAB_CACHE); when unset
/// nothing touches the filesystem.
void set_groebner_cache_directory(std::optional<std::string> dir);

/// Ideal file: `ring p=<prime> blocks=<spec>` then one generator per line.
/// Blank lines and lines starting with '#' are skipped on input.
void write_ideal(std::ostream& out, const Ideal& I);
Ideal read_ideal(std::istream& in);
/// Parses a block spec such as `x:2:(1,0) y:3:(0,1)`.
RingPtr parse_ring(std::uint64_t p, const std::string& blocks);

}  // namespace liaison
