#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Counter-based stream: the k-th draw is a SplitMix64 finalizer applied to
/// (key, k). Only integer arithmetic is involved, so streams are identical on
/// every platform. Every draw can be recorded for replay.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x6c69616973306e21ull)) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  /// Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound);
  Coeff element(const PrimeField& F) { return static_cast<Coeff>(below(F.p())); }
  Coeff nonzero(const PrimeField& F) { return static_cast<Coeff>(1 + below(F.p() - 1)); }

  /// Independent stream derived from this one's key and a label; does not
  /// advance this stream.
  Rng split(std::string_view label) const;
  Rng split(std::uint64_t index) const;

  std::uint64_t counter() const noexcept { return counter_; }

  /// Draws made so far, when recording is on.
  void record(bool on) { recording_ = on; }
  const std::vector<std::uint64_t>& log() const noexcept { return log_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  struct Key {};
  Rng(Key, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool recording_ = false;
  std::vector<std::uint64_t> log_;
};

}  // namespace liaison
