#include "liaison/random.hpp"

namespace liaison {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  r %= bound;
  if (recording_) log_.push_back(r);
  return r;
}

Rng Rng::split(std::string_view label) const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return Rng(Key{}, mix(key_ ^ mix(h)));
}

Rng Rng::split(std::uint64_t index) const { return Rng(Key{}, mix(key_ ^ mix(index + 0x5851f42d4c957f2dull))); }

}  // namespace liaison
