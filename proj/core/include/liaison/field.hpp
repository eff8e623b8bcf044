#pragma once

#include <cstdint>

#include "liaison/errors.hpp"

namespace liaison {

/// Field elements are least non-negative residues.
using Coeff = std::uint32_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The prime field F_p, 2 < p < 2^32. Products are formed in 64 bits and
/// reduced immediately.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  Coeff p() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Coeff>(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : static_cast<Coeff>(std::uint64_t{a} + p_ - b);
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((std::uint64_t{a} * b) % p_);
  }
  /// a - b*c
  Coeff sub_mul(Coeff a, Coeff b, Coeff c) const noexcept { return sub(a, mul(b, c)); }

  /// Throws kDivisionByZero on a == 0.
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;

  Coeff from_int(std::int64_t v) const noexcept;
  /// Representative in (-p/2, p/2].
  std::int64_t symmetric(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  Coeff p_;
};

}  // namespace liaison
