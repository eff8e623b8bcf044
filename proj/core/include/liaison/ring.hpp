#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Monomials store exponents plus one running degree per order block, all
/// 16-bit. Everything in a slot is additive under multiplication.
inline constexpr int kMaxSlots = 16;
/// Hard cap on total degree; nothing in the pipelines exceeds ~40.
inline constexpr int kMaxDegree = 4000;

using Multidegree = std::vector<int>;

struct Monomial {
  std::array<std::uint16_t, kMaxSlots> s{};
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct VariableBlock {
  std::string name;
  int count = 0;
  /// Shared multidegree of every variable in the block.
  Multidegree degree;
  /// When false and count == 1 the variable is called `name` rather than `name0`.
  bool indexed = true;
};

enum class Ambient { kP1xP2, kPn, kElim };

class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kBlockElimination };

  /// grevlex with variables 0..n-1, the last one smallest in the reverse-lex tiebreak.
  static MonomialOrder grevlex(int nvars);
  /// grevlex over the listed variable sequence (a permutation of all variables).
  static MonomialOrder grevlex(std::vector<int> sequence);
  /// Blocks compared lexicographically, each block by grevlex.
  static MonomialOrder block_elimination(std::vector<std::vector<int>> blocks);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::kGrevlex;
  std::vector<std::vector<int>> blocks_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring over F_p with named variable blocks, a multigrading and
/// an active monomial order.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  Ring(PrimeField field, std::vector<VariableBlock> blocks, Ambient ambient, MonomialOrder order);

  static RingPtr p1xp2(PrimeField field);
  static RingPtr projective(PrimeField field, int n, std::string name = "z");
  static RingPtr make(PrimeField field, std::vector<VariableBlock> blocks, Ambient ambient,
                      std::optional<MonomialOrder> order = std::nullopt);

  RingPtr with_order(MonomialOrder order) const;
  /// Same variables, same ambient, new order; ambient may be overridden.
  RingPtr with_order(MonomialOrder order, Ambient ambient) const;
  /// New leading block of `count` degree-zero variables; order = [new block] then
  /// the current order's blocks.
  RingPtr with_leading_block(VariableBlock block) const;

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int grading_rank() const noexcept { return rank_; }
  Ambient ambient() const noexcept { return ambient_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<VariableBlock>& blocks() const noexcept { return blocks_; }
  std::optional<int> block_index(std::string_view name) const;
  /// Variable indices belonging to the named block.
  std::vector<int> block_variables(std::string_view name) const;
  int block_of(int var) const { return var_block_[var]; }
  const Multidegree& var_degree(int var) const { return blocks_[var_block_[var]].degree; }
  const std::string& var_name(int var) const { return names_[var]; }
  std::optional<int> var_index(std::string_view name) const;
  /// Projective dimension for Pn rings.
  int projective_dimension() const noexcept { return nvars_ - 1; }

  Monomial one() const noexcept { return Monomial{}; }
  Monomial monomial(std::span<const int> exponents) const;
  Monomial variable(int var, int power = 1) const;
  int exponent(const Monomial& m, int var) const noexcept { return m.s[slot_[var]]; }
  std::vector<int> exponents(const Monomial& m) const;

  /// -1, 0, 1 in the active order.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    for (int i = 0; i < nslots_; ++i) {
      if (a.s[i] != b.s[i]) return ((a.s[i] > b.s[i]) != reversed_[i]) ? 1 : -1;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  static Monomial mul(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxSlots; ++i) r.s[i] = static_cast<std::uint16_t>(a.s[i] + b.s[i]);
    return r;
  }
  /// a / b, assuming b | a.
  static Monomial div(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int i = 0; i < kMaxSlots; ++i) r.s[i] = static_cast<std::uint16_t>(a.s[i] - b.s[i]);
    return r;
  }
  /// Does a divide b?
  static bool divides(const Monomial& a, const Monomial& b) noexcept {
    for (int i = 0; i < kMaxSlots; ++i) {
      if (a.s[i] > b.s[i]) return false;
    }
    return true;
  }
  static std::uint64_t divmask(const Monomial& m) noexcept {
    std::uint64_t mask = 0;
    for (int i = 0; i < kMaxSlots; ++i) {
      const unsigned e = m.s[i] < 4 ? m.s[i] : 4;
      mask |= ((std::uint64_t{1} << e) - 1) << (4 * i);
    }
    return mask;
  }
  Monomial lcm(const Monomial& a, const Monomial& b) const noexcept;
  Monomial gcd(const Monomial& a, const Monomial& b) const noexcept;
  bool coprime(const Monomial& a, const Monomial& b) const noexcept;

  int total_degree(const Monomial& m) const noexcept {
    int d = 0;
    for (int s : degree_slots_) d += m.s[s];
    return d;
  }
  /// Positive weight used by the pair-selection strategies.
  int weighted_degree(const Monomial& m) const noexcept;
  Multidegree multidegree(const Monomial& m) const;

  bool same_as(const Ring& other) const noexcept;
  /// Human-readable description, e.g. `x:2:(1,0) y:3:(0,1)`.
  std::string block_spec() const;

 private:
  void build_layout();

  PrimeField field_;
  std::vector<VariableBlock> blocks_;
  Ambient ambient_;
  MonomialOrder order_;
  int nvars_ = 0;
  int rank_ = 0;
  std::vector<std::string> names_;
  std::vector<int> var_block_;
  std::vector<int> weight_;
  // slot layout
  int nslots_ = 0;
  std::array<bool, kMaxSlots> reversed_{};
  std::vector<int> slot_;          // var -> slot
  std::vector<int> degree_slots_;  // one per order block
  std::vector<std::vector<int>> order_block_slots_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace liaison
