#include "liaison/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liaison {

MonomialOrder MonomialOrder::grevlex(int nvars) {
  std::vector<int> seq(nvars);
  std::iota(seq.begin(), seq.end(), 0);
  return grevlex(std::move(seq));
}

MonomialOrder MonomialOrder::grevlex(std::vector<int> sequence) {
  MonomialOrder o;
  o.kind_ = Kind::kGrevlex;
  o.blocks_.push_back(std::move(sequence));
  return o;
}

MonomialOrder MonomialOrder::block_elimination(std::vector<std::vector<int>> blocks) {
  MonomialOrder o;
  o.kind_ = blocks.size() == 1 ? Kind::kGrevlex : Kind::kBlockElimination;
  o.blocks_ = std::move(blocks);
  return o;
}

Ring::Ring(PrimeField field, std::vector<VariableBlock> blocks, Ambient ambient, MonomialOrder order)
    : field_(field), blocks_(std::move(blocks)), ambient_(ambient), order_(std::move(order)) {
  if (blocks_.empty()) throw Error(ErrorCode::kInvalidArgument, "ring needs at least one block");
  rank_ = static_cast<int>(blocks_.front().degree.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& blk = blocks_[b];
    if (blk.count <= 0) throw Error(ErrorCode::kInvalidArgument, "block " + blk.name + " has no variables");
    if (static_cast<int>(blk.degree.size()) != rank_) {
      throw Error(ErrorCode::kInvalidArgument, "block " + blk.name + " has inconsistent grading rank");
    }
    for (std::size_t c = 0; c < b; ++c) {
      if (blocks_[c].name == blk.name) throw Error(ErrorCode::kInvalidArgument, "duplicate block name " + blk.name);
    }
    for (int i = 0; i < blk.count; ++i) {
      names_.push_back(blk.indexed || blk.count > 1 ? blk.name + std::to_string(i) : blk.name);
      var_block_.push_back(static_cast<int>(b));
      int w = 0;
      for (int d : blk.degree) w += d;
      weight_.push_back(std::max(1, w));
    }
  }
  nvars_ = static_cast<int>(names_.size());
  if (ambient_ == Ambient::kP1xP2) {
    if (blocks_.size() != 2 || blocks_[0].name != "x" || blocks_[0].count != 2 || blocks_[1].name != "y" ||
        blocks_[1].count != 3 || blocks_[0].degree != Multidegree{1, 0} || blocks_[1].degree != Multidegree{0, 1}) {
      throw Error(ErrorCode::kInvalidArgument, "P1xP2 ring must have blocks x:2:(1,0), y:3:(0,1)");
    }
  }
  if (ambient_ == Ambient::kPn && (blocks_.size() != 1 || rank_ != 1 || blocks_[0].degree[0] != 1)) {
    throw Error(ErrorCode::kInvalidArgument, "Pn ring must have a single block of degree-1 variables");
  }
  build_layout();
}

void Ring::build_layout() {
  const auto& oblocks = order_.blocks();
  std::vector<int> seen(nvars_, 0);
  int total = 0;
  for (const auto& b : oblocks) {
    for (int v : b) {
      if (v < 0 || v >= nvars_ || seen[v]++) throw Error(ErrorCode::kInvalidArgument, "order blocks must partition the variables");
      ++total;
    }
  }
  if (total != nvars_) throw Error(ErrorCode::kInvalidArgument, "order blocks must partition the variables");
  nslots_ = nvars_ + static_cast<int>(oblocks.size());
  if (nslots_ > kMaxSlots) throw Error(ErrorCode::kInvalidArgument, "too many variables for the monomial layout");
  slot_.assign(nvars_, 0);
  int s = 0;
  for (const auto& b : oblocks) {
    degree_slots_.push_back(s);
    reversed_[s] = false;
    std::vector<int> vs;
    ++s;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
      slot_[*it] = s;
      reversed_[s] = true;
      vs.push_back(s);
      ++s;
    }
    order_block_slots_.push_back(std::move(vs));
  }
}

RingPtr Ring::make(PrimeField field, std::vector<VariableBlock> blocks, Ambient ambient,
                   std::optional<MonomialOrder> order) {
  int n = 0;
  for (const auto& b : blocks) n += b.count;
  return std::make_shared<Ring>(field, std::move(blocks), ambient, order ? *order : MonomialOrder::grevlex(n));
}

RingPtr Ring::p1xp2(PrimeField field) {
  return make(field, {{"x", 2, {1, 0}}, {"y", 3, {0, 1}}}, Ambient::kP1xP2);
}

RingPtr Ring::projective(PrimeField field, int n, std::string name) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "projective dimension must be positive");
  return make(field, {{std::move(name), n + 1, {1}}}, Ambient::kPn);
}

RingPtr Ring::with_order(MonomialOrder order) const { return with_order(std::move(order), ambient_); }

RingPtr Ring::with_order(MonomialOrder order, Ambient ambient) const {
  return std::make_shared<Ring>(field_, blocks_, ambient, std::move(order));
}

RingPtr Ring::with_leading_block(VariableBlock block) const {
  block.degree.assign(rank_, 0);
  std::vector<VariableBlock> blocks;
  blocks.push_back(block);
  blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
  std::vector<std::vector<int>> oblocks;
  std::vector<int> lead(block.count);
  std::iota(lead.begin(), lead.end(), 0);
  oblocks.push_back(lead);
  for (auto b : order_.blocks()) {
    for (int& v : b) v += block.count;
    oblocks.push_back(std::move(b));
  }
  return std::make_shared<Ring>(field_, std::move(blocks), Ambient::kElim,
                                MonomialOrder::block_elimination(std::move(oblocks)));
}

std::optional<int> Ring::block_index(std::string_view name) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].name == name) return static_cast<int>(b);
  }
  return std::nullopt;
}

std::vector<int> Ring::block_variables(std::string_view name) const {
  std::vector<int> out;
  auto b = block_index(name);
  if (!b) throw Error(ErrorCode::kInvalidArgument, "no block named " + std::string(name));
  for (int v = 0; v < nvars_; ++v) {
    if (var_block_[v] == *b) out.push_back(v);
  }
  return out;
}

std::optional<int> Ring::var_index(std::string_view name) const {
  for (int v = 0; v < nvars_; ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

Monomial Ring::monomial(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars_) {
    throw Error(ErrorCode::kInvalidArgument, "exponent vector length mismatch");
  }
  Monomial m;
  int total = 0;
  for (int v = 0; v < nvars_; ++v) {
    if (exponents[v] < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    total += exponents[v];
    if (total > kMaxDegree) throw Error(ErrorCode::kOverflow, "monomial degree exceeds cap");
    m.s[slot_[v]] = static_cast<std::uint16_t>(exponents[v]);
  }
  for (std::size_t b = 0; b < degree_slots_.size(); ++b) {
    int d = 0;
    for (int s : order_block_slots_[b]) d += m.s[s];
    m.s[degree_slots_[b]] = static_cast<std::uint16_t>(d);
  }
  return m;
}

Monomial Ring::variable(int var, int power) const {
  std::vector<int> e(nvars_, 0);
  e.at(var) = power;
  return monomial(e);
}

std::vector<int> Ring::exponents(const Monomial& m) const {
  std::vector<int> e(nvars_);
  for (int v = 0; v < nvars_; ++v) e[v] = m.s[slot_[v]];
  return e;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const noexcept {
  Monomial r;
  for (std::size_t blk = 0; blk < degree_slots_.size(); ++blk) {
    int d = 0;
    for (int s : order_block_slots_[blk]) {
      r.s[s] = std::max(a.s[s], b.s[s]);
      d += r.s[s];
    }
    r.s[degree_slots_[blk]] = static_cast<std::uint16_t>(d);
  }
  return r;
}

Monomial Ring::gcd(const Monomial& a, const Monomial& b) const noexcept {
  Monomial r;
  for (std::size_t blk = 0; blk < degree_slots_.size(); ++blk) {
    int d = 0;
    for (int s : order_block_slots_[blk]) {
      r.s[s] = std::min(a.s[s], b.s[s]);
      d += r.s[s];
    }
    r.s[degree_slots_[blk]] = static_cast<std::uint16_t>(d);
  }
  return r;
}

bool Ring::coprime(const Monomial& a, const Monomial& b) const noexcept {
  for (int v = 0; v < nvars_; ++v) {
    if (a.s[slot_[v]] != 0 && b.s[slot_[v]] != 0) return false;
  }
  return true;
}

int Ring::weighted_degree(const Monomial& m) const noexcept {
  int d = 0;
  for (int v = 0; v < nvars_; ++v) d += weight_[v] * m.s[slot_[v]];
  return d;
}

Multidegree Ring::multidegree(const Monomial& m) const {
  Multidegree md(rank_, 0);
  for (int v = 0; v < nvars_; ++v) {
    const int e = m.s[slot_[v]];
    if (e == 0) continue;
    const auto& d = blocks_[var_block_[v]].degree;
    for (int r = 0; r < rank_; ++r) md[r] += e * d[r];
  }
  return md;
}

bool Ring::same_as(const Ring& o) const noexcept {
  if (this == &o) return true;
  if (!(field_ == o.field_) || ambient_ != o.ambient_ || !(order_ == o.order_) || blocks_.size() != o.blocks_.size()) {
    return false;
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& x = blocks_[b];
    const auto& y = o.blocks_[b];
    if (x.name != y.name || x.count != y.count || x.degree != y.degree || x.indexed != y.indexed) return false;
  }
  return true;
}

std::string Ring::block_spec() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << ' ';
    os << blocks_[b].name << ':' << blocks_[b].count << ":(";
    for (std::size_t r = 0; r < blocks_[b].degree.size(); ++r) {
      if (r) os << ',';
      os << blocks_[b].degree[r];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace liaison
