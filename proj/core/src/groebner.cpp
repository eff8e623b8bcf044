#include "liaison/groebner.hpp"

#include <algorithm>
#include <queue>

namespace liaison {

namespace {

thread_local GroebnerStats g_stats;

struct Reducer {
  Monomial lm;
  std::uint64_t mask;
  Coeff lc_inv;
  const std::vector<Term>* terms;
};

/// Working state for repeated reductions in one ring.
class ReductionEngine {
 public:
  explicit ReductionEngine(const Ring& ring) : R_(ring), F_(ring.field()) {}

  /// f := f[start..] - c*m*g where c*m*lt(g) cancels f[start].
  void step(std::vector<Term>& f, std::size_t start, Coeff c, const Monomial& m, const std::vector<Term>& g) {
    ++g_stats.reduction_steps;
    buf_.clear();
    buf_.reserve(f.size() - start + g.size());
    std::size_t i = start + 1, j = 1;
    const std::size_t fn = f.size(), gn = g.size();
    // hoist first product monomial
    Monomial gm;
    if (j < gn) gm = Ring::mul(g[j].mono, m);
    while (i < fn && j < gn) {
      int cmp = R_.compare(f[i].mono, gm);
      if (cmp > 0) {
        buf_.push_back(f[i++]);
      } else if (cmp < 0) {
        buf_.push_back({gm, F_.neg(F_.mul(c, g[j].coeff))});
        if (++j < gn) gm = Ring::mul(g[j].mono, m);
      } else {
        Coeff s = F_.sub_mul(f[i].coeff, c, g[j].coeff);
        if (s != 0) buf_.push_back({f[i].mono, s});
        ++i;
        if (++j < gn) gm = Ring::mul(g[j].mono, m);
      }
    }
    for (; i < fn; ++i) buf_.push_back(f[i]);
    for (; j < gn; ++j) buf_.push_back({Ring::mul(g[j].mono, m), F_.neg(F_.mul(c, g[j].coeff))});
    f.swap(buf_);
  }

  const Reducer* find(const std::vector<Reducer>& reducers, const Monomial& m) const {
    const std::uint64_t mm = Ring::divmask(m);
    for (const auto& r : reducers) {
      if ((r.mask & ~mm) == 0 && Ring::divides(r.lm, m)) return &r;
    }
    return nullptr;
  }

  /// Full reduction; returns remainder terms in canonical order.
  std::vector<Term> full(std::vector<Term> f, const std::vector<Reducer>& reducers) {
    std::vector<Term> out;
    std::size_t start = 0;
    while (start < f.size()) {
      const Reducer* r = find(reducers, f[start].mono);
      if (!r) {
        // irreducible terms move to the remainder and are never copied again
        out.push_back(f[start++]);
        continue;
      }
      Coeff c = F_.mul(f[start].coeff, r->lc_inv);
      step(f, start, c, Ring::div(f[start].mono, r->lm), *r->terms);
      start = 0;
    }
    return out;
  }

 private:
  const Ring& R_;
  const PrimeField& F_;
  std::vector<Term> buf_;
};

std::vector<Reducer> make_reducers(std::span<const Polynomial> G) {
  std::vector<Reducer> reducers;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    reducers.push_back({g.leading_monomial(), Ring::divmask(g.leading_monomial()),
                        g.ring()->field().inv(g.leading_coeff()), &g.terms()});
  }
  return reducers;
}

}  // namespace

const GroebnerStats& last_groebner_stats() { return g_stats; }

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool truncated)
    : ring_(std::move(ring)), elements_(std::move(elements)), truncated_(truncated) {}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  require_same_ring(f.ring(), ring_);
  return liaison::normal_form(f, elements_);
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  for (const auto& g : G) require_same_ring(f.ring(), g.ring());
  if (f.is_zero()) return f;
  ReductionEngine eng(*f.ring());
  auto reducers = make_reducers(G);
  return Polynomial::from_sorted_terms(f.ring(), eng.full(f.terms(), reducers));
}

namespace {

struct Elem {
  std::vector<Term> terms;
  Monomial lm;
  std::uint64_t mask = 0;
  int sugar = 0;
  bool redundant = false;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
  std::uint64_t serial;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opts) : ring_(std::move(ring)), R_(*ring_), opts_(opts), eng_(R_) {}

  GroebnerBasis run(std::span<const Polynomial> gens) {
    g_stats = {};
    std::vector<Polynomial> inputs;
    for (const auto& g : gens) {
      require_same_ring(g.ring(), ring_);
      if (!g.is_zero()) inputs.push_back(g.monic());
    }
    // process inputs smallest-first so the pair queue starts small
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
      return R_.greater(b.leading_monomial(), a.leading_monomial());
    });
    for (const auto& g : inputs) {
      if (g.is_constant()) return unit();
      // reduce against what we have to keep the basis small
      auto h = eng_.full(g.terms(), reducers());
      if (h.empty()) continue;
      add(std::move(h), poly_sugar(g.terms()));
      if (unit_found_) return unit();
    }
    while (!queue_.empty()) {
      Pair p = queue_.top();
      queue_.pop();
      ++g_stats.pairs_considered;
      if (opts_.degree_bound && p.deg > *opts_.degree_bound) {
        truncated_ = true;
        continue;
      }
      if (pair_dead_[p.serial]) continue;
      pair_dead_[p.serial] = 1;
      ++g_stats.pairs_reduced;
      auto s = spoly(p);
      int sugar = spoly_sugar(p);
      auto h = eng_.full(std::move(s), reducers());
      if (h.empty()) {
        ++g_stats.zero_reductions;
        continue;
      }
      add(std::move(h), sugar);
      if (unit_found_) return unit();
    }
    return finish();
  }

 private:
  GroebnerBasis unit() {
    return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, false);
  }

  int poly_sugar(const std::vector<Term>& t) const {
    int d = 0;
    for (const auto& x : t) d = std::max(d, R_.weighted_degree(x.mono));
    return d;
  }

  const std::vector<Reducer>& reducers() {
    if (reducers_dirty_) {
      reducers_.clear();
      for (const auto& e : elems_) {
        if (!e.redundant) reducers_.push_back({e.lm, e.mask, 1, &e.terms});
      }
      reducers_dirty_ = false;
    }
    return reducers_;
  }

  std::vector<Term> spoly(const Pair& p) {
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    std::vector<Term> f;
    f.reserve(a.terms.size());
    const Monomial ma = Ring::div(p.lcm, a.lm);
    for (const auto& t : a.terms) f.push_back({Ring::mul(t.mono, ma), t.coeff});
    // subtract (lcm/lm_b)*b; leading terms cancel (both monic)
    eng_.step(f, 0, 1, Ring::div(p.lcm, b.lm), b.terms);
    return f;
  }

  int spoly_sugar(const Pair& p) const {
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    const int l = R_.weighted_degree(p.lcm);
    return std::max(a.sugar + l - R_.weighted_degree(a.lm), b.sugar + l - R_.weighted_degree(b.lm));
  }

  void add(std::vector<Term> h, int sugar) {
    const PrimeField& F = R_.field();
    Coeff inv = F.inv(h.front().coeff);
    if (inv != 1) {
      for (auto& t : h) t.coeff = F.mul(t.coeff, inv);
    }
    if (h.front().mono == R_.one()) {
      unit_found_ = true;
      return;
    }
    Elem e;
    e.lm = h.front().mono;
    e.mask = Ring::divmask(e.lm);
    e.sugar = std::max(sugar, poly_sugar(h));
    e.terms = std::move(h);
    const int hidx = static_cast<int>(elems_.size());
    elems_.push_back(std::move(e));
    update(hidx);
    reducers_dirty_ = true;
  }

  int pair_degree(int i, int j, const Monomial& lcm) const {
    if (!opts_.sugar) return R_.weighted_degree(lcm);
    const Elem& a = elems_[i];
    const Elem& b = elems_[j];
    const int l = R_.weighted_degree(lcm);
    return std::max(a.sugar + l - R_.weighted_degree(a.lm), b.sugar + l - R_.weighted_degree(b.lm));
  }

  // Gebauer-Moeller update
  void update(int h) {
    const Monomial& lh = elems_[h].lm;
    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> C;
    for (int g = 0; g < h; ++g) {
      if (elems_[g].redundant) continue;
      C.push_back({g, R_.lcm(lh, elems_[g].lm), R_.coprime(lh, elems_[g].lm)});
    }
    // chain criterion among the new pairs
    std::vector<char> keep(C.size(), 0);
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (C[a].coprime) {
        keep[a] = 1;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < C.size() && !dominated; ++b) {
        if (b == a) continue;
        // b still pending (b > a) or already kept (b < a and keep[b])
        if (b < a && !keep[b]) continue;
        if (Ring::divides(C[b].lcm, C[a].lcm)) dominated = true;
      }
      keep[a] = dominated ? 0 : 1;
    }
    // prune old pairs: B criterion
    for (auto& p : live_) {
      if (pair_dead_[p.serial]) continue;
      if (Ring::divides(lh, p.lcm) && !(R_.lcm(elems_[p.i].lm, lh) == p.lcm) &&
          !(R_.lcm(elems_[p.j].lm, lh) == p.lcm)) {
        pair_dead_[p.serial] = 1;
      }
    }
    // product criterion drops coprime pairs
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (!keep[a] || C[a].coprime) continue;
      Pair p{C[a].g, h, C[a].lcm, pair_degree(C[a].g, h, C[a].lcm), next_serial_++};
      pair_dead_.push_back(0);
      queue_.push(p);
      live_.push_back(p);
    }
    // compact the live list occasionally
    if (live_.size() > 4 * queue_.size() + 64) {
      std::vector<Pair> keep_live;
      for (const auto& p : live_) {
        if (!pair_dead_[p.serial]) keep_live.push_back(p);
      }
      live_.swap(keep_live);
    }
    // redundancy of older elements
    for (int g = 0; g < h; ++g) {
      if (!elems_[g].redundant && Ring::divides(lh, elems_[g].lm)) elems_[g].redundant = true;
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> basis;
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i) {
      if (!elems_[i].redundant) idx.push_back(i);
    }
    // interreduce tails
    std::vector<Reducer> reds;
    for (int i : idx) reds.push_back({elems_[i].lm, elems_[i].mask, 1, &elems_[i].terms});
    std::vector<std::vector<Term>> reduced;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto& t = elems_[idx[k]].terms;
      std::vector<Reducer> others;
      others.reserve(reds.size() - 1);
      for (std::size_t q = 0; q < reds.size(); ++q) {
        if (q != k) others.push_back(reds[q]);
      }
      std::vector<Term> tail(t.begin() + 1, t.end());
      auto r = eng_.full(std::move(tail), others);
      std::vector<Term> g;
      g.reserve(r.size() + 1);
      g.push_back(t.front());
      g.insert(g.end(), r.begin(), r.end());
      reduced.push_back(std::move(g));
    }
    for (auto& g : reduced) basis.push_back(Polynomial::from_sorted_terms(ring_, std::move(g)));
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return R_.greater(b.leading_monomial(), a.leading_monomial());
    });
    return GroebnerBasis(ring_, std::move(basis), truncated_);
  }

  struct PairOrder {
    const Ring* R;
    bool operator()(const Pair& a, const Pair& b) const {
      // priority_queue pops the largest: invert
      if (a.deg != b.deg) return a.deg > b.deg;
      int c = R->compare(a.lcm, b.lcm);
      if (c != 0) return c > 0;
      return a.serial > b.serial;
    }
  };

  RingPtr ring_;
  const Ring& R_;
  GroebnerOptions opts_;
  ReductionEngine eng_;
  std::vector<Elem> elems_;
  std::vector<Reducer> reducers_;
  bool reducers_dirty_ = true;
  bool unit_found_ = false;
  bool truncated_ = false;
  std::priority_queue<Pair, std::vector<Pair>, PairOrder> queue_{PairOrder{&R_}};
  std::vector<Pair> live_;
  std::vector<char> pair_dead_;
  std::uint64_t next_serial_ = 0;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "buchberger needs a ring; pass at least one generator");
  return Buchberger(gens.front().ring(), options).run(gens);
}

bool is_groebner_basis(std::span<const Polynomial> G) {
  std::vector<Polynomial> nz;
  for (const auto& g : G) {
    if (!g.is_zero()) nz.push_back(g);
  }
  for (std::size_t i = 0; i < nz.size(); ++i) {
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      const Ring& R = *nz[i].ring();
      const PrimeField& F = R.field();
      Monomial l = R.lcm(nz[i].leading_monomial(), nz[j].leading_monomial());
      Polynomial s = nz[i].times(Ring::div(l, nz[i].leading_monomial()), F.inv(nz[i].leading_coeff())) -
                     nz[j].times(Ring::div(l, nz[j].leading_monomial()), F.inv(nz[j].leading_coeff()));
      if (!normal_form(s, nz).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace liaison
