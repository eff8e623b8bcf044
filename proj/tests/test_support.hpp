#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/ideal_ops.hpp"
#include "liaison/polynomial.hpp"

namespace liaison::test {

/// Random form of the given multidegree with every coefficient uniform in F_p.
inline Polynomial random_form(const RingPtr& ring, const Multidegree& md, std::mt19937_64& gen, double density = 1.0) {
  std::uniform_int_distribution<Coeff> coeff(0, ring->field().p() - 1);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_multidegree(*ring, md)) {
    if (keep(gen) <= density) terms.push_back({m, coeff(gen)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Random polynomial with up to `nterms` terms of total degree <= maxdeg.
inline Polynomial random_poly(const RingPtr& ring, int nterms, int maxdeg, std::mt19937_64& gen) {
  std::uniform_int_distribution<Coeff> coeff(1, ring->field().p() - 1);
  std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::vector<Term> terms;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(ring->nvars(), 0);
    int d = deg(gen);
    for (int k = 0; k < d; ++k) ++e[var(gen)];
    terms.push_back({ring->monomial(e), coeff(gen)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

using Exps = std::vector<int>;

inline void exponent_vectors(int nvars, int degree, Exps& cur, std::vector<Exps>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Exps> exponent_vectors(int nvars, int degree) {
  std::vector<Exps> out;
  Exps cur;
  if (nvars > 0 && degree >= 0) exponent_vectors(nvars, degree, cur, out);
  return out;
}

/// Degree-D piece of a homogeneous ideal in a standard graded ring, built
/// from the Macaulay matrix (all m * g_i) with plain Gaussian elimination.
/// Shares nothing with the Groebner code except the term storage.
class MacaulayOracle {
 public:
  MacaulayOracle(std::span<const Polynomial> gens, int degree) : ring_(gens.front().ring()), p_(ring_->field().p()) {
    const int n = ring_->nvars();
    for (const auto& e : exponent_vectors(n, degree)) {
      col_.emplace(e, static_cast<int>(col_.size()));
    }
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const int dg = g.total_degree();
      if (dg > degree) continue;
      for (const auto& m : exponent_vectors(n, degree - dg)) {
        std::vector<std::uint64_t> row(col_.size(), 0);
        for (const auto& t : g.terms()) {
          Exps e = ring_->exponents(t.mono);
          for (int v = 0; v < n; ++v) e[v] += m[v];
          row[col_.at(e)] = t.coeff;
        }
        insert(std::move(row));
      }
    }
  }

  bool contains(const Polynomial& f) const {
    std::vector<std::uint64_t> v(col_.size(), 0);
    for (const auto& t : f.terms()) {
      auto it = col_.find(ring_->exponents(t.mono));
      if (it == col_.end()) return false;  // wrong degree
      v[it->second] = t.coeff;
    }
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  void reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::uint64_t c = v[pivots_[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p_ - c) * rows_[i][j]) % p_;
    }
  }

  void insert(std::vector<std::uint64_t> v) {
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t c) { return c != 0; });
    if (it == v.end()) return;
    const std::size_t piv = static_cast<std::size_t>(it - v.begin());
    const std::uint64_t s = inv(v[piv]);
    for (auto& c : v) c = c * s % p_;
    // keep earlier rows reduced against the new pivot
    for (auto& r : rows_) {
      const std::uint64_t c = r[piv];
      if (!c) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = (r[j] + (p_ - c) * v[j]) % p_;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
  }

  RingPtr ring_;
  std::uint64_t p_;
  std::map<Exps, int> col_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// Monomial ideals as minimal lists of exponent vectors.
using MonomialList = std::vector<Exps>;

inline bool exps_divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline MonomialList minimalize(MonomialList gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialList out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && exps_divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline MonomialList mono_intersect(const MonomialList& I, const MonomialList& J) {
  MonomialList out;
  for (const auto& a : I) {
    for (const auto& b : J) {
      Exps l(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
      out.push_back(std::move(l));
    }
  }
  return minimalize(std::move(out));
}

/// I : (m) is generated by g / gcd(g, m).
inline MonomialList mono_quotient(const MonomialList& I, const Exps& m) {
  MonomialList out;
  for (const auto& g : I) {
    Exps q(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) q[k] = std::max(0, g[k] - m[k]);
    out.push_back(std::move(q));
  }
  return minimalize(std::move(out));
}

inline MonomialList mono_quotient(const MonomialList& I, const MonomialList& J) {
  MonomialList acc = mono_quotient(I, J.front());
  for (std::size_t i = 1; i < J.size(); ++i) acc = mono_intersect(acc, mono_quotient(I, J[i]));
  return acc;
}

inline MonomialList mono_saturate(const MonomialList& I, const MonomialList& J) {
  MonomialList cur = minimalize(I);
  for (;;) {
    MonomialList next = mono_quotient(cur, J);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

inline Ideal to_ideal(const RingPtr& ring, const MonomialList& gens) {
  std::vector<Polynomial> ps;
  for (const auto& e : gens) ps.push_back(Polynomial::monomial(ring, ring->monomial(e)));
  return Ideal(ring, std::move(ps));
}

inline MonomialList random_monomial_ideal(int nvars, int ngens, int maxdeg, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(1, maxdeg);
  MonomialList out;
  for (int i = 0; i < ngens; ++i) {
    Exps e(nvars, 0);
    const int d = deg(gen);
    for (int k = 0; k < d; ++k) ++e[var(gen)];
    out.push_back(std::move(e));
  }
  return minimalize(std::move(out));
}

struct OracleTally {
  int ideals = 0;
  long long queries = 0;
  long long mismatches = 0;
};

/// Membership via the reduced basis against the Macaulay oracle: random
/// ideals with at most 3 generators of degree <= 3 in at most 5 variables,
/// every monomial of each degree up to 6 plus random forms and members.
inline OracleTally groebner_membership_agreement(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> nv(2, 5), ng(1, 3), dg(1, 3);
  std::uniform_real_distribution<double> dens(0.3, 1.0);
  OracleTally tally;
  for (int i = 0; i < count; ++i) {
    auto R = Ring::projective(PrimeField(10007), nv(gen) - 1, "z");
    std::vector<Polynomial> gens;
    const int k = ng(gen);
    for (int j = 0; j < k; ++j) {
      auto f = random_form(R, {dg(gen)}, gen, dens(gen));
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
    if (gens.empty()) gens.push_back(Polynomial::variable(R, 0));
    const auto gb = buchberger(gens);
    ++tally.ideals;
    for (int D = 1; D <= 6; ++D) {
      MacaulayOracle oracle(gens, D);
      std::vector<Polynomial> queries;
      for (const auto& m : monomials_of_multidegree(*R, {D})) queries.push_back(Polynomial::monomial(R, m));
      for (int t = 0; t < 3; ++t) queries.push_back(random_form(R, {D}, gen, 0.5));
      for (const auto& g : gens) {
        const int rest = D - g.total_degree();
        if (rest >= 0) queries.push_back(g * random_form(R, {rest}, gen));
      }
      for (const auto& q : queries) {
        ++tally.queries;
        if (gb.contains(q) != oracle.contains(q)) ++tally.mismatches;
      }
    }
  }
  return tally;
}

/// quotient, intersect and saturate on random monomial ideals against the
/// combinatorial formulas; each instance counts three queries.
inline OracleTally monomial_ideal_agreement(int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> nv(2, 4), ng(1, 4);
  OracleTally tally;
  for (int i = 0; i < count; ++i) {
    const int n = nv(gen);
    auto R = Ring::projective(PrimeField(10007), n - 1, "z");
    const auto I = random_monomial_ideal(n, ng(gen), 4, gen);
    const auto J = random_monomial_ideal(n, ng(gen), 3, gen);
    const Ideal iI = to_ideal(R, I), iJ = to_ideal(R, J);
    ++tally.ideals;
    tally.queries += 3;
    if (!(quotient(iI, iJ) == to_ideal(R, mono_quotient(I, J)))) ++tally.mismatches;
    if (!(intersect(iI, iJ) == to_ideal(R, mono_intersect(I, J)))) ++tally.mismatches;
    if (!(saturate(iI, iJ) == to_ideal(R, mono_saturate(I, J)))) ++tally.mismatches;
  }
  return tally;
}

}  // namespace liaison::test
