#include "liaison/geometry.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "liaison/sampling.hpp"

namespace liaison {

namespace {

int ambient_dimension(const Ring& R) {
  switch (R.ambient()) {
    case Ambient::kP1xP2:
      return 3;
    case Ambient::kPn:
      return R.projective_dimension();
    default:
      throw Error(ErrorCode::kInvalidArgument, "geometric checks need P1xP2 or Pn");
  }
}

// Determinant by expansion along rows, memoized over column subsets.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
  const int c = static_cast<int>(M.size());
  const RingPtr& R = M[0][0].ring();
  std::vector<Polynomial> minors(std::size_t{1} << c, Polynomial(R));
  minors[0] = Polynomial::constant(R, 1);
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    const int k = std::popcount(mask);
    Polynomial acc(R);
    int pos = 0;
    for (int j = 0; j < c; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& sub = minors[mask & ~(1u << j)];
      if (!sub.is_zero() && !M[k - 1][j].is_zero()) {
        Polynomial term = M[k - 1][j] * sub;
        if ((k - 1 + pos) % 2) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      ++pos;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

std::vector<Multidegree> generator_degrees(const Ideal& I) {
  std::vector<Multidegree> ds;
  for (const auto& g : I.generators()) {
    auto d = *g.multidegree();
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end(), [](const Multidegree& a, const Multidegree& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa != sb ? sa < sb : a < b;
  });
  return ds;
}

// Nondecreasing index sequences of length c over [0, n).
void multisets(int n, int c, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  for (int i = cur.empty() ? 0 : cur.back(); i < n; ++i) {
    cur.push_back(i);
    multisets(n, c, cur, out);
    cur.pop_back();
  }
}

Polynomial aggregated_minor(const RingPtr& R, const std::vector<Polynomial>& rows, Rng& rng) {
  const int c = static_cast<int>(rows.size());
  const int n = R->nvars();
  const bool single_block = R->blocks().size() == 1;
  // B[j][k]: a constant on single-block rings, a linear form in var j's block otherwise,
  // so that every entry of J(h) * B is homogeneous.
  std::vector<std::vector<Polynomial>> B(n, std::vector<Polynomial>(c, Polynomial(R)));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < c; ++k) {
      B[j][k] = single_block ? Polynomial::constant(R, rng.element(R->field()))
                             : random_form(R, R->var_degree(j), rng);
    }
  }
  std::vector<std::vector<Polynomial>> M(c, std::vector<Polynomial>(c, Polynomial(R)));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial d = derivative(rows[i], j);
      if (d.is_zero()) continue;
      for (int k = 0; k < c; ++k) M[i][k] += d * B[j][k];
    }
  }
  return determinant(M);
}

std::vector<Polynomial> all_minors(const Ideal& I, int c) {
  const RingPtr& R = I.ring();
  const auto& gens = I.generators();
  const int m = static_cast<int>(gens.size());
  const int n = R->nvars();
  std::vector<std::vector<Polynomial>> J(m, std::vector<Polynomial>(n, Polynomial(R)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) J[i][j] = derivative(gens[i], j);
  }
  std::vector<std::vector<int>> rows, cols;
  auto subsets = [](int total, int size, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (size > total) return;
    for (;;) {
      out.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == total - size + i) --i;
      if (i < 0) return;
      ++idx[i];
      for (int k = i + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
    }
  };
  subsets(m, c, rows);
  subsets(n, c, cols);
  std::vector<Polynomial> out;
  for (const auto& r : rows) {
    for (const auto& cl : cols) {
      std::vector<std::vector<Polynomial>> M(c, std::vector<Polynomial>(c, Polynomial(R)));
      for (int a = 0; a < c; ++a) {
        for (int b = 0; b < c; ++b) M[a][b] = J[r[a]][cl[b]];
      }
      Polynomial d = determinant(M);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

// Returns I + minors with either an empty locus or a stabilized one.
Ideal jacobian_scheme(const Ideal& I, Rng& rng, const SmoothnessOptions& opts) {
  const RingPtr& R = I.ring();
  const int dim = scheme_dimension(I);
  if (dim < 0) return Ideal::unit(R);
  const int c = ambient_dimension(*R) - dim;
  if (c <= 0) return I;
  if (opts.full_minors) return sum(I, all_minors(I, c));

  const auto degrees = generator_degrees(I);
  const int nd = std::min<int>(static_cast<int>(degrees.size()), 5);
  std::vector<std::vector<Polynomial>> pieces(nd);
  for (int i = 0; i < nd; ++i) pieces[i] = graded_piece_basis(I, degrees[i]);
  std::vector<std::vector<int>> combos;
  std::vector<int> cur;
  multisets(nd, c, cur, combos);

  Ideal S = I;
  HilbertPolynomial hp = S.hilbert().polynomial();
  int added = 0;
  bool changed_in_pass = true;
  for (int pass = 0; changed_in_pass && added < opts.max_aggregates; ++pass) {
    changed_in_pass = false;
    for (const auto& combo : combos) {
      if (added >= opts.max_aggregates) break;
      std::vector<Polynomial> rows;
      for (int idx : combo) rows.push_back(random_combination(pieces[idx], rng));
      Polynomial agg = aggregated_minor(R, rows, rng);
      ++added;
      if (agg.is_zero()) continue;
      std::vector<Polynomial> gens = S.groebner().elements();
      gens.push_back(std::move(agg));
      S = Ideal(R, std::move(gens));
      HilbertPolynomial next = S.hilbert().polynomial();
      if (next.is_zero()) return S;
      if (!(next == hp)) {
        changed_in_pass = true;
        hp = next;
      }
    }
    if (pass == 0) changed_in_pass = true;  // always take a second pass
  }
  return S;
}

Ideal plane_ring_ideal(const Polynomial& F, std::vector<Polynomial> extra) {
  extra.insert(extra.begin(), F);
  return Ideal(F.ring(), std::move(extra));
}

NodalLocusReport zero_dim_report(const Ideal& S, long long expected, Rng& rng) {
  NodalLocusReport rep;
  rep.expected = expected;
  const int dim = scheme_dimension(S);
  rep.zero_dimensional = dim <= 0;
  if (!rep.zero_dimensional) return rep;
  rep.length = zero_dim_degree(S);
  rep.reducedness = reduced_zero_dim(S, rng);
  rep.reduced = rep.reducedness.reduced;
  rep.scheme = saturate_irrelevant(S);
  return rep;
}

}  // namespace

Ideal singular_locus(const Ideal& I, Rng& rng, const SmoothnessOptions& opts) {
  Ideal S = jacobian_scheme(I, rng, opts);
  if (scheme_dimension(S) < 0) return Ideal::unit(I.ring());
  return saturate_irrelevant(S);
}

bool is_smooth_curve(const Ideal& I, Rng& rng, const SmoothnessOptions& opts) {
  if (scheme_dimension(I) != 1) return false;
  return scheme_dimension(jacobian_scheme(I, rng, opts)) < 0;
}

NodalLocusReport transverse_nodal_intersection(const Ideal& a, const Ideal& b, long long expected, Rng& rng) {
  require_same_ring(a.ring(), b.ring());
  return zero_dim_report(sum(a, b), expected, rng);
}

Polynomial plane_model(const Ideal& I) {
  if (I.ring()->ambient() != Ambient::kP1xP2) throw Error(ErrorCode::kInvalidArgument, "plane models need P1xP2");
  const std::string x[] = {"x"};
  Ideal E = eliminate(I, x);
  const auto& gb = E.groebner().elements();
  if (gb.size() != 1) {
    throw Error(ErrorCode::kProjection, "projection ideal has " + std::to_string(gb.size()) + " generators");
  }
  const int d2 = curve_invariants(I).degree.at(1);
  if (gb[0].total_degree() != d2) {
    throw Error(ErrorCode::kProjection, "plane model has degree " + std::to_string(gb[0].total_degree()) +
                                            ", expected " + std::to_string(d2));
  }
  return gb[0];
}

NodalLocusReport nodal_plane_model_check(const Polynomial& F, long long genus, Rng& rng) {
  const RingPtr& R = F.ring();
  if (R->ambient() != Ambient::kPn || R->projective_dimension() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "plane curve expected");
  }
  const long long d = F.total_degree();
  std::vector<Polynomial> partials;
  for (int v = 0; v < 3; ++v) partials.push_back(derivative(F, v));
  return zero_dim_report(plane_ring_ideal(F, std::move(partials)), (d - 1) * (d - 2) / 2 - genus, rng);
}

MaxRankReport maximal_rank_check(const Ideal& I, std::span<const Multidegree> degrees) {
  const CurveInvariants inv = curve_invariants(I);
  MaxRankReport rep;
  for (const auto& m : degrees) {
    long long deg = 0;
    for (std::size_t j = 0; j < m.size(); ++j) deg += static_cast<long long>(m[j]) * inv.degree.at(j);
    if (deg < 2 * inv.genus - 1) throw Error(ErrorCode::kSpeciality, "twist of degree " + std::to_string(deg) + " may be special");
    const long long chi = deg + 1 - inv.genus;
    MaxRankRow row;
    row.degree = m;
    row.h0 = h0_ideal(I, m);
    row.expected = std::max(0LL, count_monomials(*I.ring(), m) - chi);
    rep.pass = rep.pass && row.h0 == row.expected;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

MaxRankReport maximal_rank_check(const Ideal& I, int b, int a_first, int a_last) {
  std::vector<Multidegree> ds;
  for (int a = a_first; a <= a_last; ++a) ds.push_back({a, b});
  return maximal_rank_check(I, ds);
}

bool nondegeneracy_check(const Ideal& I) {
  const Ring& R = *I.ring();
  if (R.ambient() == Ambient::kP1xP2) return h0_ideal(I, {1, 0}) == 0 && h0_ideal(I, {0, 1}) == 0;
  if (R.ambient() == Ambient::kPn) return h0_ideal(I, {1}) == 0;
  throw Error(ErrorCode::kInvalidArgument, "nondegeneracy needs P1xP2 or Pn");
}

namespace {

RingPtr plane_ring(const PrimeField& F) {
  return Ring::make(F, {{"y", 3, {1}}}, Ambient::kPn);
}

// Collinearity of a zero-dimensional plane scheme of the expected length;
// nullopt when the length is off.
std::optional<bool> plane_scheme_collinear(std::vector<Polynomial> gens, long long expected) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) return std::nullopt;
  const RingPtr& P = gens.front().ring();
  GroebnerBasis gb = buchberger(gens);
  const auto hp = HilbertNumerator(*P, gb.leading_monomials()).polynomial();
  if (hp.degree() != 0 || hp(Multidegree{0}) != expected) return std::nullopt;
  // y2 is last in grevlex, so dividing out its powers saturates by y2.
  std::vector<Polynomial> sat;
  for (const auto& g : gb.elements()) {
    int e = kMaxDegree;
    for (const auto& t : g.terms()) e = std::min(e, P->exponent(t.mono, 2));
    if (e == 0) {
      sat.push_back(g);
      continue;
    }
    const Monomial m = P->variable(2, e);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({P->div(t.mono, m), t.coeff});
    sat.push_back(Polynomial::from_sorted_terms(P, std::move(terms)));
  }
  Ideal Z(P, std::move(sat));
  // Equal Hilbert polynomials mean no point sits on y2 = 0 and Z is saturated.
  if (!(Z.hilbert().polynomial() == hp)) Z = saturate_irrelevant(Ideal(P, gb.elements()));
  return h0_ideal(Z, {1}) > 0;
}

// Irreducible monic polynomials of degree j <= 3 in s: those without roots.
bool has_root(const UPoly& f, const PrimeField& F) {
  for (Coeff s = 0; s < F.p(); ++s) {
    if (upoly_eval(f, s, F) == 0) return true;
  }
  return false;
}

}  // namespace

std::optional<bool> fiber_is_collinear(const Ideal& I, Coeff l0, Coeff l1) {
  const RingPtr& R = I.ring();
  if (R->ambient() != Ambient::kP1xP2) throw Error(ErrorCode::kInvalidArgument, "fiber scan needs P1xP2");
  RingPtr P = plane_ring(R->field());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(specialize_fiber(g, l0, l1, P));
  const long long d1 = curve_invariants(I).degree.at(0);
  return plane_scheme_collinear(std::move(gens), d1);
}

FiberScanReport collinear_fiber_scan(const Ideal& I, int extension_cap, int jobs) {
  const RingPtr& R = I.ring();
  if (R->ambient() != Ambient::kP1xP2) throw Error(ErrorCode::kInvalidArgument, "fiber scan needs P1xP2");
  if (extension_cap < 1 || extension_cap > 3) throw Error(ErrorCode::kInvalidArgument, "extension degree must be 1..3");
  const PrimeField& F = R->field();
  const long long d1 = curve_invariants(I).degree.at(0);
  RingPtr P = plane_ring(F);
  FiberScanReport rep;

  // Rational points: (s:1) for s in F_p, then (1:0).
  const long long npts = static_cast<long long>(F.p()) + 1;
  std::vector<signed char> verdict(npts, 0);  // 1 collinear, 0 not, -1 degenerate
  auto work = [&](long long first, long long step) {
    for (long long i = first; i < npts; i += step) {
      const Coeff l0 = i < F.p() ? static_cast<Coeff>(i) : 1;
      const Coeff l1 = i < F.p() ? 1 : 0;
      std::vector<Polynomial> gens;
      for (const auto& g : I.generators()) gens.push_back(specialize_fiber(g, l0, l1, P));
      auto v = plane_scheme_collinear(std::move(gens), d1);
      verdict[i] = v ? (*v ? 1 : 0) : -1;
    }
  };
  (void)I.groebner();
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  for (long long i = 0; i < npts; ++i) {
    ClosedPoint pt;
    pt.lambda = i < F.p() ? std::pair<Coeff, Coeff>{static_cast<Coeff>(i), 1} : std::pair<Coeff, Coeff>{1, 0};
    if (verdict[i] == 1) rep.collinear.push_back(pt);
    if (verdict[i] == -1) rep.degenerate.push_back(pt);
  }
  rep.scanned = npts;

  // Closed points of degree j: with M the homogenized minimal polynomial, the
  // fiber is collinear over F_{p^j} iff the saturation of I + (M) has a nonzero
  // piece in bidegree (j-1, 1).
  for (int j = 2; j <= extension_cap; ++j) {
    long long count = 1;
    for (int k = 0; k < j; ++k) count *= F.p();
    if (count > 2'000'000) throw Error(ErrorCode::kInvalidArgument, "extension scan too large for this prime");
    for (long long code = 0; code < count; ++code) {
      UPoly m(j + 1, 0);
      m[j] = 1;
      long long c = code;
      for (int k = 0; k < j; ++k) {
        m[k] = static_cast<Coeff>(c % F.p());
        c /= F.p();
      }
      if (has_root(m, F)) continue;
      std::vector<Term> terms;
      for (int k = 0; k <= j; ++k) {
        if (m[k]) terms.push_back({R->monomial(std::vector<int>{k, j - k, 0, 0, 0}), m[k]});
      }
      Ideal Z = sum(I, std::vector<Polynomial>{Polynomial::from_terms(R, std::move(terms))});
      ++rep.scanned;
      ClosedPoint pt;
      pt.minimal_polynomial = m;
      if (scheme_dimension(Z) != 0 || zero_dim_degree(Z) != d1 * j) {
        rep.degenerate.push_back(pt);
        continue;
      }
      if (h0_ideal(saturate_irrelevant(Z), {j - 1, 1}) > 0) rep.collinear.push_back(pt);
    }
  }
  return rep;
}

}  // namespace liaison
