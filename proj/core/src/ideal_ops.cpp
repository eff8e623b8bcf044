#include "liaison/ideal_ops.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "liaison/linalg.hpp"

namespace liaison {

namespace {

std::vector<Polynomial> map_all(std::span<const Polynomial> fs, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(map_by_names(f, target));
  return out;
}

std::string fresh_block_name(const Ring& R, std::string base) {
  while (R.block_index(base) || R.var_index(base)) base += "_";
  return base;
}

bool free_of(const Polynomial& f, std::span<const int> vars) {
  const Ring& R = *f.ring();
  for (const auto& t : f.terms()) {
    for (int v : vars) {
      if (R.exponent(t.mono, v)) return false;
    }
  }
  return true;
}

// Divides every term by v^k (caller guarantees divisibility). Order is preserved.
Polynomial divide_by_power(const Polynomial& f, int v, int k) {
  if (k == 0) return f;
  const Monomial m = f.ring()->variable(v, k);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({Ring::div(t.mono, m), t.coeff});
  return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

int min_exponent(const Polynomial& f, int v) {
  int e = kMaxDegree;
  for (const auto& t : f.terms()) e = std::min(e, f.ring()->exponent(t.mono, v));
  return e;
}

// The ring with the same variables under grevlex with v last.
RingPtr grevlex_last(const RingPtr& R, int v) {
  const auto& blocks = R->order().blocks();
  if (R->order().kind() == MonomialOrder::Kind::kGrevlex && blocks.front().back() == v) return R;
  std::vector<int> seq;
  for (int u = 0; u < R->nvars(); ++u) {
    if (u != v) seq.push_back(u);
  }
  seq.push_back(v);
  return R->with_order(MonomialOrder::grevlex(std::move(seq)));
}

// Basis of I in an order where v is last, reusing I's cache when possible.
GroebnerBasis basis_with_last(const Ideal& I, int v) {
  RingPtr Rv = grevlex_last(I.ring(), v);
  if (Rv == I.ring()) return I.groebner();
  return buchberger(map_all(I.generators(), Rv));
}

// Bayer: in grevlex with v last, x_v divides a homogeneous g iff it divides lm(g).
GroebnerBasis divide_out(const GroebnerBasis& gb, int v, bool once) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    const int e = min_exponent(g, v);
    out.push_back(divide_by_power(g, v, once ? std::min(e, 1) : e));
  }
  if (out.size() == 1 && out[0].is_constant()) return GroebnerBasis(gb.ring(), std::move(out));
  // Still a Groebner basis, but possibly not reduced.
  return buchberger(out);
}

bool same_via_bases(const GroebnerBasis& a, const GroebnerBasis& b) {
  for (const auto& g : b.elements()) {
    if (!a.contains(map_by_names(g, a.ring()))) return false;
  }
  for (const auto& g : a.elements()) {
    if (!b.contains(map_by_names(g, b.ring()))) return false;
  }
  return true;
}

std::optional<int> as_variable(const Polynomial& f) {
  if (f.size() != 1 || f.total_degree() != 1) return std::nullopt;
  const Ring& R = *f.ring();
  for (int v = 0; v < R.nvars(); ++v) {
    if (R.exponent(f.leading_monomial(), v) == 1) return v;
  }
  return std::nullopt;
}

bool standard_multigraded(const Ring& R) {
  for (int v = 0; v < R.nvars(); ++v) {
    int ones = 0;
    for (int d : R.var_degree(v)) {
      if (d == 1) {
        ++ones;
      } else if (d != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

Matrix random_invertible(int n, const PrimeField& F, Rng& rng) {
  for (;;) {
    Matrix A(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A.at(i, j) = rng.element(F);
    }
    if (rank(A, F) == static_cast<std::size_t>(n)) return A;
  }
}

Matrix inverse(const Matrix& A, const PrimeField& F) {
  const std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  row_reduce(aug, F);
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

// Block-preserving linear change of coordinates x -> A x and its inverse.
struct CoordinateChange {
  std::vector<Polynomial> forward;
  std::vector<Polynomial> backward;
  std::vector<Matrix> matrices;
};

CoordinateChange random_change(const RingPtr& R, Rng& rng) {
  const PrimeField& F = R->field();
  CoordinateChange c;
  c.forward.assign(R->nvars(), Polynomial(R));
  c.backward.assign(R->nvars(), Polynomial(R));
  for (const auto& blk : R->blocks()) {
    auto vars = R->block_variables(blk.name);
    const int n = static_cast<int>(vars.size());
    Matrix A = random_invertible(n, F, rng);
    Matrix B = inverse(A, F);
    for (int i = 0; i < n; ++i) {
      std::vector<Term> fw, bw;
      for (int j = 0; j < n; ++j) {
        fw.push_back({R->variable(vars[j]), A.at(i, j)});
        bw.push_back({R->variable(vars[j]), B.at(i, j)});
      }
      c.forward[vars[i]] = Polynomial::from_terms(R, std::move(fw));
      c.backward[vars[i]] = Polynomial::from_terms(R, std::move(bw));
    }
    c.matrices.push_back(std::move(A));
  }
  return c;
}

std::vector<Polynomial> apply(std::span<const Polynomial> fs, const RingPtr& R, std::span<const Polynomial> images) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(substitute(f, R, images));
  return out;
}

Ideal saturate_variables(const Ideal& I, std::span<const int> vars) {
  // I : (v_1..v_k)^inf = ∩ I : v_i^inf; equal pieces are intersected once.
  std::vector<GroebnerBasis> parts;
  for (int v : vars) {
    GroebnerBasis s = divide_out(basis_with_last(I, v), v, false);
    bool dup = false;
    for (const auto& p : parts) {
      if (same_via_bases(p, s)) {
        dup = true;
        break;
      }
    }
    if (!dup) parts.push_back(std::move(s));
  }
  std::vector<Ideal> ideals;
  for (const auto& p : parts) ideals.emplace_back(I.ring(), map_all(p.elements(), I.ring()), I.saturated());
  return intersect(ideals);
}

constexpr int kSaturationRounds = 50;
constexpr int kGenericAttempts = 4;

}  // namespace

Ideal sum(const Ideal& I, const Ideal& J) { return sum(I, J.generators()); }

Ideal sum(const Ideal& I, std::span<const Polynomial> extra) {
  auto gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R);
  VariableBlock tag{fresh_block_name(*R, "t"), 1, {}, false};
  RingPtr T = R->with_leading_block(tag);
  const Polynomial t = Polynomial::variable(T, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * map_by_names(g, T));
  for (const auto& h : J.generators()) {
    auto hh = map_by_names(h, T);
    gens.push_back(hh - t * hh);
  }
  GroebnerBasis gb = buchberger(gens);
  const int tvar[] = {0};
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (free_of(g, tvar)) kept.push_back(map_by_names(g, R));
  }
  return Ideal::from_groebner(GroebnerBasis(R, std::move(kept)), I.saturated() && J.saturated());
}

Ideal intersect(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw Error(ErrorCode::kInvalidArgument, "intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  const RingPtr& R = I.ring();
  if (f.is_zero()) throw Error(ErrorCode::kInvalidArgument, "quotient by the zero ideal");
  if (I.contains(f)) return Ideal::unit(R);
  if (f.is_constant()) return I;
  if (auto v = as_variable(f)) {
    GroebnerBasis q = divide_out(basis_with_last(I, *v), *v, true);
    return Ideal(R, map_all(q.elements(), R), I.saturated());
  }
  Ideal meet = intersect(I, Ideal(R, {f}));
  std::vector<Polynomial> out;
  for (const auto& g : meet.groebner().elements()) {
    auto q = divide_exact(g, f);
    if (!q) throw Error(ErrorCode::kLogic, "intersection generator not divisible by the divisor");
    out.push_back(std::move(*q));
  }
  return Ideal(R, std::move(out), I.saturated());
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw Error(ErrorCode::kInvalidArgument, "quotient by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) {
    Ideal q = quotient(I, g);
    bool dup = false;
    for (const auto& p : parts) {
      if (p == q) {
        dup = true;
        break;
      }
    }
    if (!dup) parts.push_back(std::move(q));
  }
  return intersect(parts);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) return Ideal::unit(I.ring());
  if (auto v = as_variable(f)) {
    const int vars[] = {*v};
    return saturate_variables(I, vars);
  }
  Ideal cur = I;
  for (int round = 0; round < kSaturationRounds; ++round) {
    Ideal next = quotient(cur, f);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorCode::kSaturationLimit, "saturation did not stabilize");
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::vector<int> vars;
  bool all_vars = true;
  for (const auto& g : J.generators()) {
    auto v = as_variable(g);
    all_vars &= v.has_value();
    if (v) vars.push_back(*v);
  }
  if (all_vars) return saturate_variables(I, vars);
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) {
    Ideal s = saturate(I, g);
    bool dup = false;
    for (const auto& p : parts) {
      if (p == s) {
        dup = true;
        break;
      }
    }
    if (!dup) parts.push_back(std::move(s));
  }
  return intersect(parts);
}

Ideal saturate_irrelevant(const Ideal& I) {
  if (I.saturated()) return I;
  const RingPtr& R = I.ring();
  if (R->ambient() == Ambient::kElim) throw Error(ErrorCode::kInvalidArgument, "no irrelevant ideal for this ring");
  if (I.is_zero()) return I.marked_saturated();
  // After a random block-preserving change of coordinates the last variable of
  // each block is a general linear form l_b, and J = I : (prod l_b)^inf contains
  // the saturation. Equal Hilbert polynomials certify J/I^sat has finite length,
  // hence J = I^sat. A bad draw only costs a retry.
  Rng rng(0x5a7u ^ R->field().p());
  for (int attempt = 0; attempt < kGenericAttempts; ++attempt) {
    CoordinateChange ch = random_change(R, rng);
    std::vector<Polynomial> cur = apply(I.generators(), R, ch.forward);
    std::optional<HilbertPolynomial> before;
    std::optional<GroebnerBasis> gb;
    for (const auto& blk : R->blocks()) {
      const int v = R->block_variables(blk.name).back();
      GroebnerBasis full = buchberger(map_all(cur, grevlex_last(R, v)));
      if (!before) before = HilbertNumerator(*full.ring(), full.leading_monomials()).polynomial();
      gb = divide_out(full, v, false);
      cur = gb->elements();
    }
    if (HilbertNumerator(*gb->ring(), gb->leading_monomials()).polynomial() != *before) continue;
    return Ideal(R, apply(map_all(cur, R), R, ch.backward), true);
  }
  // Exact fallback: variable-wise saturation, block by block.
  Ideal cur = I;
  for (const auto& blk : R->blocks()) cur = saturate_variables(cur, R->block_variables(blk.name));
  return cur.marked_saturated();
}

RingPtr subring(const Ring& R, std::span<const std::string> keep) {
  std::vector<VariableBlock> blocks;
  for (const auto& b : R.blocks()) {
    if (std::find(keep.begin(), keep.end(), b.name) != keep.end()) blocks.push_back(b);
  }
  if (blocks.empty()) throw Error(ErrorCode::kInvalidArgument, "subring keeps no variables");
  std::vector<int> coords;
  for (int r = 0; r < R.grading_rank(); ++r) {
    bool used = false;
    for (const auto& b : blocks) used |= b.degree[r] != 0;
    if (used) coords.push_back(r);
  }
  if (coords.empty()) coords.push_back(0);
  for (auto& b : blocks) {
    Multidegree d;
    for (int r : coords) d.push_back(b.degree[r]);
    b.degree = std::move(d);
  }
  Ambient amb = Ambient::kElim;
  if (blocks.size() == 1 && blocks[0].degree == Multidegree{1}) amb = Ambient::kPn;
  if (blocks.size() == 2 && R.ambient() == Ambient::kP1xP2) amb = Ambient::kP1xP2;
  return Ring::make(R.field(), std::move(blocks), amb);
}

Ideal eliminate(const Ideal& I, std::span<const std::string> blocks) {
  const RingPtr& R = I.ring();
  std::vector<int> elim, keep;
  std::vector<std::string> keep_names;
  for (const auto& b : R->blocks()) {
    auto vars = R->block_variables(b.name);
    if (std::find(blocks.begin(), blocks.end(), b.name) != blocks.end()) {
      elim.insert(elim.end(), vars.begin(), vars.end());
    } else {
      keep.insert(keep.end(), vars.begin(), vars.end());
      keep_names.push_back(b.name);
    }
  }
  RingPtr S = subring(*R, keep_names);
  if (elim.empty()) return Ideal(S, map_all(I.generators(), S), I.saturated());
  if (I.is_zero()) return Ideal(S);
  RingPtr E = R->with_order(MonomialOrder::block_elimination({elim, keep}));
  GroebnerBasis gb = buchberger(map_all(I.generators(), E));
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (free_of(g, elim)) kept.push_back(map_by_names(g, S));
  }
  return Ideal::from_groebner(GroebnerBasis(S, std::move(kept)));
}

Ideal ring_map_kernel(const Ideal& source, std::span<const Polynomial> forms, const RingPtr& target) {
  const RingPtr& S = source.ring();
  if (forms.empty()) throw Error(ErrorCode::kInvalidArgument, "ring map needs at least one form");
  if (target->blocks().size() != 1 || target->nvars() != static_cast<int>(forms.size())) {
    throw Error(ErrorCode::kInvalidArgument, "target ring must have one variable per form");
  }
  std::optional<Multidegree> md;
  bool all_inside = true;
  for (const auto& f : forms) {
    require_same_ring(S, f.ring());
    if (f.is_zero()) continue;
    auto d = f.multidegree();
    if (md && *md != *d) throw Error(ErrorCode::kHomogeneity, "forms of a ring map need one common degree");
    md = d;
    all_inside = all_inside && source.contains(f);
  }
  if (!md || all_inside) throw Error(ErrorCode::kMapUndefined, "every form lies in the source ideal");
  const auto& tb = target->blocks().front();
  if (S->block_index(tb.name)) throw Error(ErrorCode::kInvalidArgument, "target block name clashes with source");

  std::vector<VariableBlock> blocks = S->blocks();
  blocks.push_back({tb.name, tb.count, *md, tb.indexed});
  std::vector<int> src(S->nvars()), tgt(tb.count);
  std::iota(src.begin(), src.end(), 0);
  std::iota(tgt.begin(), tgt.end(), S->nvars());
  RingPtr G = Ring::make(S->field(), std::move(blocks), Ambient::kElim, MonomialOrder::block_elimination({src, tgt}));

  std::vector<Polynomial> gens = map_all(source.generators(), G);
  for (int i = 0; i < tb.count; ++i) gens.push_back(Polynomial::variable(G, S->nvars() + i) - map_by_names(forms[i], G));
  GroebnerBasis gb = buchberger(gens);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    if (free_of(g, src)) kept.push_back(map_by_names(g, target));
  }
  if (target->order() == MonomialOrder::grevlex(target->nvars())) {
    return Ideal::from_groebner(GroebnerBasis(target, std::move(kept)));
  }
  return Ideal(target, std::move(kept));
}

std::vector<Polynomial> graded_piece_basis(const Ideal& I, const Multidegree& m) {
  const RingPtr& R = I.ring();
  const auto& gb = I.groebner();
  auto lms = gb.leading_monomials();
  std::vector<Polynomial> out;
  for (const auto& mono : monomials_of_multidegree(*R, m)) {
    bool lead = false;
    for (const auto& l : lms) {
      if (Ring::divides(l, mono)) {
        lead = true;
        break;
      }
    }
    if (!lead) continue;
    auto x = Polynomial::monomial(R, mono);
    out.push_back(x - gb.normal_form(x));
  }
  return out;
}

long long zero_dim_degree(const Ideal& I) {
  auto hp = I.hilbert().polynomial();
  const int deg = hp.degree();
  if (deg > 0) throw Error(ErrorCode::kDimension, "scheme has dimension " + std::to_string(deg));
  if (deg < 0) return 0;
  return hp(Multidegree(I.ring()->grading_rank(), 0));
}

namespace {

// Affine chart: the last coordinate of every block set to 1 after a linear change.
struct Chart {
  RingPtr affine;
  std::vector<Polynomial> images;
  std::vector<std::vector<Coeff>> matrices;
};

Chart random_chart(const RingPtr& R, Rng& rng) {
  const PrimeField& F = R->field();
  std::vector<VariableBlock> blocks;
  for (const auto& b : R->blocks()) {
    if (b.count > 1) blocks.push_back({b.name, b.count - 1, {1}, true});
  }
  if (blocks.empty()) throw Error(ErrorCode::kInvalidArgument, "no affine chart for this ring");
  Chart c;
  c.affine = Ring::make(F, blocks, Ambient::kElim);
  c.images.assign(R->nvars(), Polynomial(c.affine));
  for (const auto& b : R->blocks()) {
    auto vars = R->block_variables(b.name);
    const int n = static_cast<int>(vars.size());
    Matrix A = random_invertible(n, F, rng);
    std::vector<Coeff> flat;
    for (int i = 0; i < n; ++i) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) {
        flat.push_back(A.at(i, j));
        if (j + 1 < n) {
          auto u = c.affine->var_index(b.name + std::to_string(j));
          terms.push_back({c.affine->variable(*u), A.at(i, j)});
        } else {
          terms.push_back({c.affine->one(), A.at(i, j)});
        }
      }
      c.images[vars[i]] = Polynomial::from_terms(c.affine, std::move(terms));
    }
    c.matrices.push_back(std::move(flat));
  }
  return c;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t cap) {
  const Ring& A = *gb.ring();
  auto lms = gb.leading_monomials();
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : lms) {
      if (Ring::divides(l, m)) return true;
    }
    return false;
  };
  std::vector<Monomial> out;
  if (gb.is_unit()) return out;
  std::unordered_map<Monomial, char, MonomialHash> seen;
  std::vector<Monomial> frontier{A.one()};
  seen[A.one()] = 1;
  while (!frontier.empty() && out.size() <= cap) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (int v = 0; v < A.nvars(); ++v) {
      Monomial n = Ring::mul(m, A.variable(v));
      if (seen.count(n) || reducible(n)) continue;
      seen[n] = 1;
      frontier.push_back(n);
    }
  }
  return out;
}

// Minimal polynomial of vector v under M, by Krylov iteration.
UPoly krylov_minpoly(const Matrix& M, std::vector<Coeff> v, const PrimeField& F) {
  const std::size_t n = M.rows();
  struct Row {
    std::vector<Coeff> vec;
    UPoly comb;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  std::vector<Coeff> w = std::move(v);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Coeff> r = w;
    UPoly comb(k + 1, 0);
    comb[k] = 1;
    for (const auto& b : basis) {
      const Coeff c = r[b.pivot];
      if (!c) continue;
      for (std::size_t i = 0; i < n; ++i) r[i] = F.sub_mul(r[i], c, b.vec[i]);
      for (std::size_t i = 0; i < b.comb.size(); ++i) comb[i] = F.sub_mul(comb[i], c, b.comb[i]);
    }
    std::size_t piv = 0;
    while (piv < n && r[piv] == 0) ++piv;
    if (piv == n) {
      trim(comb);
      return comb;
    }
    const Coeff inv = F.inv(r[piv]);
    for (auto& x : r) x = F.mul(x, inv);
    for (auto& x : comb) x = F.mul(x, inv);
    // keep earlier rows reduced at the new pivot is unnecessary: rows are
    // only used to clear their own pivots, processed in insertion order.
    basis.push_back({std::move(r), std::move(comb), piv});
    std::vector<Coeff> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (M.at(i, j) && w[j]) next[i] = F.add(next[i], F.mul(M.at(i, j), w[j]));
      }
    }
    w = std::move(next);
  }
  throw Error(ErrorCode::kLogic, "Krylov sequence failed to close");
}

constexpr int kChartAttempts = 6;
constexpr int kFormTrials = 3;

}  // namespace

ReducednessReport reduced_zero_dim(const Ideal& I, Rng& rng) {
  ReducednessReport rep;
  rep.length = zero_dim_degree(I);
  if (rep.length == 0) {
    rep.reduced = true;
    return rep;
  }
  const RingPtr& R = I.ring();
  const PrimeField& F = R->field();
  if (!standard_multigraded(*R)) throw Error(ErrorCode::kInvalidArgument, "reducedness needs a standard multigrading");
  for (int attempt = 0; attempt < kChartAttempts; ++attempt) {
    Chart chart = random_chart(R, rng);
    GroebnerOptions opts;
    opts.sugar = true;
    auto gens = apply(I.generators(), chart.affine, chart.images);
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens, opts);
    auto basis = standard_monomials(gb, static_cast<std::size_t>(rep.length));
    if (static_cast<long long>(basis.size()) != rep.length) continue;  // points off the chart
    rep.chart = chart.matrices;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const std::size_t n = basis.size();
    const RingPtr& A = chart.affine;
    for (int trial = 0; trial < kFormTrials; ++trial) {
      std::vector<Coeff> coeffs;
      std::vector<Term> terms;
      for (int v = 0; v < A->nvars(); ++v) {
        coeffs.push_back(rng.element(F));
        terms.push_back({A->variable(v), coeffs.back()});
      }
      rep.forms.push_back(coeffs);
      Polynomial ell = Polynomial::from_terms(A, std::move(terms));
      Matrix M(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial prod = gb.normal_form(ell.times(basis[j]));
        for (const auto& t : prod.terms()) M.at(index.at(t.mono), j) = t.coeff;
      }
      std::vector<Coeff> v(n);
      for (auto& x : v) x = rng.element(F);
      UPoly mp = krylov_minpoly(M, std::move(v), F);
      const int deg = static_cast<int>(mp.size()) - 1;
      rep.minpoly_degrees.push_back(deg);
      if (!upoly_squarefree(mp, F)) {
        rep.reduced = false;  // a nilpotent part: certainly not reduced
        return rep;
      }
      if (deg == rep.length) {
        rep.reduced = true;
        return rep;
      }
    }
    rep.reduced = false;
    return rep;
  }
  throw Error(ErrorCode::kDegenerateSample, "no affine chart contains the whole scheme");
}

bool is_reduced_zero_dim(const Ideal& I, Rng& rng) { return reduced_zero_dim(I, rng).reduced; }

}  // namespace liaison
