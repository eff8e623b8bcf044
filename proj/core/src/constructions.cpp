#include "liaison/constructions.hpp"

#include <algorithm>

#include "liaison/geometry.hpp"
#include "liaison/linalg.hpp"
#include "liaison/sampling.hpp"

namespace liaison {

namespace {

void note(ResampleLog* log, std::string op, int attempt, std::string reason) {
  if (log) log->push_back({std::move(op), attempt, std::move(reason)});
}

void require_p1xp2(const Ring& R, const char* what) {
  if (R.ambient() != Ambient::kP1xP2) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " needs a P1xP2 ring");
}

std::pair<Coeff, Coeff> random_lambda(const PrimeField& F, Rng& rng) {
  const auto r = rng.below(static_cast<std::uint64_t>(F.p()) + 1);
  if (r == F.p()) return {1, 0};
  return {static_cast<Coeff>(r), 1};
}

// Binary form in block "x" as a polynomial in s = x0/x1.
UPoly dehomogenize_binary(const Polynomial& f) {
  const Ring& R = *f.ring();
  UPoly u(static_cast<std::size_t>(f.total_degree()) + 1, 0);
  for (const auto& t : f.terms()) u[R.exponent(t.mono, 0)] = t.coeff;
  return u;
}

std::string format_degree(const Multidegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

Multidegree total_sorted_key(const Multidegree& d) {
  Multidegree k{0};
  for (int x : d) k[0] += x;
  k.insert(k.end(), d.begin(), d.end());
  return k;
}

}  // namespace

FiberLine random_fiber_line(const RingPtr& ring, Rng& rng) {
  require_p1xp2(*ring, "fiber lines");
  const PrimeField& F = ring->field();
  auto lambda = random_lambda(F, rng);
  Polynomial x0 = Polynomial::variable(ring, 0), x1 = Polynomial::variable(ring, 1);
  Polynomial eq = x0.scaled(lambda.second) - x1.scaled(lambda.first);
  Polynomial l = random_form(ring, {0, 1}, rng);
  while (l.is_zero()) l = random_form(ring, {0, 1}, rng);
  return {Ideal(ring, {eq, l}, true), lambda};
}

Ideal random_ci_rational_curve(const RingPtr& ring, Rng& rng, ResampleLog* log) {
  require_p1xp2(*ring, "rational curves");
  for (int attempt = 1; attempt <= kMaxResamples; ++attempt) {
    Ideal I = saturate_irrelevant(Ideal(ring, {random_form(ring, {2, 1}, rng), random_form(ring, {2, 1}, rng)}));
    if (scheme_dimension(I) != 1) {
      note(log, "random_ci_rational_curve", attempt, "not a curve");
      continue;
    }
    const auto inv = curve_invariants(I);
    if (inv.degree != Multidegree{1, 4} || inv.genus != 0) {
      note(log, "random_ci_rational_curve", attempt, "wrong invariants");
      continue;
    }
    if (!is_smooth_curve(I, rng)) {
      note(log, "random_ci_rational_curve", attempt, "singular");
      continue;
    }
    return I;
  }
  throw Error(ErrorCode::kDegenerateSample, "no smooth (1,4) complete intersection in 20 tries");
}

Ideal random_plane_quartic_graph(const RingPtr& ring, Rng& rng, ResampleLog* log) {
  require_p1xp2(*ring, "quartic graphs");
  const PrimeField& F = ring->field();
  for (int attempt = 1; attempt <= kMaxResamples; ++attempt) {
    std::vector<Polynomial> f;
    for (int i = 0; i < 3; ++i) f.push_back(random_form(ring, {4, 0}, rng));
    // A common root, possibly at x1 = 0, is a base point.
    UPoly g = dehomogenize_binary(f[0]);
    bool at_infinity = true;
    for (const auto& fi : f) {
      UPoly u = dehomogenize_binary(fi);
      at_infinity = at_infinity && u.back() == 0;
      g = upoly_gcd(g, u, F);
    }
    if (at_infinity || g.size() > 1 || g.empty()) {
      note(log, "random_plane_quartic_graph", attempt, "common base point");
      continue;
    }
    std::vector<Polynomial> minors;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        minors.push_back(Polynomial::variable(ring, 2 + i) * f[j] - Polynomial::variable(ring, 2 + j) * f[i]);
      }
    }
    Ideal I = saturate_irrelevant(Ideal(ring, std::move(minors)));
    const auto inv = curve_invariants(I);
    if (inv.degree != Multidegree{1, 4} || inv.genus != 0) {
      note(log, "random_plane_quartic_graph", attempt, "wrong invariants");
      continue;
    }
    return I;
  }
  throw Error(ErrorCode::kDegenerateSample, "no base-point-free quartic graph in 20 tries");
}

Ideal union_ideal(const RingPtr& ring, std::span<const Ideal> ideals) {
  if (ideals.empty()) return Ideal::unit(ring);
  for (const auto& I : ideals) require_same_ring(ring, I.ring());
  if (ideals.size() == 1) return saturate_irrelevant(ideals.front());
  return saturate_irrelevant(intersect(ideals));
}

Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point) {
  if (static_cast<int>(point.size()) != ring->nvars()) throw Error(ErrorCode::kInvalidArgument, "point has wrong length");
  std::vector<Polynomial> gens;
  for (const auto& blk : ring->blocks()) {
    auto vars = ring->block_variables(blk.name);
    bool nonzero = false;
    for (int v : vars) nonzero = nonzero || point[v] != 0;
    if (!nonzero) throw Error(ErrorCode::kInvalidArgument, "point has a zero block");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        Polynomial m = Polynomial::variable(ring, vars[i]).scaled(point[vars[j]]) -
                       Polynomial::variable(ring, vars[j]).scaled(point[vars[i]]);
        if (!m.is_zero()) gens.push_back(std::move(m));
      }
    }
  }
  return Ideal(ring, std::move(gens), true);
}

namespace {

Ideal points_ideal(const RingPtr& ring, const std::vector<std::vector<Coeff>>& pts) {
  std::vector<Ideal> parts;
  for (const auto& p : pts) parts.push_back(point_ideal(ring, p));
  return union_ideal(ring, parts);
}

}  // namespace

PointSet random_points(const RingPtr& ring, int n, Rng& rng) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative point count");
  const PrimeField& F = ring->field();
  PointSet out{{}, Ideal::unit(ring)};
  while (static_cast<int>(out.points.size()) < n) {
    std::vector<Coeff> pt(ring->nvars());
    bool ok = true;
    for (const auto& blk : ring->blocks()) {
      bool nonzero = false;
      for (int v : ring->block_variables(blk.name)) {
        pt[v] = rng.element(F);
        nonzero = nonzero || pt[v] != 0;
      }
      ok = ok && nonzero;
    }
    if (!ok || std::find(out.points.begin(), out.points.end(), pt) != out.points.end()) continue;
    out.points.push_back(std::move(pt));
  }
  out.ideal = points_ideal(ring, out.points);
  return out;
}

PointSet random_points_on_curve(const Ideal& I, int n, Rng& rng) {
  const RingPtr& R = I.ring();
  require_p1xp2(*R, "on-curve sampling");
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative point count");
  PointSet out{{}, Ideal::unit(R)};
  if (n == 0) return out;
  if (curve_invariants(I).degree.at(0) <= 0) throw Error(ErrorCode::kInvalidArgument, "curve does not dominate P1");
  const PrimeField& F = R->field();
  RingPtr plane = Ring::projective(F, 2, "y");
  // u2 is eliminated first, leaving a binary form in (u0, u1).
  RingPtr chart = Ring::make(F, {{"u", 3, {1}}}, Ambient::kPn, MonomialOrder::block_elimination({{2}, {0, 1}}));
  std::vector<std::pair<Coeff, Coeff>> used;

  constexpr int kMaxFibers = 200;
  for (int fiber = 0; fiber < kMaxFibers && static_cast<int>(out.points.size()) < n; ++fiber) {
    auto lambda = random_lambda(F, rng);
    Matrix A(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) A.at(i, j) = rng.element(F);
    }
    if (std::find(used.begin(), used.end(), lambda) != used.end() || rank(A, F) < 3) continue;
    used.push_back(lambda);

    std::vector<Polynomial> images;
    for (int i = 0; i < 3; ++i) {
      std::vector<Term> t;
      for (int j = 0; j < 3; ++j) t.push_back({chart->variable(j), A.at(i, j)});
      images.push_back(Polynomial::from_terms(chart, std::move(t)));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) {
      Polynomial h = substitute(specialize_fiber(g, lambda.first, lambda.second, plane), chart, images);
      if (!h.is_zero()) gens.push_back(std::move(h));
    }
    if (gens.empty()) continue;
    GroebnerBasis gb = buchberger(gens);
    const Polynomial* elim = nullptr;
    for (const auto& g : gb.elements()) {
      bool free = true;
      for (const auto& t : g.terms()) free = free && chart->exponent(t.mono, 2) == 0;
      if (free && (!elim || g.total_degree() < elim->total_degree())) elim = &g;
    }
    if (!elim) continue;
    UPoly e(static_cast<std::size_t>(elim->total_degree()) + 1, 0);
    for (const auto& t : elim->terms()) e[chart->exponent(t.mono, 0)] = t.coeff;
    trim(e);
    if (e.size() < 2) continue;

    std::vector<std::vector<Coeff>> candidates;
    for (Coeff s = 0; s < F.p(); ++s) {
      if (upoly_eval(e, s, F) != 0) continue;
      // Fiber over u0 = s*u1 in the chart u1 = 1: common roots in u2.
      UPoly g;
      for (const auto& b : gb.elements()) {
        UPoly u;
        for (const auto& t : b.terms()) {
          const int k = chart->exponent(t.mono, 2);
          if (static_cast<int>(u.size()) <= k) u.resize(k + 1, 0);
          u[k] = F.add(u[k], F.mul(t.coeff, F.pow(s, chart->exponent(t.mono, 0))));
        }
        trim(u);
        if (!u.empty()) g = g.empty() ? u : upoly_gcd(g, u, F);
      }
      if (g.size() < 2) continue;
      for (Coeff t = 0; t < F.p(); ++t) {
        if (upoly_eval(g, t, F) != 0) continue;
        const Coeff u[3] = {s, 1, t};
        std::vector<Coeff> pt = {lambda.first, lambda.second, 0, 0, 0};
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) pt[2 + i] = F.add(pt[2 + i], F.mul(A.at(i, j), u[j]));
        }
        bool on = true;
        for (const auto& gen : I.generators()) on = on && evaluate(gen, pt) == 0;
        if (on) candidates.push_back(std::move(pt));
      }
    }
    if (candidates.empty()) continue;
    out.points.push_back(candidates[rng.below(candidates.size())]);
  }
  if (static_cast<int>(out.points.size()) < n) {
    throw Error(ErrorCode::kPointScarcity, "found " + std::to_string(out.points.size()) + " of " + std::to_string(n) +
                                                " rational points in 200 fibers; try a larger prime");
  }
  out.ideal = points_ideal(R, out.points);
  return out;
}

std::vector<Polynomial> random_hypersurfaces_containing(const Ideal& I, std::span<const Multidegree> degrees, Rng& rng,
                                                        ResampleLog* log) {
  const RingPtr& R = I.ring();
  // Degrees grouped so that forms of one degree are independent.
  std::vector<Multidegree> distinct;
  for (const auto& d : degrees) {
    if (std::find(distinct.begin(), distinct.end(), d) == distinct.end()) distinct.push_back(d);
  }
  std::vector<std::vector<Polynomial>> bases;
  for (const auto& d : distinct) {
    auto b = graded_piece_basis(I, d);
    const auto need = std::count(degrees.begin(), degrees.end(), d);
    if (static_cast<long long>(b.size()) < need) {
      throw Error(ErrorCode::kRankShortfall, "need " + std::to_string(need) + " forms of degree " + format_degree(d) +
                                                 " but h0 = " + std::to_string(b.size()));
    }
    bases.push_back(std::move(b));
  }
  const int codim = static_cast<int>(degrees.size());
  const int ambient = R->ambient() == Ambient::kP1xP2 ? 3 : R->projective_dimension();
  for (int attempt = 1; attempt <= kMaxResamples; ++attempt) {
    std::vector<Polynomial> forms;
    for (const auto& d : degrees) {
      auto k = std::find(distinct.begin(), distinct.end(), d) - distinct.begin();
      forms.push_back(random_combination(bases[k], rng));
    }
    bool independent = true;
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      std::vector<Polynomial> same;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (degrees[i] == distinct[k]) same.push_back(forms[i]);
      }
      // Same-degree forms: ideal membership is span membership.
      for (std::size_t i = 0; i < same.size() && independent; ++i) {
        independent = !same[i].is_zero() &&
                      (i == 0 || !Ideal(R, std::vector<Polynomial>(same.begin(), same.begin() + i)).contains(same[i]));
      }
    }
    if (!independent) {
      note(log, "random_hypersurfaces_containing", attempt, "dependent forms");
      continue;
    }
    if (scheme_dimension(Ideal(R, forms)) != ambient - codim) {
      note(log, "random_hypersurfaces_containing", attempt, "not a complete intersection");
      continue;
    }
    return forms;
  }
  throw Error(ErrorCode::kDegenerateSample, "no complete intersection through the scheme in 20 tries");
}

Ideal residual_ideal(const Ideal& Y, const Ideal& C, Rng& rng, bool* fast_path) {
  require_same_ring(Y.ring(), C.ring());
  if (fast_path) *fast_path = false;
  if (Y.contains(C)) return Ideal::unit(Y.ring());
  std::vector<Multidegree> degrees;
  for (const auto& g : C.generators()) {
    if (Y.contains(g)) continue;
    auto d = *g.multidegree();
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end(),
            [](const Multidegree& a, const Multidegree& b) { return total_sorted_key(a) < total_sorted_key(b); });
  // One general h in the lowest degree where C leaves Y.
  auto basis = graded_piece_basis(C, degrees.front());
  for (int tries = 0; tries < 3; ++tries) {
    Polynomial h = random_combination(basis, rng);
    if (h.is_zero() || Y.contains(h)) continue;
    Ideal K = saturate_irrelevant(quotient(Y, h));
    // K contains the residual; K * C ⊆ Y gives the other inclusion.
    bool inside = true;
    for (const auto& k : K.generators()) {
      for (const auto& c : C.generators()) {
        inside = inside && Y.contains(k * c);
      }
      if (!inside) break;
    }
    if (inside) {
      if (fast_path) *fast_path = true;
      return K;
    }
    break;
  }
  return saturate_irrelevant(quotient(Y, C));
}

LinkResult link(const Ideal& curve, std::span<const Polynomial> forms, Rng& rng) {
  const RingPtr& R = curve.ring();
  std::vector<Multidegree> degrees;
  for (const auto& f : forms) {
    require_same_ring(R, f.ring());
    if (f.is_zero() || !curve.contains(f)) throw Error(ErrorCode::kNotContaining, "linking form is not in the curve's ideal");
    degrees.push_back(*f.multidegree());
  }
  LinkResult out{saturate_irrelevant(Ideal(R, std::vector<Polynomial>(forms.begin(), forms.end()))), Ideal(R),
                 plan_link(curve_invariants(curve), degrees), false};
  out.residual = residual_ideal(out.complete_intersection, curve, rng, &out.fast_path);
  if (scheme_dimension(out.residual) == 1) out.step.computed = curve_invariants(out.residual);
  return out;
}

}  // namespace liaison
