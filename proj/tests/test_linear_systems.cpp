#include <gtest/gtest.h>

#include <map>

#include "liaison/linear_systems.hpp"
#include "liaison/sampling.hpp"

using namespace liaison;

namespace {

/// Random plane curve of degree d whose monomials all vanish to order two at
/// the listed coordinate points (0 = (1:0:0), 1 = (0:1:0), 2 = (0:0:1)).
Polynomial form_singular_at(const RingPtr& P2, int d, std::initializer_list<int> points, Rng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_multidegree(*P2, {d})) {
    bool ok = true;
    for (int v : points) ok = ok && P2->exponent(m, v) <= d - 2;
    if (ok) terms.push_back({m, rng.nonzero(P2->field())});
  }
  return Polynomial::from_terms(P2, std::move(terms));
}

PlaneModel nodal_model(const RingPtr& P2, int d, std::initializer_list<int> nodes, long long genus, Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    try {
      return make_plane_model(form_singular_at(P2, d, nodes, rng), genus, rng);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kProjection) throw;
    }
  }
  throw Error(ErrorCode::kDegenerateSample, "no nodal model");
}

}  // namespace

TEST(LinearSystems, NodalQuarticControl) {
  // g = 3 - 1 = 2: the adjoints are the lines through the node and map the
  // curve two-to-one onto P1
  const PrimeField F(101);
  auto P2 = Ring::projective(F, 2, "y");
  Rng rng(3);
  auto pm = nodal_model(P2, 4, {2}, 2, rng);
  EXPECT_EQ(pm.genus, 2);
  auto series = adjoint_series(pm, 0);
  ASSERT_EQ(series.size(), 2u);
  for (const auto& s : series) EXPECT_EQ(evaluate(s, std::vector<Coeff>{0, 0, 1}), 0u);

  auto P1 = Ring::projective(F, 1, "w");
  EXPECT_TRUE(ring_map_kernel(Ideal(P2, {pm.form}), series, P1).groebner().is_zero_ideal());

  // brute force: rational points off the node, grouped by their image
  std::vector<std::vector<Coeff>> plane{{1, 0, 0}};
  for (Coeff a = 0; a < F.p(); ++a) {
    plane.push_back({a, 1, 0});
    for (Coeff b = 0; b < F.p(); ++b) plane.push_back({a, b, 1});
  }
  std::map<std::pair<Coeff, Coeff>, int> fibers;
  long long total = 0;
  for (const auto& pt : plane) {
    if (evaluate(pm.form, pt) != 0) continue;
    const Coeff u = evaluate(series[0], pt), v = evaluate(series[1], pt);
    if (u == 0 && v == 0) continue;  // the node
    const Coeff s = F.inv(v ? v : u);
    fibers[{F.mul(u, s), F.mul(v, s)}] += 1;
    ++total;
  }
  int largest = 0;
  for (const auto& [t, n] : fibers) largest = std::max(largest, n);
  EXPECT_GT(total, 0);
  EXPECT_EQ(largest, 2);
}

TEST(LinearSystems, CanonicalGenusFour) {
  // quintic with two nodes: the adjoint conics embed it as a sextic in P3
  const PrimeField F(10007);
  auto P2 = Ring::projective(F, 2, "y");
  Rng rng(4);
  auto pm = nodal_model(P2, 5, {0, 1}, 4, rng);
  auto series = adjoint_series(pm, 0);
  ASSERT_EQ(series.size(), 4u);
  auto emb = embed_by_series(pm, series, 0);
  EXPECT_EQ(emb.invariants.degree, (Multidegree{6}));
  EXPECT_EQ(emb.invariants.genus, 4);
  EXPECT_EQ(h0_ideal(emb.ideal, {2}), 1);  // the quadric of a canonical genus-4 curve

  // another basis of the same series gives the same curve up to coordinates
  std::vector<Polynomial> mixed;
  for (int i = 0; i < 4; ++i) mixed.push_back(random_combination(series, rng));
  auto emb2 = embed_by_series(pm, mixed, 0);
  EXPECT_EQ(emb2.invariants, emb.invariants);
  EXPECT_EQ(h0_ideal(emb2.ideal, {2}), 1);
  EXPECT_EQ(h0_ideal(emb2.ideal, {3}), h0_ideal(emb.ideal, {3}));
}

TEST(LinearSystems, MarkedPoints) {
  const PrimeField F(10007);
  auto P2 = Ring::projective(F, 2, "y");
  Rng rng(5);
  auto pm = nodal_model(P2, 5, {0, 1}, 4, rng);
  // two rational points of the curve, from the lines y1 = b*y2
  std::vector<std::vector<Coeff>> found;
  for (Coeff b = 1; b < F.p() && found.size() < 2; ++b) {
    for (Coeff a = 0; a < F.p(); ++a) {
      std::vector<Coeff> pt{a, b, 1};
      if (evaluate(pm.form, pt) == 0) {
        found.push_back(pt);
        break;
      }
    }
  }
  ASSERT_EQ(found.size(), 2u);
  mark_points(pm, found);
  EXPECT_EQ(adjoint_series(pm, 1).size(), 3u);
  EXPECT_EQ(adjoint_series(pm, 2).size(), 2u);
  EXPECT_THROW(adjoint_series(pm, 3), Error);

  auto expect_code = [&](std::vector<Coeff> pt, ErrorCode code) {
    std::vector<std::vector<Coeff>> one{std::move(pt)};
    try {
      mark_points(pm, one);
      FAIL() << "expected throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code({1, 0, 0}, ErrorCode::kSpecialPosition);  // a node
  std::vector<Coeff> off{1, 1, 1};
  while (evaluate(pm.form, off) == 0) ++off[0];
  expect_code(off, ErrorCode::kSpecialPosition);
}

TEST(LinearSystems, NonNodalModelIsRejected) {
  const PrimeField F(10007);
  auto P2 = Ring::projective(F, 2, "y");
  Rng rng(6);
  try {
    make_plane_model(parse_polynomial(P2, "y1^2*y2 - y0^3"), 0, rng);
    FAIL() << "expected throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProjection);
  }
}
