#include <gtest/gtest.h>

#include <random>

#include "liaison/constructions.hpp"
#include "liaison/geometry.hpp"
#include "liaison/sampling.hpp"
#include "test_support.hpp"

using namespace liaison;

namespace {

const PrimeField kF(10007);

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(R, g));
  return Ideal(R, std::move(ps));
}

/// Random invertible linear substitution inside each variable block.
Ideal random_block_change(const Ideal& I, Rng& rng) {
  const RingPtr& R = I.ring();
  const PrimeField& F = R->field();
  std::vector<Polynomial> images(R->nvars(), Polynomial(R));
  for (const auto& blk : R->blocks()) {
    const auto vars = R->block_variables(blk.name);
    for (;;) {
      for (int v : vars) {
        std::vector<Term> t;
        for (int w : vars) t.push_back({R->variable(w), rng.element(F)});
        images[v] = Polynomial::from_terms(R, std::move(t));
      }
      // invertible iff the images are independent linear forms
      std::vector<Polynomial> lin;
      for (int v : vars) lin.push_back(images[v]);
      if (static_cast<long long>(graded_piece_basis(Ideal(R, lin), R->var_degree(vars[0])).size()) ==
          static_cast<long long>(vars.size())) {
        break;
      }
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(g, R, images));
  return Ideal(R, std::move(gens), I.saturated());
}

}  // namespace

TEST(Geometry, PlaneCurveSingularities) {
  auto P2 = Ring::projective(kF, 2, "y");
  Rng rng(1);
  auto conic = ideal_of(P2, {"y0*y2 - y1^2"});
  EXPECT_TRUE(singular_locus(conic, rng).is_unit());
  EXPECT_TRUE(is_smooth_curve(conic, rng));

  auto cubic = ideal_of(P2, {"y1^2*y2 - y0^3 - y0^2*y2"});
  auto sing = singular_locus(cubic, rng);
  EXPECT_EQ(zero_dim_degree(sing), 1);
  EXPECT_TRUE(sing.contains(parse_polynomial(P2, "y0")));
  EXPECT_TRUE(sing.contains(parse_polynomial(P2, "y1")));
  EXPECT_FALSE(is_smooth_curve(cubic, rng));
  SmoothnessOptions full;
  full.full_minors = true;
  EXPECT_FALSE(is_smooth_curve(cubic, rng, full));
  EXPECT_TRUE(is_smooth_curve(conic, rng, full));
}

TEST(Geometry, NodalCubicPlaneModel) {
  auto P2 = Ring::projective(kF, 2, "y");
  Rng rng(2);
  auto report = nodal_plane_model_check(parse_polynomial(P2, "y1^2*y2 - y0^3 - y0^2*y2"), 0, rng);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.length, 1);
  // a cusp is not a node: the singular scheme has length 2
  auto cusp = nodal_plane_model_check(parse_polynomial(P2, "y1^2*y2 - y0^3"), 0, rng);
  EXPECT_FALSE(cusp.pass());
  EXPECT_EQ(cusp.length, 2);
  EXPECT_FALSE(cusp.reduced);
}

TEST(Geometry, SkewFiberLinesMeetNowhere) {
  auto R = Ring::p1xp2(kF);
  Rng rng(3);
  auto a = ideal_of(R, {"x0 - 2*x1", "y0 - y1"});
  auto b = ideal_of(R, {"x0 - 5*x1", "y1 + 3*y2"});
  auto report = transverse_nodal_intersection(a, b, 0, rng);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.length, 0);
  EXPECT_FALSE(nondegeneracy_check(a));
}

TEST(Geometry, TransverseCurvesOnASurface) {
  // two fibers of the same plane meeting in one point
  auto R = Ring::p1xp2(kF);
  Rng rng(4);
  auto a = ideal_of(R, {"x0 - 2*x1", "y0 - y1"});
  auto b = ideal_of(R, {"x0 - 2*x1", "y1 + 3*y2"});
  auto report = transverse_nodal_intersection(a, b, 1, rng);
  EXPECT_TRUE(report.pass());
  // a curve against itself is not zero-dimensional
  EXPECT_FALSE(transverse_nodal_intersection(a, a, 0, rng).pass());
}

TEST(Geometry, RationalCurveChecks) {
  auto R = Ring::p1xp2(kF);
  Rng rng(5);
  auto C = random_ci_rational_curve(R, rng);
  EXPECT_TRUE(is_smooth_curve(C, rng));
  EXPECT_TRUE(nondegeneracy_check(C));
  auto mr = maximal_rank_check(C, 1, 0, 4);
  EXPECT_TRUE(mr.pass);
  std::vector<long long> h0;
  for (const auto& row : mr.rows) h0.push_back(row.h0);
  EXPECT_EQ(h0, (std::vector<long long>{0, 0, 2, 4, 6}));

  auto F = plane_model(C);
  EXPECT_EQ(F.total_degree(), 4);
  auto nodes = nodal_plane_model_check(F, 0, rng);
  EXPECT_TRUE(nodes.pass());
  EXPECT_EQ(nodes.length, 3);
}

TEST(Geometry, GraphProjectsToItsQuartic) {
  auto R = Ring::p1xp2(kF);
  Rng rng(6);
  auto G = random_plane_quartic_graph(R, rng);
  auto F = plane_model(G);
  EXPECT_EQ(F.total_degree(), 4);
  // F(f0, f1, f2) = 0 on the graph: F, moved into P1xP2, lies in the ideal
  EXPECT_TRUE(G.contains(map_by_names(F, R)));
}

TEST(Geometry, SmoothnessInvariantUnderCoordinateChange) {
  auto R = Ring::p1xp2(kF);
  auto P2 = Ring::projective(kF, 2, "y");
  Rng rng(7);
  for (int i = 0; i < 4; ++i) {
    auto C = random_ci_rational_curve(R, rng);
    EXPECT_TRUE(is_smooth_curve(random_block_change(C, rng), rng));
  }
  auto cubic = ideal_of(P2, {"y1^2*y2 - y0^3 - y0^2*y2"});
  for (int i = 0; i < 4; ++i) EXPECT_FALSE(is_smooth_curve(random_block_change(cubic, rng), rng));
}

TEST(Geometry, EveryFiberCollinearControl) {
  // a (1,1)-form restricts to a line in every fiber
  const PrimeField F(1009);
  auto R = Ring::p1xp2(F);
  Rng rng(8);
  std::vector<Polynomial> forms = {random_form(R, {1, 1}, rng), random_form(R, {1, 3}, rng)};
  auto C = saturate_irrelevant(Ideal(R, forms));
  auto inv = curve_invariants(C);
  ASSERT_EQ(inv.degree, (Multidegree{3, 4}));
  auto scan = collinear_fiber_scan(C, 1, 4);
  EXPECT_EQ(scan.scanned, 1010);
  EXPECT_EQ(scan.collinear.size(), 1010u);
  EXPECT_TRUE(scan.degenerate.empty());
}

TEST(Geometry, ScanFindsTheOneCollinearFiber) {
  // two constant sections and the graph of x -> (x0 : x1 : x0 - 3*x1): the three
  // points of a fiber are collinear only where the moving one reaches y2 = 0
  auto R = Ring::p1xp2(kF);
  Rng rng(9);
  std::vector<Ideal> parts = {ideal_of(R, {"y1", "y2"}), ideal_of(R, {"y0", "y2"}),
                              ideal_of(R, {"x1*y0 - x0*y1", "x0*y0 - 3*x1*y0 - x0*y2", "x0*y1 - 3*x1*y1 - x1*y2"})};
  auto C = union_ideal(R, parts);
  ASSERT_EQ(curve_invariants(C).degree, (Multidegree{3, 1}));
  auto scan = collinear_fiber_scan(C, 1, 2);
  ASSERT_EQ(scan.collinear.size(), 1u);
  EXPECT_EQ(scan.collinear[0].lambda, (std::pair<Coeff, Coeff>{3, 1}));
  EXPECT_TRUE(scan.degenerate.empty());
  EXPECT_EQ(fiber_is_collinear(C, 3, 1), std::optional<bool>(true));
  EXPECT_EQ(fiber_is_collinear(C, 1, 0), std::optional<bool>(false));
}

TEST(Geometry, ExtensionScanFindsAQuadraticPoint) {
  // moving section (x0^2 : x0*x1 : x0^2 + x1^2); over F_31 the collinear fiber sits
  // at the closed point s^2 + 1 = 0 and nowhere rational
  const PrimeField F(31);
  auto R = Ring::p1xp2(F);
  std::vector<Ideal> parts = {ideal_of(R, {"y1", "y2"}), ideal_of(R, {"y0", "y2"}),
                              ideal_of(R, {"x0*x1*y0 - x0^2*y1", "x0^2*y0 + x1^2*y0 - x0^2*y2",
                                            "x0^2*y1 + x1^2*y1 - x0*x1*y2"})};
  auto C = union_ideal(R, parts);
  ASSERT_EQ(curve_invariants(C).degree, (Multidegree{3, 2}));
  EXPECT_TRUE(collinear_fiber_scan(C, 1).collinear.empty());
  auto scan = collinear_fiber_scan(C, 2);
  ASSERT_EQ(scan.collinear.size(), 1u);
  EXPECT_EQ(scan.collinear[0].degree(), 2);
  EXPECT_EQ(scan.collinear[0].minimal_polynomial, (UPoly{1, 0, 1}));
  EXPECT_TRUE(scan.degenerate.empty());
}
