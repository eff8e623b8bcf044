#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liaison/ideal_ops.hpp"
#include "liaison/invariants.hpp"
#include "liaison/linalg.hpp"

namespace liaison {

/// Zero-dimensional, reduced, of the expected length: a set of ordinary
/// double points (or of transverse intersection points).
struct NodalLocusReport {
  std::optional<Ideal> scheme;
  bool zero_dimensional = false;
  long long length = 0;
  bool reduced = false;
  long long expected = 0;
  ReducednessReport reducedness;

  bool pass() const { return zero_dimensional && reduced && length == expected; }
};

struct SmoothnessOptions {
  /// Use every maximal minor of the Jacobian instead of random aggregates.
  bool full_minors = false;
  /// Cap on aggregated minors added before giving up on emptiness.
  int max_aggregates = 40;
};

/// I plus Jacobian minors of codimension size, saturated. Minors enter as
/// random aggregates det(J(h_1..h_c) * B) with h_i random elements of graded
/// pieces of I, until the locus is empty or stops shrinking.
Ideal singular_locus(const Ideal& I, Rng& rng, const SmoothnessOptions& opts = {});
/// Emptiness of the singular locus. A true answer is a proof.
bool is_smooth_curve(const Ideal& I, Rng& rng, const SmoothnessOptions& opts = {});

/// Scheme C ∩ C' checked for dimension 0, reducedness and the expected length.
/// Common components are reported, not thrown.
NodalLocusReport transverse_nodal_intersection(const Ideal& a, const Ideal& b, long long expected, Rng& rng);

/// Generator of the x-eliminated ideal of a P1xP2 curve; lives in a P2 ring with
/// variables y0,y1,y2. Throws kProjection unless principal of degree d2.
Polynomial plane_model(const Ideal& I);

/// Singular scheme of a plane curve: zero-dimensional, reduced, of length
/// (d-1)(d-2)/2 - g. On success the scheme is the ideal of the nodes.
NodalLocusReport nodal_plane_model_check(const Polynomial& F, long long genus, Rng& rng);

struct MaxRankRow {
  Multidegree degree;
  long long h0 = 0;
  long long expected = 0;
};
struct MaxRankReport {
  std::vector<MaxRankRow> rows;
  bool pass = true;
};
/// h0(I(m)) against max(0, dim R_m - chi(O_C(m))). Throws kSpeciality when a
/// twist has degree below 2 p_a - 1.
MaxRankReport maximal_rank_check(const Ideal& I, std::span<const Multidegree> degrees);
/// The bidegrees (a, b) for a in [a_first, a_last].
MaxRankReport maximal_rank_check(const Ideal& I, int b, int a_first, int a_last);

/// No (1,0)- and no (0,1)-forms on P1xP2; no linear forms on Pn.
bool nondegeneracy_check(const Ideal& I);

struct ClosedPoint {
  /// (l0:l1) for rational points; empty otherwise.
  std::optional<std::pair<Coeff, Coeff>> lambda;
  /// Monic minimal polynomial in s = x0/x1 for points of degree > 1.
  UPoly minimal_polynomial;
  int degree() const { return lambda ? 1 : static_cast<int>(minimal_polynomial.size()) - 1; }
  friend bool operator==(const ClosedPoint&, const ClosedPoint&) = default;
};

struct FiberScanReport {
  /// Fibers whose points are collinear (nonzero linear forms in the fiber ideal).
  std::vector<ClosedPoint> collinear;
  /// Fibers whose length differs from d1.
  std::vector<ClosedPoint> degenerate;
  long long scanned = 0;
};

/// Scans the fibers of a P1xP2 curve over P1(F_p) (and over points of degree
/// 2..extension_cap, which enumerates all irreducible polynomials and is only
/// practical for small p).
FiberScanReport collinear_fiber_scan(const Ideal& I, int extension_cap = 1, int jobs = 1);

/// Collinearity test for the fiber over one rational point.
std::optional<bool> fiber_is_collinear(const Ideal& I, Coeff l0, Coeff l1);

}  // namespace liaison
