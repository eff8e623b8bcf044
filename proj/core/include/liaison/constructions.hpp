#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liaison/ideal_ops.hpp"
#include "liaison/invariants.hpp"
#include "liaison/random.hpp"

namespace liaison {

/// One rejected sample: which operation, which attempt, and why.
struct ResampleEvent {
  std::string operation;
  int attempt = 0;
  std::string reason;
};
using ResampleLog = std::vector<ResampleEvent>;

inline constexpr int kMaxResamples = 20;

struct FiberLine {
  Ideal ideal;
  /// (l0:l1), normalized to (s:1) or (1:0).
  std::pair<Coeff, Coeff> lambda;
};
/// (l1*x0 - l0*x1, a random linear form in y): a line in the fiber over (l0:l1).
FiberLine random_fiber_line(const RingPtr& ring, Rng& rng);

/// Two random (2,1)-forms, saturated, resampled until the result is a smooth
/// curve of bidegree (1,4) and genus 0.
Ideal random_ci_rational_curve(const RingPtr& ring, Rng& rng, ResampleLog* log = nullptr);

/// Graph of x -> (f0:f1:f2) for random binary quartics f_i without a common
/// root: the 2x2 minors of [y; f], saturated.
Ideal random_plane_quartic_graph(const RingPtr& ring, Rng& rng, ResampleLog* log = nullptr);

/// Saturated intersection; the unit ideal for an empty list.
Ideal union_ideal(const RingPtr& ring, std::span<const Ideal> ideals);

struct PointSet {
  /// Homogeneous coordinates, variables in ring order.
  std::vector<std::vector<Coeff>> points;
  Ideal ideal;
};
/// Ideal of one point given by coordinates in ring variable order.
Ideal point_ideal(const RingPtr& ring, std::span<const Coeff> point);
/// n random points of the ambient space.
PointSet random_points(const RingPtr& ring, int n, Rng& rng);
/// n distinct rational points on a P1xP2 curve, at most one per fiber; throws
/// kPointScarcity after 200 fibers.
PointSet random_points_on_curve(const Ideal& I, int n, Rng& rng);

/// One random form per entry of `degrees`, each a combination of a basis of
/// the graded piece of I, resampled until they cut out a scheme of the
/// complete-intersection dimension.
std::vector<Polynomial> random_hypersurfaces_containing(const Ideal& I, std::span<const Multidegree> degrees, Rng& rng,
                                                        ResampleLog* log = nullptr);

struct LinkResult {
  /// Saturated ideal of the complete intersection Y.
  Ideal complete_intersection;
  /// Saturated residual I_Y : I_C.
  Ideal residual;
  LinkStep step;
  /// True when the residual came from a single quotient by a general element
  /// of I_C and was certified by K * I_C ⊆ I_Y.
  bool fast_path = false;
};

/// Residual of C in the complete intersection cut out by `forms`. Invariants
/// of the residual are attached to the step; disagreement with the prediction
/// is left for the caller to report.
LinkResult link(const Ideal& curve, std::span<const Polynomial> forms, Rng& rng);

/// (Y : C)^sat for saturated Y ⊆ C. Tries Y : h for a general h in C first and
/// keeps it when K * C ⊆ Y; otherwise computes the full quotient.
Ideal residual_ideal(const Ideal& Y, const Ideal& C, Rng& rng, bool* fast_path = nullptr);

}  // namespace liaison
