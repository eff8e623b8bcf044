#pragma once

#include <span>
#include <vector>

#include "liaison/geometry.hpp"

namespace liaison {

/// Nodal plane curve with its node scheme and marked smooth points.
struct PlaneModel {
  Polynomial form;
  Ideal nodes;
  /// (d-1)(d-2)/2 - length(nodes).
  long long genus = 0;
  std::vector<std::vector<Coeff>> marked;
};

/// Throws kProjection unless F is nodal with exactly the expected number of
/// nodes for the given geometric genus.
PlaneModel make_plane_model(const Polynomial& F, long long genus, Rng& rng);

/// Appends points; each must lie on F and off the nodes (kSpecialPosition).
void mark_points(PlaneModel& pm, std::span<const std::vector<Coeff>> points);

/// Basis of the adjoints of degree d-3 through the nodes and the first k
/// marked points: the series |K - P_k|. Throws kSpecialPosition unless its
/// dimension is g - k.
std::vector<Polynomial> adjoint_series(const PlaneModel& pm, int k);

struct Embedding {
  Ideal ideal;
  CurveInvariants invariants;
};
/// Image of the plane curve under the given forms, in P^{n-1} with variables
/// w0..w{n-1}. The image is smooth and the map an embedding when p_a(image) = g
/// and the degree is 2g - 2 - k; anything else is kNotEmbedding.
Embedding embed_by_series(const PlaneModel& pm, std::span<const Polynomial> forms, int k);

}  // namespace liaison
