#include "liaison/linear_systems.hpp"

#include "liaison/constructions.hpp"

namespace liaison {

PlaneModel make_plane_model(const Polynomial& F, long long genus, Rng& rng) {
  NodalLocusReport rep = nodal_plane_model_check(F, genus, rng);
  if (!rep.pass()) {
    throw Error(ErrorCode::kProjection, "plane model is not nodal with " + std::to_string(rep.expected) + " nodes");
  }
  return {F, *rep.scheme, genus, {}};
}

void mark_points(PlaneModel& pm, std::span<const std::vector<Coeff>> points) {
  for (const auto& p : points) {
    if (p.size() != 3) throw Error(ErrorCode::kInvalidArgument, "plane points have three coordinates");
    if (evaluate(pm.form, p) != 0) throw Error(ErrorCode::kSpecialPosition, "marked point is not on the curve");
    bool on_node = true;
    for (const auto& g : pm.nodes.generators()) on_node = on_node && evaluate(g, p) == 0;
    if (on_node) throw Error(ErrorCode::kSpecialPosition, "marked point is a node");
    pm.marked.push_back(p);
  }
}

std::vector<Polynomial> adjoint_series(const PlaneModel& pm, int k) {
  if (k < 0 || k > static_cast<int>(pm.marked.size())) throw Error(ErrorCode::kInvalidArgument, "not enough marked points");
  const RingPtr& R = pm.form.ring();
  std::vector<Ideal> parts{pm.nodes};
  for (int i = 0; i < k; ++i) parts.push_back(point_ideal(R, pm.marked[i]));
  Ideal A = parts.size() == 1 ? pm.nodes : union_ideal(R, parts);
  auto basis = graded_piece_basis(A, {pm.form.total_degree() - 3});
  if (static_cast<long long>(basis.size()) != pm.genus - k) {
    throw Error(ErrorCode::kSpecialPosition, "adjoint series has dimension " + std::to_string(basis.size()) +
                                                 ", expected " + std::to_string(pm.genus - k));
  }
  return basis;
}

Embedding embed_by_series(const PlaneModel& pm, std::span<const Polynomial> forms, int k) {
  if (forms.size() < 4) throw Error(ErrorCode::kInvalidArgument, "a space curve needs at least four forms");
  const RingPtr& R = pm.form.ring();
  RingPtr target = Ring::projective(R->field(), static_cast<int>(forms.size()) - 1, "w");
  Ideal image = ring_map_kernel(Ideal(R, {pm.form}), forms, target).marked_saturated();
  if (scheme_dimension(image) != 1) throw Error(ErrorCode::kNotEmbedding, "image is not a curve");
  CurveInvariants inv = curve_invariants(image);
  const long long degree = 2 * pm.genus - 2 - k;
  if (inv.genus != pm.genus || inv.degree.at(0) != degree) {
    throw Error(ErrorCode::kNotEmbedding, "image has degree " + std::to_string(inv.degree.at(0)) + " and p_a " +
                                              std::to_string(inv.genus) + ", expected " + std::to_string(degree) +
                                              " and " + std::to_string(pm.genus));
  }
  return {std::move(image), std::move(inv)};
}

}  // namespace liaison
