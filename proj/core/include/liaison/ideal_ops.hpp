#pragma once

#include <span>
#include <string>
#include <vector>

#include "liaison/ideal.hpp"
#include "liaison/random.hpp"

namespace liaison {

Ideal sum(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, std::span<const Polynomial> extra);

/// I ∩ J by eliminating a tag variable t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal intersect(std::span<const Ideal> ideals);

/// I : (f).
Ideal quotient(const Ideal& I, const Polynomial& f);
/// I : J, intersected over the generators of J. J must be nonzero.
Ideal quotient(const Ideal& I, const Ideal& J);

/// I : f^inf. Variables go through a single reverse-lex basis; other forms
/// iterate quotients (at most 50 rounds).
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal saturate(const Ideal& I, const Ideal& J);
/// Saturation by the irrelevant ideal: (x0,x1) then (y0,y1,y2) on P1xP2,
/// the maximal ideal on Pn. The result is flagged saturated.
Ideal saturate_irrelevant(const Ideal& I);

/// Eliminates the named blocks; the result lives in the ring of the remaining
/// blocks (grading restricted to the coordinates they use).
Ideal eliminate(const Ideal& I, std::span<const std::string> blocks);
RingPtr subring(const Ring& R, std::span<const std::string> keep);

/// Kernel of target -> source/I, w_i -> forms[i]. The target must be a Pn
/// ring with forms.size() variables whose names differ from the source's.
Ideal ring_map_kernel(const Ideal& source, std::span<const Polynomial> forms, const RingPtr& target);

/// Basis of the degree-m piece of I, in echelon form with distinct leading
/// monomials.
std::vector<Polynomial> graded_piece_basis(const Ideal& I, const Multidegree& m);

/// Length of a zero-dimensional (or empty) scheme: the constant Hilbert
/// polynomial. Throws kDimension otherwise.
long long zero_dim_degree(const Ideal& I);

struct ReducednessReport {
  bool reduced = false;
  long long length = 0;
  /// Affine chart used (one invertible matrix per block, row-major) and the
  /// linear forms tried, so the verdict can be replayed.
  std::vector<std::vector<Coeff>> chart;
  std::vector<std::vector<Coeff>> forms;
  std::vector<int> minpoly_degrees;
};

/// Reducedness of a zero-dimensional scheme through the minimal polynomial of
/// a random linear form acting on the coordinate ring of an affine chart that
/// contains every point. A squarefree minimal polynomial of full degree proves
/// reducedness; a non-squarefree one disproves it; anything else is retried
/// with a fresh form, up to three.
ReducednessReport reduced_zero_dim(const Ideal& I, Rng& rng);
bool is_reduced_zero_dim(const Ideal& I, Rng& rng);

}  // namespace liaison
