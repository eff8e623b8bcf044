#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Degree data of a curve: `degree` is (d) in Pn and (d1,d2) in P1xP2.
struct CurveInvariants {
  Ambient ambient = Ambient::kPn;
  /// r for Pr; 3 for P1xP2.
  int ambient_dimension = 0;
  int dimension = 1;
  Multidegree degree;
  long long genus = 0;
  /// h0(I(m)) at the multidegrees that were queried.
  std::map<Multidegree, long long> h0;

  friend bool operator==(const CurveInvariants& a, const CurveInvariants& b) {
    return a.ambient == b.ambient && a.ambient_dimension == b.ambient_dimension && a.dimension == b.dimension &&
           a.degree == b.degree && a.genus == b.genus;
  }
};

/// A planned link: the complete intersection's hypersurface degrees, the input
/// curve and what the linkage formulas predict for the residual.
struct LinkStep {
  std::vector<Multidegree> degrees;
  CurveInvariants input;
  CurveInvariants predicted;
  long long predicted_length = 0;
  std::optional<CurveInvariants> computed;
  std::optional<long long> computed_length;
};

/// Number of standard monomials of multidegree m for I's Groebner basis.
/// Entries above 40 are rejected.
long long hilbert_function(const Ideal& I, const Multidegree& m);
/// dim R_m - hilbert_function(I, m); I should be saturated.
long long h0_ideal(const Ideal& I, const Multidegree& m);

/// Dimension of the subscheme: degree of the Hilbert polynomial, -1 if empty.
int scheme_dimension(const Ideal& I);

/// Reads degree and arithmetic genus off the exact Hilbert polynomial and
/// confirms them against direct counts on a 3x3 grid (3 consecutive degrees
/// in Pn) past the stabilization point.
CurveInvariants curve_invariants(const Ideal& I);

CurveInvariants predict_link_p1p2(const CurveInvariants& c, const Multidegree& y1, const Multidegree& y2);
/// (d', g') for a curve of degree d and genus g in Pr linked by hypersurfaces
/// of the given degrees (r - 1 of them).
std::pair<int, long long> predict_link_pn(int r, int d, long long g, std::span<const int> degrees);
LinkStep plan_link(const CurveInvariants& c, std::vector<Multidegree> degrees);

/// deg(omega_X(sum Y_i)|_C) - (2 p_a(C) - 2), the length of C ∩ C' read off C alone.
long long linked_intersection_length(const CurveInvariants& c, std::span<const Multidegree> degrees);

/// Length of C ∩ C' from deg(omega_X(sum Y_i)|_C) - (2 p_a(C) - 2), evaluated on
/// both curves; throws kInconsistentLink if the two disagree.
long long predict_intersection_length(const CurveInvariants& c, const CurveInvariants& c2,
                                      std::span<const Multidegree> degrees);

/// rho = g - (r+1)(g + r - d). Named fields because the literature uses
/// both (g,r,d) and (g,d,r) orders.
struct BrillNoether {
  int genus;
  int r;
  int degree;
};
int brill_noether_rho(const BrillNoether& p);

/// Residual series K - D of a g^r_d on a genus g curve: (2g - 2 - d, r - d + g - 1).
std::pair<int, int> serre_residual(int g, int d, int r);

}  // namespace liaison
