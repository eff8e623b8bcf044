#include "liaison/invariants.hpp"

#include <algorithm>

namespace liaison {

namespace {

constexpr int kEnumerationCap = 40;

void check_cap(const Multidegree& m) {
  for (int x : m) {
    if (x > kEnumerationCap) throw Error(ErrorCode::kInvalidArgument, "degree above enumeration cap");
  }
}

long long half(long long twice) {
  if (twice % 2) throw Error(ErrorCode::kInfeasibleLink, "linkage genus formula is not integral");
  return twice / 2;
}

}  // namespace

long long hilbert_function(const Ideal& I, const Multidegree& m) {
  check_cap(m);
  const auto lms = I.groebner().leading_monomials();
  long long count = 0;
  for (const auto& mono : monomials_of_multidegree(*I.ring(), m)) {
    bool standard = true;
    for (const auto& l : lms) {
      if (Ring::divides(l, mono)) {
        standard = false;
        break;
      }
    }
    count += standard;
  }
  return count;
}

long long h0_ideal(const Ideal& I, const Multidegree& m) {
  return count_monomials(*I.ring(), m) - hilbert_function(I, m);
}

int scheme_dimension(const Ideal& I) { return I.hilbert().polynomial().degree(); }

CurveInvariants curve_invariants(const Ideal& I) {
  const Ring& R = *I.ring();
  if (R.ambient() == Ambient::kElim) throw Error(ErrorCode::kInvalidArgument, "curve invariants need P1xP2 or Pn");
  const HilbertNumerator hn = I.hilbert();
  const HilbertPolynomial hp = hn.polynomial();
  const int dim = hp.degree();
  if (dim != 1) throw Error(ErrorCode::kDimension, "expected a curve, got dimension " + std::to_string(dim));

  CurveInvariants inv;
  inv.ambient = R.ambient();
  inv.ambient_dimension = R.ambient() == Ambient::kP1xP2 ? 3 : R.projective_dimension();
  const int rank = R.grading_rank();
  std::vector<int> idx(rank, 0);
  const long long constant = hp.coefficient(idx);
  for (int j = 0; j < rank; ++j) {
    idx.assign(rank, 0);
    idx[j] = 1;
    inv.degree.push_back(static_cast<int>(hp.coefficient(idx)));
  }
  inv.genus = 1 - constant;

  // Direct counts past stabilization must follow the linear polynomial.
  Multidegree start = hn.threshold();
  int gen_max = 0;
  for (const auto& g : I.generators()) {
    for (int x : *g.multidegree()) gen_max = std::max(gen_max, x);
  }
  for (auto& s : start) s = std::max(s, std::min(gen_max + 2, kEnumerationCap - 2));
  for (int s : start) {
    if (s + 2 > kEnumerationCap) throw Error(ErrorCode::kRegularity, "Hilbert function does not stabilize below the cap");
  }
  auto linear = [&](const Multidegree& m) {
    long long v = constant;
    for (int j = 0; j < rank; ++j) v += static_cast<long long>(inv.degree[j]) * m[j];
    return v;
  };
  std::vector<Multidegree> grid;
  if (rank == 1) {
    for (int k = 0; k < 3; ++k) grid.push_back({start[0] + k});
  } else {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) grid.push_back({start[0] + a, start[1] + b});
    }
  }
  for (const auto& m : grid) {
    if (hilbert_function(I, m) != linear(m)) throw Error(ErrorCode::kRegularity, "Hilbert function not linear on the window");
  }
  return inv;
}

CurveInvariants predict_link_p1p2(const CurveInvariants& c, const Multidegree& y1, const Multidegree& y2) {
  if (c.ambient != Ambient::kP1xP2 || c.degree.size() != 2) throw Error(ErrorCode::kInvalidArgument, "bigraded curve expected");
  const long long a1 = y1.at(0), b1 = y1.at(1), a2 = y2.at(0), b2 = y2.at(1);
  const long long d1 = c.degree[0], d2 = c.degree[1];
  const long long e1 = b1 * b2 - d1;
  const long long e2 = a1 * b2 + a2 * b1 - d2;
  if (e1 < 0 || e2 < 0) throw Error(ErrorCode::kInfeasibleLink, "negative residual bidegree");
  CurveInvariants out;
  out.ambient = Ambient::kP1xP2;
  out.ambient_dimension = 3;
  out.degree = {static_cast<int>(e1), static_cast<int>(e2)};
  out.genus = c.genus - half((a1 + a2 - 2) * (d1 - e1) + (b1 + b2 - 3) * (d2 - e2));
  return out;
}

std::pair<int, long long> predict_link_pn(int r, int d, long long g, std::span<const int> degrees) {
  if (r < 3 || static_cast<int>(degrees.size()) != r - 1) {
    throw Error(ErrorCode::kInvalidArgument, "need r - 1 hypersurfaces in Pr, r >= 3");
  }
  long long prod = 1, sum = 0;
  for (int x : degrees) {
    prod *= x;
    sum += x;
  }
  const long long d2 = prod - d;
  if (d2 <= 0) throw Error(ErrorCode::kInfeasibleLink, "non-positive residual degree");
  const long long g2 = g - half((sum - (r + 1)) * (d - d2));
  return {static_cast<int>(d2), g2};
}

LinkStep plan_link(const CurveInvariants& c, std::vector<Multidegree> degrees) {
  LinkStep step;
  step.input = c;
  if (c.ambient == Ambient::kP1xP2) {
    if (degrees.size() != 2) throw Error(ErrorCode::kInvalidArgument, "P1xP2 links use two hypersurfaces");
    step.predicted = predict_link_p1p2(c, degrees[0], degrees[1]);
  } else {
    std::vector<int> ds;
    for (const auto& m : degrees) ds.push_back(m.at(0));
    auto [d2, g2] = predict_link_pn(c.ambient_dimension, c.degree.at(0), c.genus, ds);
    step.predicted.ambient = c.ambient;
    step.predicted.ambient_dimension = c.ambient_dimension;
    step.predicted.degree = {d2};
    step.predicted.genus = g2;
  }
  step.degrees = std::move(degrees);
  step.predicted_length = predict_intersection_length(c, step.predicted, step.degrees);
  return step;
}

long long linked_intersection_length(const CurveInvariants& c, std::span<const Multidegree> degrees) {
  // omega_X(sum Y_i) = O(sum a - 2, sum b - 3) on P1xP2 and O(sum d - r - 1) on Pr.
  Multidegree twist(c.degree.size(), 0);
  for (const auto& m : degrees) {
    for (std::size_t j = 0; j < twist.size(); ++j) twist[j] += m.at(j);
  }
  if (c.ambient == Ambient::kP1xP2) {
    twist[0] -= 2;
    twist[1] -= 3;
  } else {
    twist[0] -= c.ambient_dimension + 1;
  }
  long long deg = 0;
  for (std::size_t j = 0; j < twist.size(); ++j) deg += static_cast<long long>(twist[j]) * c.degree.at(j);
  return deg - (2 * c.genus - 2);
}

long long predict_intersection_length(const CurveInvariants& c, const CurveInvariants& c2,
                                      std::span<const Multidegree> degrees) {
  const long long l1 = linked_intersection_length(c, degrees), l2 = linked_intersection_length(c2, degrees);
  if (l1 != l2) {
    throw Error(ErrorCode::kInconsistentLink,
                "intersection length " + std::to_string(l1) + " from C but " + std::to_string(l2) + " from C'");
  }
  return l1;
}

int brill_noether_rho(const BrillNoether& p) { return p.genus - (p.r + 1) * (p.genus + p.r - p.degree); }

std::pair<int, int> serre_residual(int g, int d, int r) { return {2 * g - 2 - d, r - d + g - 1}; }

}  // namespace liaison
