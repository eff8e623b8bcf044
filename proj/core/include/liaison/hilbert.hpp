#pragma once

#include <map>
#include <span>
#include <vector>

#include "liaison/ring.hpp"

namespace liaison {

/// Hilbert polynomial of R/M in the binomial basis: P(m) = sum e[i] * prod_j C(m_j, i_j),
/// where i ranges over the box prod_j [0, n_j) (n_j = number of variables of grading
/// coordinate j).
class HilbertPolynomial {
 public:
  HilbertPolynomial(std::vector<int> extents, std::vector<long long> coeffs)
      : extents_(std::move(extents)), coeffs_(std::move(coeffs)) {}

  long long operator()(const Multidegree& m) const;
  /// Coefficient of prod_j C(m_j, i_j).
  long long coefficient(const std::vector<int>& i) const;
  /// Total degree; -1 for the zero polynomial. Equals the dimension of the scheme.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<int> extents_;
  std::vector<long long> coeffs_;
};

/// Multigraded Hilbert series numerator of R/M for a monomial ideal M:
/// HS(t) = K(t) / prod_v (1 - t^deg(v)). The ring must be standard multigraded
/// (every variable degree a unit vector).
class HilbertNumerator {
 public:
  HilbertNumerator(const Ring& ring, std::span<const Monomial> generators);

  const std::map<Multidegree, long long>& coefficients() const noexcept { return k_; }
  /// Exact Hilbert function value.
  long long function(const Multidegree& m) const;
  HilbertPolynomial polynomial() const;
  /// Componentwise bound past which the Hilbert function equals the polynomial.
  Multidegree threshold() const;

 private:
  long long polynomial_value(const Multidegree& m) const;

  std::vector<int> per_coord_;
  std::map<Multidegree, long long> k_;
};

}  // namespace liaison
