#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/ring.hpp"

namespace liaison {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial in canonical form: nonzero coefficients, monomials
/// strictly decreasing in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, int var);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Caller guarantees canonical form.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  bool is_constant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Polynomial pow(int e) const;
  Polynomial monic() const;

  /// nullopt for the zero polynomial; throws kHomogeneity if terms disagree.
  std::optional<Multidegree> multidegree() const;
  bool is_homogeneous() const;
  int total_degree() const;

  /// Symmetric residues read best; files use least residues so that every
  /// coefficient is written exactly as stored.
  enum class Residues { kSymmetric, kLeast };
  std::string to_string(Residues style = Residues::kSymmetric) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Parses `-3*x0^2*y1 + 5*x1 - y2`; integers are reduced mod p.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Moves f into `target`, matching variables by name. Variables of f absent
/// from target must not occur in f.
Polynomial map_by_names(const Polynomial& f, const RingPtr& target);

/// Ring homomorphism: variable i of f's ring goes to images[i] (in target).
Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images);

/// Restricts a P1xP2 form to the fiber over (l0:l1), landing in the plane ring
/// (a Pn(2) ring whose variables are named y0,y1,y2).
Polynomial specialize_fiber(const Polynomial& f, Coeff l0, Coeff l1, const RingPtr& plane);

/// f / g when g divides f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f, int var);

Coeff evaluate(const Polynomial& f, std::span<const Coeff> point);

/// All monomials of the given multidegree, in decreasing order. Variables of
/// multidegree zero are held at exponent zero.
std::vector<Monomial> monomials_of_multidegree(const Ring& ring, const Multidegree& md);

/// Number of monomials of a multidegree in a standard multigraded ring.
long long count_monomials(const Ring& ring, const Multidegree& md);

}  // namespace liaison
