#include "liaison/linalg.hpp"

#include <utility>

namespace liaison {

std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& F) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(r, k), m.at(piv, k));
    }
    const Coeff inv = F.inv(m.at(r, c));
    auto pr = m.row(r);
    for (std::size_t k = c; k < m.cols(); ++k) pr[k] = F.mul(pr[k], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Coeff f = m.at(i, c);
      if (f == 0) continue;
      auto ri = m.row(i);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (pr[k]) ri[k] = F.sub_mul(ri[k], f, pr[k]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& F) { return row_reduce(m, F).size(); }

std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& F) {
  auto pivots = row_reduce(m, F);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

UPoly upoly_derivative(const UPoly& f, const PrimeField& F) {
  UPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], F.from_int(static_cast<std::int64_t>(i))));
  trim(d);
  return d;
}

UPoly upoly_rem(UPoly a, const UPoly& b, const PrimeField& F) {
  trim(a);
  if (b.empty()) throw Error(ErrorCode::kDivisionByZero, "polynomial remainder by zero");
  const Coeff inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const Coeff q = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub_mul(a[shift + i], q, b[i]);
    trim(a);
  }
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = upoly_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Coeff inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

bool upoly_squarefree(const UPoly& f, const PrimeField& F) {
  UPoly d = upoly_derivative(f, F);
  if (d.empty()) return f.size() <= 1;  // constant, or a p-th power
  return upoly_gcd(f, d, F).size() == 1;
}

Coeff upoly_eval(const UPoly& f, Coeff x, const PrimeField& F) {
  Coeff acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

}  // namespace liaison
