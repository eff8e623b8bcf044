#pragma once

#include <span>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_, cols_;
  std::vector<Coeff> data_;
};

/// In-place reduced row echelon form; returns pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, const PrimeField& F);

std::size_t rank(Matrix m, const PrimeField& F);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Coeff>> kernel(Matrix m, const PrimeField& F);

/// Univariate polynomials, coefficient i is the x^i coefficient, trimmed.
using UPoly = std::vector<Coeff>;

void trim(UPoly& f);
UPoly upoly_derivative(const UPoly& f, const PrimeField& F);
UPoly upoly_rem(UPoly a, const UPoly& b, const PrimeField& F);
UPoly upoly_gcd(UPoly a, UPoly b, const PrimeField& F);
bool upoly_squarefree(const UPoly& f, const PrimeField& F);
Coeff upoly_eval(const UPoly& f, Coeff x, const PrimeField& F);

}  // namespace liaison
