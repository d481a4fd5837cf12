#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fredholm {

using Complex = std::complex<double>;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* row(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }

  /// Largest |entry|; zero for an empty matrix.
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Determinant of a k x k row-major matrix stored in `m` by Gaussian
/// elimination with partial pivoting. Overwrites `m`. Intended for the small
/// minors of the Fredholm series (k <= 8).
Complex small_determinant(Complex* m, int k);

}  // namespace fredholm
