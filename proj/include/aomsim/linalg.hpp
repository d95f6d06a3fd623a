#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace aomsim {

using Complex = std::complex<double>;

// Small dense row-major complex matrix. Dimensions in this library stay in
// the tens, so no blocking or expression templates.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  CMatrix adjoint() const;
  Complex trace() const;

  // Largest |entry|.
  double max_abs() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, const CMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// max |m(i,j) - conj(m(j,i))|; infinity for non-square input.
double hermiticity_defect(const CMatrix& m);

// Eigenvalues of a Hermitian matrix, descending. Cyclic complex Jacobi
// rotations until the off-diagonal Frobenius mass drops to 1e-14.
// Throws ErrorKind::symmetry when the input is not Hermitian within 1e-10,
// ErrorKind::dimension when it is larger than 64x64.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace aomsim
