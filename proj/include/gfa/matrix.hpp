#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gfa/scalar.hpp"

namespace gfa {

/// Row-major dense matrix over a ScalarDomain.
class DenseMatrix {
 public:
  DenseMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(ScalarDomain domain, std::size_t n);

  const ScalarDomain& domain() const { return domain_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix operator+(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator-() const;
  DenseMatrix scaled(const Scalar& s) const;
  DenseMatrix transpose() const;

  /// Matrix-vector product.
  std::vector<Scalar> apply(std::span<const Scalar> v) const;
  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Scalar trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  bool operator==(const DenseMatrix& o) const;

 private:
  void require_shape(const DenseMatrix& o, const char* op) const;

  ScalarDomain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Maximum entrywise magnitude of a - b (same shape and domain required).
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// Exact for Z_n (integer Bareiss on lifted residues, then reduced) and rationals
/// (Gaussian elimination); partial-pivot LU for floating kinds.
Scalar determinant(const DenseMatrix& m);

/// Basis of {x : m x = 0}. Exact row reduction over Q and Z_p; SVD with rank
/// threshold rel_tol * sigma_max for floating kinds. Composite moduli are rejected.
std::vector<std::vector<Scalar>> null_space(const DenseMatrix& m, double rel_tol = 1e-10);

/// Sum of principal 2x2 minors (second elementary symmetric function of the eigenvalues).
Scalar second_symmetric_function(const DenseMatrix& m);

Eigen::MatrixXd to_eigen_real(const DenseMatrix& m);
Eigen::MatrixXcd to_eigen_complex(const DenseMatrix& m);
DenseMatrix from_eigen_real(const Eigen::MatrixXd& m);

}  // namespace gfa
