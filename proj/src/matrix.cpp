#include "gfa/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "gfa/errors.hpp"

namespace gfa {

DenseMatrix::DenseMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), rows_(rows), cols_(cols), data_(rows * cols, domain.zero()) {}

DenseMatrix DenseMatrix::identity(ScalarDomain domain, std::size_t n) {
  DenseMatrix m(domain, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = domain.one();
  return m;
}

void DenseMatrix::require_shape(const DenseMatrix& o, const char* op) const {
  if (!(domain_ == o.domain_)) throw DomainError(std::string("matrix domain mismatch in ") + op);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractError(std::string("matrix shape mismatch in ") + op);
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
  require_shape(o, "+");
  DenseMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
  require_shape(o, "-");
  DenseMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

DenseMatrix DenseMatrix::operator-() const {
  DenseMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const {
  if (!(domain_ == o.domain_)) throw DomainError("matrix domain mismatch in *");
  if (cols_ != o.rows_) throw ContractError("matrix shape mismatch in *");
  DenseMatrix r(domain_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

DenseMatrix DenseMatrix::scaled(const Scalar& s) const {
  DenseMatrix r = *this;
  for (auto& x : r.data_) x = x * s;
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(domain_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<Scalar> DenseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ContractError("vector length does not match matrix columns");
  std::vector<Scalar> out(rows_, domain_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::vector<Scalar> DenseMatrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, c));
  return out;
}

void DenseMatrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw ContractError("column length does not match matrix rows");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

Scalar DenseMatrix::trace() const {
  Scalar t = domain_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool DenseMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool DenseMatrix::operator==(const DenseMatrix& o) const {
  return domain_ == o.domain_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  const DenseMatrix d = a - b;
  double m = 0.0;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) m = std::max(m, magnitude(d(i, j)));
  return m;
}

namespace {

Scalar det_bareiss_zmod(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  const auto modulus = m.domain().modulus();
  std::vector<BigInt> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = BigInt(m(i, j).residue());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return m.domain().zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  BigInt det = n == 0 ? BigInt(1) : at(n - 1, n - 1) * sign;
  BigInt r = det % modulus;
  if (r < 0) r += modulus;
  return Scalar::zmod_residue(r.convert_to<std::uint64_t>(), modulus);
}

Scalar det_elimination_exact(DenseMatrix a) {
  const std::size_t n = a.rows();
  Scalar det = a.domain().one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return a.domain().zero();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    const Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

// Reduced row echelon form over a field; returns pivot columns.
std::vector<std::size_t> rref_exact(DenseMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(p, j));
    const Scalar inv = a(row, c).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class EigenMatrix>
std::vector<std::vector<Scalar>> null_space_svd(const EigenMatrix& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  // Pad to at least n rows so the full V is available.
  EigenMatrix padded = EigenMatrix::Zero(std::max(a.rows(), n), n);
  padded.topRows(a.rows()) = a;
  Eigen::JacobiSVD<EigenMatrix> svd(padded, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<std::vector<Scalar>> basis;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (smax > 0.0 && sv(k) > rel_tol * smax) continue;
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto z = svd.matrixV()(i, k);
      if constexpr (std::is_same_v<EigenMatrix, Eigen::MatrixXd>) v.push_back(Scalar::real(z));
      else v.push_back(Scalar::complex(z));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Scalar determinant(const DenseMatrix& m) {
  if (!m.is_square()) throw ContractError("determinant of non-square matrix");
  switch (m.domain().kind()) {
    case ScalarKind::zmod: return det_bareiss_zmod(m);
    case ScalarKind::rational: return det_elimination_exact(m);
    case ScalarKind::real: return Scalar::real(m.rows() == 0 ? 1.0 : to_eigen_real(m).partialPivLu().determinant());
    case ScalarKind::complex:
      return Scalar::complex(m.rows() == 0 ? 1.0 : to_eigen_complex(m).partialPivLu().determinant());
  }
  throw DomainError("unknown scalar kind");
}

std::vector<std::vector<Scalar>> null_space(const DenseMatrix& m, double rel_tol) {
  const auto& dom = m.domain();
  std::vector<std::vector<Scalar>> basis;
  if (dom.is_exact()) {
    if (!dom.is_field()) {
      throw DomainError("null space over " + dom.name() + " is not supported: modulus must be prime");
    }
    DenseMatrix a = m;
    const auto pivots = rref_exact(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      std::vector<Scalar> v(m.cols(), dom.zero());
      v[free] = dom.one();
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  if (m.cols() == 0) return basis;
  if (dom.kind() == ScalarKind::real) return null_space_svd<Eigen::MatrixXd>(to_eigen_real(m), rel_tol);
  return null_space_svd<Eigen::MatrixXcd>(to_eigen_complex(m), rel_tol);
}

Scalar second_symmetric_function(const DenseMatrix& m) {
  if (!m.is_square()) throw ContractError("second symmetric function of non-square matrix");
  Scalar s = m.domain().zero();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) s += m(i, i) * m(j, j) - m(i, j) * m(j, i);
  return s;
}

Eigen::MatrixXd to_eigen_real(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

Eigen::MatrixXcd to_eigen_complex(const DenseMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

DenseMatrix from_eigen_real(const Eigen::MatrixXd& m) {
  DenseMatrix out(ScalarDomain::real(), m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Scalar::real(m(i, j));
  return out;
}

}  // namespace gfa
