#include "obsalg/matrix.hpp"

#include <Eigen/SVD>

#include "obsalg/errors.hpp"

namespace obsalg {

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix t(*this);
  for (auto& x : t.data_) x = x.conj();
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_)
    if (!x.is_real()) return false;
  return true;
}

Eigen::MatrixXcd Matrix::to_eigen() const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).to_complex();
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) p(r, c) += x * b(k, c);
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!a(r, k).is_zero()) out[r] += a(r, k) * v[k];
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix s(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) += b(r, c);
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix s(a);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) -= b(r, c);
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out(r, c) = s * m(r, c);
  return out;
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    // sparsest candidate row: limits fill-in and coefficient growth
    std::size_t pivot = m.rows(), best = m.cols() + 1;
    for (std::size_t r = lead; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      std::size_t nz = 0;
      for (std::size_t c = col; c < m.cols() && nz < best; ++c) nz += !m(r, c).is_zero();
      if (nz < best) best = nz, pivot = r;
      if (best == 1) break;
    }
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
    Scalar inv = Scalar(1) / m(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(lead, c).is_zero()) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(lead, c).is_zero()) m(r, c) -= f * m(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
      if (!ef.reduced(r, free).is_zero()) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Eigen::VectorXcd> nullspace(const Eigen::MatrixXcd& m, double eps) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    double s = k < sv.size() ? sv(k) : 0.0;
    if (s <= eps * std::max(top, 1.0)) basis.emplace_back(svd.matrixV().col(k));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  EchelonForm ef = row_reduce(std::move(aug));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) throw Singular("matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  EchelonForm ef = row_reduce(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < ef.pivots.size(); ++r) x[ef.pivots[r]] = ef.reduced(r, m.cols());
  return x;
}

std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors) {
  // Incremental echelon basis: rows kept reduced against each other's pivots.
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    Vector v = vectors[idx];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar f = v[pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!rows[r][c].is_zero()) v[c] -= f * rows[r][c];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) continue;
    Scalar inv = Scalar(1) / v[p];
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar f = rows[r][p];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero()) rows[r][c] -= f * v[c];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(idx);
  }
  return chosen;
}

}  // namespace obsalg
