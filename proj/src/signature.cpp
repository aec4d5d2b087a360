#include "obsalg/signature.hpp"

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

// A <- E A E^dagger and T <- E T for the row operation row_dst += c * row_src.
void add_row(Matrix& a, Matrix& t, std::size_t dst, std::size_t src, const Scalar& c) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) a(dst, col) += c * a(src, col);
  Scalar cc = c.conj();
  for (std::size_t row = 0; row < n; ++row) a(row, dst) += cc * a(row, src);
  for (std::size_t col = 0; col < n; ++col) t(dst, col) += c * t(src, col);
}

void swap_index(Matrix& a, Matrix& t, std::size_t i, std::size_t j) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  for (std::size_t c = 0; c < n; ++c) std::swap(t(i, c), t(j, c));
}

}  // namespace

CongruenceDiagonalization congruence_diagonalize(const Matrix& h) {
  if (!h.square() || h != h.adjoint()) throw NotHermitian("matrix is not Hermitian");
  const std::size_t n = h.rows();
  Matrix a = h;
  Matrix t = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(a, t, k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // zero row: a zero eigenvalue
        // With every remaining diagonal entry zero, adding c = a(k, j) times
        // row j makes the pivot 2|a(k, j)|^2 > 0.
        add_row(a, t, k, j, a(k, j));
      }
    }
    const Scalar pivot = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(j, k).is_zero()) continue;
      add_row(a, t, j, k, -(a(j, k) / pivot));
    }
  }
  Vector d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = a(k, k);
  return {std::move(t), std::move(d)};
}

Inertia hermitian_signature(const Matrix& h) {
  CongruenceDiagonalization cd = congruence_diagonalize(h);
  Inertia in;
  for (const auto& d : cd.diagonal) {
    int s = sgn(d.re());
    if (s == 0) throw Singular("Hermitian matrix is singular");
    (s > 0 ? in.positive : in.negative)++;
  }
  return in;
}

}  // namespace obsalg
