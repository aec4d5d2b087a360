#include "obsalg/basis.hpp"

#include <random>

#include "obsalg/errors.hpp"

namespace obsalg {

StructureTensor transform_tensor(const StructureTensor& t, const Matrix& g, const Matrix& g_inv) {
  const std::size_t n = t.dim();
  std::vector<Vector> cols(n);
  for (std::size_t a = 0; a < n; ++a) cols[a] = g.column(a);
  TensorBuilder b(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector old = t.apply(cols[x], cols[y]);
      if (is_zero(old)) continue;
      Vector fresh = g_inv * old;
      for (std::size_t k = 0; k < n; ++k) b(x, y, k) = fresh[k];
    }
  return std::move(b).build();
}

namespace {

void check_shape(const Matrix& g, std::size_t n) {
  if (g.rows() != n || g.cols() != n)
    throw DimensionMismatch("basis change must be " + std::to_string(n) + " x " + std::to_string(n));
}

}  // namespace

TwoProductAlgebra change_basis(const TwoProductAlgebra& alg, const Matrix& g) {
  check_shape(g, alg.dim());
  Matrix g_inv = inverse(g);
  return TwoProductAlgebra(alg.label(), alg.field(), transform_tensor(alg.bracket(), g, g_inv),
                           transform_tensor(alg.tau(), g, g_inv), g_inv * alg.unit());
}

AssocAlgebra change_basis(const AssocAlgebra& alg, const Matrix& g) {
  check_shape(g, alg.dim());
  Matrix g_inv = inverse(g);
  std::optional<Star> star;
  if (alg.star()) {
    const Star& s = *alg.star();
    star = Star{g_inv * s.matrix * (s.conjugate ? g.conjugate() : g), s.conjugate};
  }
  return AssocAlgebra(alg.label(), alg.field(), transform_tensor(alg.product(), g, g_inv), g_inv * alg.unit(),
                      std::move(star));
}

AnyAlgebra change_basis(const AnyAlgebra& alg, const Matrix& g) {
  return std::visit([&](const auto& a) -> AnyAlgebra { return change_basis(a, g); }, alg);
}

Matrix scramble_matrix(std::size_t n, std::uint64_t seed) {
  Matrix g = Matrix::identity(n);
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the sequence identical on every standard library.
  auto draw = [&](std::uint64_t m) { return rng() % m; };
  if (n == 1) {
    if (draw(2)) g(0, 0) = Scalar(-1);
    return g;
  }
  static const long kFactors[] = {-2, -1, 1, 2};
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t dst = draw(n);
    std::size_t src = draw(n - 1);
    if (src >= dst) ++src;
    Scalar c(kFactors[draw(4)]);
    for (std::size_t col = 0; col < n; ++col)
      if (!g(src, col).is_zero()) g(dst, col) += c * g(src, col);
  }
  // A random signed permutation of the columns on top.
  for (std::size_t k = n - 1; k > 0; --k) {
    std::size_t j = draw(k + 1);
    if (j != k)
      for (std::size_t r = 0; r < n; ++r) std::swap(g(r, k), g(r, j));
  }
  for (std::size_t k = 0; k < n; ++k)
    if (draw(2))
      for (std::size_t r = 0; r < n; ++r) g(r, k) = -g(r, k);
  return g;
}

}  // namespace obsalg
