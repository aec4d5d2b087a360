#pragma once

#include <cstdint>
#include <utility>

#include "obsalg/algebra.hpp"
#include "obsalg/io.hpp"

namespace obsalg {

/// Re-expresses an algebra in the basis whose k-th vector is column k of G
/// (coordinates in the old basis). Structure constants transform as
/// t'(a,b,c) = sum G(i,a) G(j,b) t(i,j,k) Ginv(c,k); the unit as Ginv * u;
/// a star matrix as Ginv * S * conj(G) (Ginv * S * G when not conjugating).
/// Throws Singular, DimensionMismatch. A real algebra needs a real G.
TwoProductAlgebra change_basis(const TwoProductAlgebra& alg, const Matrix& g);
AssocAlgebra change_basis(const AssocAlgebra& alg, const Matrix& g);
AnyAlgebra change_basis(const AnyAlgebra& alg, const Matrix& g);

/// The tensor part of change_basis, for callers holding bare structure constants.
StructureTensor transform_tensor(const StructureTensor& t, const Matrix& g, const Matrix& g_inv);

/// Integer unimodular n x n matrix built from about 3n elementary row
/// operations drawn from mt19937_64(seed). Deterministic across platforms.
Matrix scramble_matrix(std::size_t n, std::uint64_t seed);

template <class Alg>
std::pair<Alg, Matrix> scramble(const Alg& alg, std::uint64_t seed) {
  Matrix g = scramble_matrix(alg.dim(), seed);
  return {change_basis(alg, g), g};
}

}  // namespace obsalg
