#pragma once

#include <cstddef>

#include "obsalg/matrix.hpp"

namespace obsalg {

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative;
  }
};

/// H = L * diag(d) * L^dagger with L unit lower-triangular up to the row
/// combinations needed when a diagonal pivot vanishes. `transform` satisfies
/// transform * H * transform^dagger = diag(d).
struct CongruenceDiagonalization {
  Matrix transform;
  Vector diagonal;  ///< real entries
};

/// Exact congruence diagonalization of a Hermitian matrix (symmetric Gaussian
/// elimination). Throws NotHermitian.
CongruenceDiagonalization congruence_diagonalize(const Matrix& h);

/// (number of positive, number of negative) eigenvalues, by Sylvester's law of
/// inertia on the exact congruence diagonalization. Throws NotHermitian, Singular.
Inertia hermitian_signature(const Matrix& h);

}  // namespace obsalg
