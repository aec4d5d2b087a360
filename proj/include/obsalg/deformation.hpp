#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "obsalg/algebra.hpp"
#include "obsalg/signature.hpp"

namespace obsalg {

/// Dense n^4 trilinear map; entry (a, b, c, k) is the e_k coefficient of
/// f(e_a, e_b, e_c), stored at ((a n + b) n + c) n + k.
struct Trilinear {
  std::size_t n = 0;
  std::vector<Scalar> data;

  explicit Trilinear(std::size_t dim = 0) : n(dim), data(dim * dim * dim * dim) {}
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t k) {
    return data[((a * n + b) * n + c) * n + k];
  }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t k) const {
    return data[((a * n + b) * n + c) * n + k];
  }
  bool is_zero() const;
};

/// (d1 phi)(a, b) = a phi(b) - phi(a b) + phi(a) b; column j of phi is phi(e_j).
StructureTensor hochschild_d1(const AssocAlgebra& alg, const Matrix& phi);

/// (d2 psi)(a, b, c) = a psi(b, c) - psi(a b, c) + psi(a, b c) - psi(a, b) c.
Trilinear hochschild_d2(const AssocAlgebra& alg, const StructureTensor& psi);

struct HochschildReport {
  /// Unit-normalized cochain dimensions n(n-1), n(n-1)^2, n(n-1)^3.
  std::array<std::size_t, 3> dims{};
  std::size_t rank_d1 = 0, rank_d2 = 0;
  std::size_t h2_dim = 0;
  /// Normalized 2-cocycles (original basis) spanning H^2 modulo coboundaries.
  std::vector<StructureTensor> cocycle_basis;
};

/// Works in a basis whose first vector is the unit and restricts to
/// normalized cochains (vanishing whenever an argument is the unit).
/// Throws TooLarge for dim > 8.
HochschildReport h2_dimension(const AssocAlgebra& alg);

/// psi = d1 phi for some linear phi (exact solve over all of C1).
bool is_coboundary(const AssocAlgebra& alg, const StructureTensor& psi);

struct PerturbationCheck {
  Matrix h;  ///< 1 + t K
  Inertia signature;
  Vector ldl_diagonal;
  bool exact_positive = false;
  double cholesky_residual = 0.0;
  bool passed = false;
};

/// One block: H = 1 + t K must stay positive definite. Throws NotPerturbative
/// when |t| >= 1 / (2n) or some |K_ij| > 1, NotHermitian when K is not.
PerturbationCheck check_star_perturbation(const Matrix& k, const Rational& t, double eps = 1e-9);

/// Hermitian K with Re, Im entries in {-1/2, 0, 1/2} (real diagonal in
/// {-1, -1/2, 0, 1/2, 1}).
Matrix random_hermitian_perturbation(std::size_t n, std::mt19937_64& rng);

struct StarRigidityResult {
  bool passed = false;
  Rational t;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::size_t> block_sizes;
  std::vector<PerturbationCheck> checks;
};

/// Perturbs the conjugator of every Standard summand `samples` times.
/// Throws StarInconsistent unless every summand is Standard, NotPerturbative.
StarRigidityResult star_rigidity_check(const AssocAlgebra& alg, const Rational& t, std::uint64_t seed,
                                       std::size_t samples, double eps = 1e-9);

}  // namespace obsalg
