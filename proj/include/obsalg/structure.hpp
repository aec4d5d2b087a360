#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obsalg/algebra.hpp"
#include "obsalg/signature.hpp"

namespace obsalg {

/// Basis of the radical: the null space of the trace form tr(L_{ab})
/// (Dickson's criterion, characteristic 0). Empty iff semisimple.
std::vector<Vector> radical(const AssocAlgebra& alg);

/// Basis of {z : z e_i = e_i z for every i}.
std::vector<Vector> center(const AssocAlgebra& alg);

/// A real basis of the Hermitian elements {x : star(x) = x}. Throws
/// StarInconsistent without a star.
std::vector<Vector> hermitian_basis(const AssocAlgebra& alg);

/// Minimal polynomial is x^k for some k >= 1.
bool is_nilpotent(const AssocAlgebra& alg, const Vector& x);

/// One simple summand M_n(C): its central idempotent and matrix units
/// E_ab (row-major, units[a * n + b]) in the algebra's coordinates.
struct WedderburnBlock {
  std::size_t size = 0;
  Vector central_idempotent;
  std::vector<Vector> units;
  const Vector& unit(std::size_t a, std::size_t b) const { return units[a * size + b]; }
};

struct WedderburnResult {
  /// Sorted by size, then by the first nonzero coordinate of the central idempotent.
  std::vector<WedderburnBlock> blocks;
  /// Columns are all matrix units, block by block.
  Matrix basis_change;
  Matrix basis_change_inverse;
  std::size_t center_dim = 0;
  /// Every seed drawn for the central splitting element, in order.
  std::vector<std::uint64_t> seeds;

  /// (matrix size, multiplicity), ascending.
  std::vector<std::pair<std::size_t, std::size_t>> summary() const;
};

/// Wedderburn decomposition over C (real algebras are complexified). Splits
/// the center with a seeded random central element, retrying on eigenvalue
/// collisions (at most 16 seeds), then splits each block by idempotents into
/// matrix units. Throws NotSemisimple, MaxRetriesExceeded.
WedderburnResult wedderburn_decompose(const AssocAlgebra& alg, std::uint64_t seed = 0);

/// E_ab E_cd = delta_bc E_ad within each block, products across blocks vanish,
/// and the diagonal units sum to the algebra unit. Exact.
bool verify_matrix_units(const AssocAlgebra& alg, const WedderburnResult& w);

/// x written in block matrix coordinates (one n x n matrix per block).
std::vector<Matrix> to_block_matrices(const WedderburnResult& w, const Vector& x);
/// Inverse direction for a single block.
Vector from_block_matrix(const WedderburnResult& w, std::size_t block, const Matrix& m);

enum class StarType { Standard, Indefinite, V2, Swap };
std::string to_string(StarType t);

struct StarSummand {
  StarType type = StarType::Standard;
  std::size_t size = 0;
  /// Wedderburn block indices (two for V2 and Swap).
  std::vector<std::size_t> blocks;
  /// Hermitian H with star(v) = H^-1 v^dagger H, in block matrix coordinates.
  std::optional<Matrix> conjugator;
  std::optional<Inertia> signature;
  /// V2: the Hermitian element i f_k - i f_j. Indefinite / Swap: a nonzero
  /// Hermitian nilpotent.
  std::optional<Vector> witness;
  std::string note;
};

/// Solves H sigma(E_ab) = E_ba H for every matrix unit, where sigma is the
/// star written on n x n block matrices. Returns the Hermitian solution scaled
/// so that max(|Re|, |Im|) over the entries is 1 and the first nonzero
/// diagonal entry (or first nonzero entry) is positive. Throws NoConjugator.
Matrix find_conjugator_H(std::size_t n, const std::function<Matrix(const Matrix&)>& sigma);

/// Throws StarInconsistent when the star does not permute the blocks, NoConjugator.
std::vector<StarSummand> classify_star(const AssocAlgebra& alg, const WedderburnResult& w);

/// A nonzero element with minimal polynomial x^k (k >= 2), Hermitian when
/// requested: radical elements first, then matrix units or the Indefinite /
/// Swap witnesses. Throws StarInconsistent if hermitian_only without a star.
std::optional<Vector> find_nilpotent(const AssocAlgebra& alg, bool hermitian_only, std::uint64_t seed = 0);

struct StructureReport {
  std::vector<Vector> radical_basis;
  bool semisimple = false;
  std::optional<WedderburnResult> wedderburn;
  bool star_analyzed = false;
  std::vector<StarSummand> star_summands;
};

/// radical, then (when semisimple) Wedderburn, then (when requested and a
/// star is present) classify_star.
StructureReport analyze_structure(const AssocAlgebra& alg, bool with_star, std::uint64_t seed = 0);

}  // namespace obsalg
