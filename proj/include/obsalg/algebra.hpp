#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "obsalg/matrix.hpp"
#include "obsalg/polynomial.hpp"
#include "obsalg/scalar.hpp"

namespace obsalg {

enum class Field { Real, Complex };

std::string to_string(Field f);

/// Dense n x n x n structure constants t(i, j, k) = coefficient of e_k in the
/// product of e_i and e_j, with a per-(i, j) list of nonzero entries for the
/// inner loops. Immutable once built.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t n);
  StructureTensor(std::size_t n, std::vector<Scalar> dense);

  std::size_t dim() const noexcept { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[(i * n_ + j) * n_ + k];
  }
  const std::vector<std::pair<std::uint32_t, Scalar>>& nonzeros(std::size_t i, std::size_t j) const {
    return sparse_[i * n_ + j];
  }
  const std::vector<Scalar>& dense() const noexcept { return dense_; }
  bool is_zero() const;

  /// Bilinear evaluation on coordinate vectors.
  Vector apply(const Vector& x, const Vector& y) const;
  /// Product of basis elements as a dense vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// Left multiplication matrix: column j holds the coordinates of x * e_j.
  Matrix left_matrix(const Vector& x) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.dense_ == b.dense_;
  }
  friend bool operator!=(const StructureTensor& a, const StructureTensor& b) { return !(a == b); }

 private:
  void index();
  std::size_t n_ = 0;
  std::vector<Scalar> dense_;
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> sparse_;
};

/// Mutable dense buffer used while assembling structure constants.
class TensorBuilder {
 public:
  explicit TensorBuilder(std::size_t n) : n_(n), data_(n * n * n) {}
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  void add(std::size_t i, std::size_t j, const Vector& v);
  StructureTensor build() && { return StructureTensor(n_, std::move(data_)); }

 private:
  std::size_t n_;
  std::vector<Scalar> data_;
};

/// Observables with a Lie bracket, a symmetric product tau and a
/// distinguished unit. Construction validates bracket antisymmetry, tau
/// symmetry and unit != 0.
class TwoProductAlgebra {
 public:
  /// Throws DimensionMismatch, SymmetryViolation, ZeroUnit.
  TwoProductAlgebra(std::string label, Field field, StructureTensor bracket, StructureTensor tau, Vector unit);

  const std::string& label() const noexcept { return label_; }
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return unit_.size(); }
  const StructureTensor& bracket() const noexcept { return bracket_; }
  const StructureTensor& tau() const noexcept { return tau_; }
  const Vector& unit() const noexcept { return unit_; }

  Vector bracket(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }
  Vector tau(const Vector& x, const Vector& y) const { return tau_.apply(x, y); }
  /// sq(x) = tau(x, x)
  Vector square(const Vector& x) const { return tau_.apply(x, x); }

  TwoProductAlgebra with_label(std::string label) const;

  friend bool operator==(const TwoProductAlgebra& a, const TwoProductAlgebra& b) {
    return a.field_ == b.field_ && a.bracket_ == b.bracket_ && a.tau_ == b.tau_ && a.unit_ == b.unit_;
  }

 private:
  std::string label_;
  Field field_;
  StructureTensor bracket_, tau_;
  Vector unit_;
};

/// Anti-linear (when `conjugate`) involution v -> matrix * conj(v).
struct Star {
  Matrix matrix;
  bool conjugate = true;

  Vector apply(const Vector& v) const { return matrix * (conjugate ? conj(v) : v); }
  friend bool operator==(const Star& a, const Star& b) {
    return a.conjugate == b.conjugate && a.matrix == b.matrix;
  }
};

/// Unital associative (by intent; see verify_associativity) algebra with an
/// optional star structure. Construction validates that the unit is a
/// two-sided identity and that the star is an involutive anti-automorphism.
class AssocAlgebra {
 public:
  /// Throws DimensionMismatch, ZeroUnit, StarInconsistent.
  AssocAlgebra(std::string label, Field field, StructureTensor product, Vector unit,
               std::optional<Star> star = std::nullopt);

  const std::string& label() const noexcept { return label_; }
  Field field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return unit_.size(); }
  const StructureTensor& product() const noexcept { return product_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::optional<Star>& star() const noexcept { return star_; }
  bool has_star() const noexcept { return star_.has_value(); }

  Vector mul(const Vector& x, const Vector& y) const { return product_.apply(x, y); }
  /// Throws StarInconsistent when no star is present.
  Vector star(const Vector& x) const;
  Matrix left_matrix(const Vector& x) const { return product_.left_matrix(x); }
  /// Sum of p_k x^k with x^0 = unit.
  Vector evaluate(const Polynomial& p, const Vector& x) const;
  /// Same, but with x^0 = `unit` (for corner algebras e A e).
  Vector evaluate(const Polynomial& p, const Vector& x, const Vector& unit) const;

  AssocAlgebra with_label(std::string label) const;
  AssocAlgebra with_star(std::optional<Star> star) const;

  friend bool operator==(const AssocAlgebra& a, const AssocAlgebra& b) {
    return a.field_ == b.field_ && a.product_ == b.product_ && a.unit_ == b.unit_ && a.star_ == b.star_;
  }

 private:
  std::string label_;
  Field field_;
  StructureTensor product_;
  Vector unit_;
  std::optional<Star> star_;
};

/// Checks the star invariants on all basis elements and pairs; returns a
/// description of the first failure or nullopt.
std::optional<std::string> star_defect(const StructureTensor& product, const Star& star);

}  // namespace obsalg
