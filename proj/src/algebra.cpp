#include "obsalg/algebra.hpp"

#include "obsalg/errors.hpp"

namespace obsalg {

std::string to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

StructureTensor::StructureTensor(std::size_t n) : n_(n), dense_(n * n * n) { index(); }

StructureTensor::StructureTensor(std::size_t n, std::vector<Scalar> dense) : n_(n), dense_(std::move(dense)) {
  if (dense_.size() != n * n * n) throw DimensionMismatch("structure tensor needs n^3 entries");
  index();
}

void StructureTensor::index() {
  sparse_.assign(n_ * n_, {});
  for (std::size_t ij = 0; ij < n_ * n_; ++ij)
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& v = dense_[ij * n_ + k];
      if (!v.is_zero()) sparse_[ij].emplace_back(static_cast<std::uint32_t>(k), v);
    }
}

bool StructureTensor::is_zero() const {
  for (const auto& row : sparse_)
    if (!row.empty()) return false;
  return true;
}

Vector StructureTensor::apply(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("element length differs from algebra dimension");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& nz = sparse_[i * n_ + j];
      if (nz.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, v] : nz) out[k] += xy * v;
    }
  }
  return out;
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  Vector out(n_);
  for (const auto& [k, v] : sparse_[i * n_ + j]) out[k] = v;
  return out;
}

Matrix StructureTensor::left_matrix(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (const auto& [k, v] : sparse_[i * n_ + j]) m(k, j) += x[i] * v;
  }
  return m;
}

void TensorBuilder::add(std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < n_; ++k)
    if (!v[k].is_zero()) (*this)(i, j, k) += v[k];
}

TwoProductAlgebra::TwoProductAlgebra(std::string label, Field field, StructureTensor bracket, StructureTensor tau,
                                     Vector unit)
    : label_(std::move(label)), field_(field), bracket_(std::move(bracket)), tau_(std::move(tau)), unit_(std::move(unit)) {
  const std::size_t n = unit_.size();
  if (n == 0) throw DimensionMismatch("algebra dimension must be positive");
  if (bracket_.dim() != n || tau_.dim() != n) throw DimensionMismatch("structure constants do not match dim");
  if (obsalg::is_zero(unit_)) throw ZeroUnit("the unit must be a nonzero element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (bracket_(i, j, k) != -bracket_(j, i, k))
          throw SymmetryViolation(i, j, "bracket is not antisymmetric at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ", " + std::to_string(k) + ")");
        if (tau_(i, j, k) != tau_(j, i, k))
          throw SymmetryViolation(i, j, "tau is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) +
                                            ", " + std::to_string(k) + ")");
      }
  if (field_ == Field::Real) {
    for (const auto& v : bracket_.dense())
      if (!v.is_real()) throw DimensionMismatch("real algebra with complex bracket constants");
    for (const auto& v : tau_.dense())
      if (!v.is_real()) throw DimensionMismatch("real algebra with complex tau constants");
  }
}

TwoProductAlgebra TwoProductAlgebra::with_label(std::string label) const {
  TwoProductAlgebra copy(*this);
  copy.label_ = std::move(label);
  return copy;
}

std::optional<std::string> star_defect(const StructureTensor& product, const Star& star) {
  const std::size_t n = product.dim();
  if (star.matrix.rows() != n || star.matrix.cols() != n) return "star matrix has the wrong shape";
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = star.apply(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    if (star.apply(images[i]) != unit_vector(n, i))
      return "star is not an involution on basis element " + std::to_string(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (star.apply(product.basis_product(i, j)) != product.apply(images[j], images[i]))
        return "star does not reverse the product on (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  return std::nullopt;
}

AssocAlgebra::AssocAlgebra(std::string label, Field field, StructureTensor product, Vector unit,
                           std::optional<Star> star)
    : label_(std::move(label)), field_(field), product_(std::move(product)), unit_(std::move(unit)), star_(std::move(star)) {
  const std::size_t n = unit_.size();
  if (n == 0) throw DimensionMismatch("algebra dimension must be positive");
  if (product_.dim() != n) throw DimensionMismatch("product constants do not match dim");
  if (obsalg::is_zero(unit_)) throw ZeroUnit("the unit must be a nonzero element");
  if (field_ == Field::Real)
    for (const auto& v : product_.dense())
      if (!v.is_real()) throw DimensionMismatch("real algebra with complex product constants");
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (product_.apply(unit_, e) != e || product_.apply(e, unit_) != e)
      throw ZeroUnit("unit is not a two-sided identity on basis element " + std::to_string(i));
  }
  if (star_)
    if (auto defect = star_defect(product_, *star_)) throw StarInconsistent(*defect);
}

Vector AssocAlgebra::star(const Vector& x) const {
  if (!star_) throw StarInconsistent("algebra '" + label_ + "' has no star structure");
  return star_->apply(x);
}

Vector AssocAlgebra::evaluate(const Polynomial& p, const Vector& x) const { return evaluate(p, x, unit_); }

Vector AssocAlgebra::evaluate(const Polynomial& p, const Vector& x, const Vector& unit) const {
  // Horner: acc = acc * x + c_k
  Vector acc(dim());
  for (int k = p.degree(); k >= 0; --k) {
    acc = mul(acc, x);
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc = acc + c * unit;
  }
  return acc;
}

AssocAlgebra AssocAlgebra::with_label(std::string label) const {
  AssocAlgebra copy(*this);
  copy.label_ = std::move(label);
  return copy;
}

AssocAlgebra AssocAlgebra::with_star(std::optional<Star> star) const {
  return AssocAlgebra(label_, field_, product_, unit_, std::move(star));
}

}  // namespace obsalg
