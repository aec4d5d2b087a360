#include "obsalg/composite.hpp"

#include "obsalg/axioms.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/trichotomy.hpp"

namespace obsalg {

namespace {

void validate_factor(const TwoProductAlgebra& f, const Scalar& mu) {
  AxiomReport rep = verify(f);
  if (const AxiomCheck* bad = rep.first_failure())
    throw AxiomFailure("factor '" + f.label() + "' fails the " + bad->name + " check");
  if (!compatible_with_mu(f, mu))
    throw IncompatibleInvariants("factor '" + f.label() + "' does not satisfy assoc = " + to_string(mu) +
                                 " [[A,C],B]; factors must share (lambda : mu)");
}

Vector kron(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

}  // namespace

TwoProductAlgebra tensor_compose(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const Scalar& mu,
                                 const ComposeOptions& opt) {
  if (!opt.unchecked) {
    validate_factor(a, mu);
    validate_factor(b, mu);
  }
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  TensorBuilder br(n), tau(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k) {
      const auto& ba = a.bracket().nonzeros(i, k);
      const auto& ta = a.tau().nonzeros(i, k);
      if (ba.empty() && ta.empty()) continue;
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t l = 0; l < nb; ++l) {
          const auto& bb = b.bracket().nonzeros(j, l);
          const auto& tb = b.tau().nonzeros(j, l);
          const std::size_t x = i * nb + j, y = k * nb + l;
          for (const auto& [p, u] : ba) {
            for (const auto& [q, v] : tb) br(x, y, p * nb + q) += u * v;
            for (const auto& [q, v] : bb) tau(x, y, p * nb + q) -= mu * u * v;
          }
          for (const auto& [p, u] : ta) {
            for (const auto& [q, v] : bb) br(x, y, p * nb + q) += u * v;
            for (const auto& [q, v] : tb) tau(x, y, p * nb + q) += u * v;
          }
        }
    }
  Field field = a.field() == Field::Complex || b.field() == Field::Complex ? Field::Complex : Field::Real;
  return TwoProductAlgebra(a.label() + "*" + b.label(), field, std::move(br).build(), std::move(tau).build(),
                           kron(a.unit(), b.unit()));
}

Matrix embed_factor(const TwoProductAlgebra& a, const TwoProductAlgebra& b, int which) {
  if (which != 1 && which != 2) throw DimensionMismatch("factor index must be 1 or 2");
  const std::size_t nf = which == 1 ? a.dim() : b.dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < nf; ++k) {
    Vector e = unit_vector(nf, k);
    cols.push_back(which == 1 ? kron(e, b.unit()) : kron(a.unit(), e));
  }
  return Matrix::from_columns(cols, a.dim() * b.dim());
}

bool reassociation_check(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const TwoProductAlgebra& c,
                         const Scalar& mu, const ComposeOptions& opt) {
  TwoProductAlgebra left = tensor_compose(tensor_compose(a, b, mu, opt), c, mu, opt);
  TwoProductAlgebra right = tensor_compose(a, tensor_compose(b, c, mu, opt), mu, opt);
  return left == right;
}

Matrix swap_matrix(std::size_t na, std::size_t nb) {
  // Column (i nb + j) of the map a(x)b -> b(x)a is basis vector (j na + i).
  Matrix m(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) m(j * na + i, i * nb + j) = Scalar(1);
  return m;
}

}  // namespace obsalg
