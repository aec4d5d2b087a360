#include "obsalg/axioms.hpp"

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

/// Tracks the worst defect seen so far for one named identity.
class DefectTracker {
 public:
  explicit DefectTracker(std::string name) { check_.name = std::move(name); }

  void observe(std::vector<std::size_t> idx, Vector residual) {
    Rational size = max_norm2(residual);
    if (sgn(size) == 0) return;
    // Tuples arrive in lexicographic order, so strict > keeps the first on ties.
    if (check_.passed || size > worst_) {
      check_.passed = false;
      worst_ = size;
      check_.witness = std::move(idx);
      check_.residual = std::move(residual);
    }
  }

  AxiomCheck take() && { return std::move(check_); }

 private:
  AxiomCheck check_;
  Rational worst_{0};
};

}  // namespace

bool AxiomReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

AxiomReport check_lie(const TwoProductAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& b = alg.bracket();
  AxiomReport report;

  DefectTracker anti("antisymmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) anti.observe({i, j}, b.basis_product(i, j) + b.basis_product(j, i));
  report.checks.push_back(std::move(anti).take());

  // With antisymmetry in place the Jacobiator is alternating, so i < j < k covers it.
  DefectTracker jacobi("jacobi");
  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vector(n, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector bij = b.basis_product(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = b.apply(e[i], b.basis_product(j, k)) + b.apply(e[j], b.basis_product(k, i)) +
                   b.apply(e[k], bij);
        jacobi.observe({i, j, k}, std::move(r));
      }
    }
  report.checks.push_back(std::move(jacobi).take());

  DefectTracker central("unit-central");
  for (std::size_t i = 0; i < n; ++i) central.observe({i}, b.apply(alg.unit(), e[i]));
  report.checks.push_back(std::move(central).take());
  return report;
}

AxiomReport check_tau(const TwoProductAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& t = alg.tau();
  const auto& b = alg.bracket();
  AxiomReport report;

  DefectTracker sym("tau-symmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) sym.observe({i, j}, t.basis_product(i, j) - t.basis_product(j, i));
  report.checks.push_back(std::move(sym).take());

  std::vector<Vector> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = unit_vector(n, i);

  DefectTracker unit("tau-unit");
  for (std::size_t i = 0; i < n; ++i) unit.observe({i}, t.apply(e[i], alg.unit()) - e[i]);
  report.checks.push_back(std::move(unit).take());

  // Symmetric in (B, C), so j <= k suffices.
  DefectTracker deriv("derivation");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector bij = b.basis_product(i, j);
      for (std::size_t k = j; k < n; ++k) {
        Vector lhs = b.apply(e[i], t.basis_product(j, k));
        Vector rhs = t.apply(bij, e[k]) + t.apply(e[j], b.basis_product(i, k));
        deriv.observe({i, j, k}, lhs - rhs);
      }
    }
  report.checks.push_back(std::move(deriv).take());
  return report;
}

AxiomReport verify(const TwoProductAlgebra& alg) {
  AxiomReport report = check_lie(alg);
  AxiomReport tau = check_tau(alg);
  for (auto& c : tau.checks) report.checks.push_back(std::move(c));
  return report;
}

StructureTensor tau_from_square(const SquaringMap& sq, std::size_t dim) {
  std::vector<Vector> sq_e(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vector e = unit_vector(dim, i);
    sq_e[i] = sq(e);
    if (sq_e[i].size() != dim) throw DimensionMismatch("squaring map returned a vector of the wrong length");
    if (sq(Scalar(2) * e) != Scalar(4) * sq_e[i])
      throw NotQuadratic(i, "sq(2 e_" + std::to_string(i) + ") != 4 sq(e_" + std::to_string(i) + ")");
  }
  TensorBuilder b(dim);
  const Scalar half = Scalar(Rational(1, 2));
  for (std::size_t i = 0; i < dim; ++i) {
    b.add(i, i, sq_e[i]);
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector v = half * (sq(unit_vector(dim, i) + unit_vector(dim, j)) - sq_e[i] - sq_e[j]);
      b.add(i, j, v);
      b.add(j, i, v);
    }
  }
  return std::move(b).build();
}

}  // namespace obsalg
