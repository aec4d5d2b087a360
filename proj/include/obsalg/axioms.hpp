#pragma once

#include <functional>
#include <string>
#include <vector>

#include "obsalg/algebra.hpp"

namespace obsalg {

/// One identity checked over all relevant basis tuples. When it fails,
/// `witness` holds the basis indices with the largest defect (first in
/// lexicographic order on ties) and `residual` is that defect vector.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  Vector residual;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const;
  /// nullptr when no check has that name.
  const AxiomCheck* find(const std::string& name) const;
  /// First failing check, or nullptr.
  const AxiomCheck* first_failure() const;
};

/// "antisymmetry", "jacobi", "unit-central".
AxiomReport check_lie(const TwoProductAlgebra& alg);
/// "tau-symmetry", "tau-unit", "derivation" ([A, t(B,C)] = t([A,B],C) + t(B,[A,C])).
AxiomReport check_tau(const TwoProductAlgebra& alg);
/// check_lie followed by check_tau.
AxiomReport verify(const TwoProductAlgebra& alg);

using SquaringMap = std::function<Vector(const Vector&)>;

/// Polarizes a squaring map: t(e_i, e_j) = (sq(e_i + e_j) - sq(e_i) - sq(e_j)) / 2.
/// Probes sq(2 e_i) = 4 sq(e_i) first; throws NotQuadratic(i) on the first miss.
StructureTensor tau_from_square(const SquaringMap& sq, std::size_t dim);

}  // namespace obsalg
