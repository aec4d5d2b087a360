#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obsalg/axioms.hpp"
#include "obsalg/deformation.hpp"
#include "obsalg/io.hpp"
#include "obsalg/spectrum.hpp"
#include "obsalg/structure.hpp"
#include "obsalg/trichotomy.hpp"

namespace obsalg {

enum class Verdict { QMLike, ClassicalLike, RealAssociative, Excluded, Inconsistent };
std::string to_string(Verdict v);

struct PipelineOptions {
  std::uint64_t seed = 0;
  /// Seeded random observables checked after the basis and pairwise samples.
  std::size_t samples = 50;
  SpectrumOptions spectrum;
  Rational rigidity_t{1, 10};
  std::size_t rigidity_samples = 20;
};

struct SpectrumSample {
  std::string origin;  ///< "basis 2", "e0 + e3", "random 7", ...
  Vector element;
  SpectrumResult result;
};

struct PipelineReport {
  std::string label;
  std::size_t dim = 0;
  bool assoc_input = false;
  PipelineOptions options;

  std::optional<AxiomReport> axioms;
  std::optional<ClassificationReport> classification;
  std::optional<AssociativityResult> hull_associativity;
  std::optional<StructureReport> structure;
  std::size_t samples_checked = 0;
  std::optional<SpectrumSample> spectrum_violation;
  std::optional<HochschildReport> hochschild;
  std::optional<StarRigidityResult> star_rigidity;
  std::vector<std::string> notes;

  Verdict verdict = Verdict::Inconsistent;
  std::string stage;   ///< stage that decided an Excluded / Inconsistent verdict
  std::string axiom;   ///< "8" or "9" for measurement-axiom exclusions
  std::string reason;
  std::optional<Vector> witness;
  std::optional<SpectrumResult> witness_spectrum;
};

/// verify -> classify -> hull -> radical -> Wedderburn + star -> spectrum
/// sampling -> rigidity. The first exclusion fixes the verdict; later stages
/// still run where they apply. Inconsistent inputs stop early. Module errors
/// are rethrown with the stage name prefixed.
PipelineReport run_pipeline(const AnyAlgebra& alg, const PipelineOptions& opt = {});

/// 0 for QM-like, 1 otherwise.
int exit_code(const PipelineReport& r);

/// Observables used for sampling: the basis of a two-product algebra, the
/// Hermitian basis of a starred associative algebra.
std::vector<SpectrumSample> sample_observables(const std::vector<Vector>& basis, std::uint64_t seed,
                                               std::size_t random_count);

}  // namespace obsalg
