#pragma once

#include <array>
#include <optional>
#include <string>

#include "obsalg/algebra.hpp"

namespace obsalg {

enum class Case { Case1Poisson, Case2RealAssociative, Case3ComplexAssociative, Abelian, Inconsistent };

std::string to_string(Case c);

using Triple = std::array<std::size_t, 3>;

/// Projective pair (lambda : mu), normalized to lambda = 1 whenever lambda != 0.
struct LambdaMu {
  Scalar lambda, mu;
  friend bool operator==(const LambdaMu& a, const LambdaMu& b) { return a.lambda == b.lambda && a.mu == b.mu; }
};

struct ClassificationReport {
  std::optional<LambdaMu> lambda_mu;
  Case kind = Case::Inconsistent;
  /// |mu| with lambda = 1 (cases 2 and 3); hbar = sqrt of this.
  std::optional<Rational> hbar_squared;
  /// Exact hbar when |mu| is a rational square.
  std::optional<Rational> hbar;
  /// max |lambda assoc - mu [[A,C],B]|^2 over triples (0 unless inconsistent).
  Rational residual{0};
  /// Triple that fixed the pair (or the worst triple when inconsistent).
  std::optional<Triple> witness;
  std::string reason;
};

/// assoc(A,B,C) = t(t(A,B),C) - t(A,t(B,C)).
Vector associator(const TwoProductAlgebra& alg, const Vector& a, const Vector& b, const Vector& c);

/// Solves lambda assoc(A,B,C) = mu [[A,C],B] over all basis triples.
/// Sets lambda_mu, residual, witness, the case tag and hbar.
ClassificationReport estimate_lambda_mu(const TwoProductAlgebra& alg);

/// Same report as estimate_lambda_mu; the name used by the pipeline.
ClassificationReport classify(const TwoProductAlgebra& alg);

/// Case 1 (and Abelian): product = tau over the reals. Case 2: tau + hbar [,].
/// Case 3: complexified, tau + i hbar [,], star = entrywise conjugation.
/// Throws NotClassified for Inconsistent reports or an irrational hbar.
AssocAlgebra build_associative(const TwoProductAlgebra& alg, const ClassificationReport& report);

struct AssociativityResult {
  bool passed = true;
  std::optional<Triple> witness;
  Vector residual;
};

/// Exact check of (e_i e_j) e_k = e_i (e_j e_k); the witness is the triple
/// with the largest defect, lexicographically first on ties.
AssociativityResult verify_associativity(const AssocAlgebra& alg);

/// Inverse of build_associative for cases 2 and 3: tau = symmetrized product,
/// bracket = antisymmetrized product / (2 hbar) (or / (2 i hbar)).
/// Throws NotClassified for case 1, where the hull forgets the bracket.
TwoProductAlgebra recover_two_product(const AssocAlgebra& hull, const ClassificationReport& report,
                                      const std::string& label);

/// True when lambda assoc = mu [[A,C],B] holds on every basis triple of alg
/// (lambda = 1), i.e. alg is compatible with the invariant mu.
bool compatible_with_mu(const TwoProductAlgebra& alg, const Scalar& mu);

}  // namespace obsalg
