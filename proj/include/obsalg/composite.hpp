#pragma once

#include "obsalg/algebra.hpp"

namespace obsalg {

struct ComposeOptions {
  /// Skip the axiom and invariant checks on the factors. Used to exhibit what
  /// goes wrong when factors with different invariants are combined.
  bool unchecked = false;
};

/// Two-product algebra on the tensor product, basis e_i (x) f_j at index
/// i * dim(b) + j:
///   [A(x)A', B(x)B'] = [A,B] (x) t'(A',B') + t(A,B) (x) [A',B']
///   t(A(x)A', B(x)B') = t(A,B) (x) t'(A',B') - mu [A,B] (x) [A',B']
/// Throws AxiomFailure when a factor fails verify(), IncompatibleInvariants
/// when a factor's associator is not mu times its nested bracket.
TwoProductAlgebra tensor_compose(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const Scalar& mu,
                                 const ComposeOptions& opt = {});

/// Columns are the images of the factor's basis: A -> A (x) unit_b for
/// which == 1, unit_a (x) A for which == 2.
Matrix embed_factor(const TwoProductAlgebra& a, const TwoProductAlgebra& b, int which);

/// (a (x) b) (x) c versus a (x) (b (x) c); the canonical index identification
/// ((i nb + j) nc + k) = i (nb nc) + (j nc + k) makes this a direct comparison.
bool reassociation_check(const TwoProductAlgebra& a, const TwoProductAlgebra& b, const TwoProductAlgebra& c,
                         const Scalar& mu, const ComposeOptions& opt = {});

/// The swap e_i (x) f_j -> f_j (x) e_i as a permutation matrix from a(x)b to b(x)a.
Matrix swap_matrix(std::size_t na, std::size_t nb);

}  // namespace obsalg
