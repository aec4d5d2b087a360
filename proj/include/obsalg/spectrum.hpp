#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obsalg/algebra.hpp"
#include "obsalg/roots.hpp"

namespace obsalg {

struct SpectrumOptions {
  /// Use companion-matrix eigenvalues (|Im| < float_eps) instead of Sturm isolation.
  bool float_mode = false;
  double float_eps = 1e-9;
};

struct SpectrumResult {
  Polynomial min_poly;
  /// Distinct real roots of the minimal polynomial, ascending.
  std::vector<RealRoot> spectrum;
  bool nonreal_roots = false;
  bool repeated_roots = false;
  /// No non-real roots and a nonempty spectrum.
  bool axiom8_ok = false;
  /// No repeated roots, and a one-point spectrum only for multiples of the unit.
  bool axiom9_ok = false;
  /// For a repeated root: the nonzero nilpotent s(A), s the square-free part.
  std::optional<Vector> nilpotent_witness;
};

/// K_f(A) = sum f_k A^k with A^0 = unit. Two-product algebras build powers by
/// A^(n+1) = (sq(A + A^n) - sq(A) - sq(A^n)) / 2 with sq(x) = t(x, x);
/// associative algebras use the product.
Vector poly_apply(const TwoProductAlgebra& alg, const Vector& a, const Polynomial& f);
Vector poly_apply(const AssocAlgebra& alg, const Vector& a, const Polynomial& f);

/// Monic polynomial of least degree annihilating A (degree <= dim).
Polynomial minimal_polynomial(const TwoProductAlgebra& alg, const Vector& a);
Polynomial minimal_polynomial(const AssocAlgebra& alg, const Vector& a);
/// Minimal polynomial inside a corner algebra u A u, with u playing the unit.
Polynomial minimal_polynomial(const AssocAlgebra& alg, const Vector& a, const Vector& unit);

SpectrumResult physical_spectrum(const TwoProductAlgebra& alg, const Vector& a, const SpectrumOptions& opt = {});
SpectrumResult physical_spectrum(const AssocAlgebra& alg, const Vector& a, const SpectrumOptions& opt = {});

/// Axiom 9 verdict for a computed spectrum: fails iff a one-point (or
/// nilpotent-type) spectrum sits on a non-constant element.
bool phantom_check(const SpectrumResult& r);

/// Display form of a root: "p/q" when exact, otherwise "[lo, hi]" decimals.
std::string root_to_string(const RealRoot& r);

}  // namespace obsalg
