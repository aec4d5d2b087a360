#pragma once

#include <optional>
#include <vector>

#include "obsalg/polynomial.hpp"

namespace obsalg {

/// A real root of a polynomial. Exact rational roots have lo == hi == *exact;
/// irrational roots come with an isolating interval (lo, hi]. `cluster` > 1
/// marks an interval the bisection cap could not split; it then holds that
/// many distinct roots and is never silently merged into one.
struct RealRoot {
  Rational lo, hi;
  std::optional<Rational> exact;
  int multiplicity = 1;
  int cluster = 1;

  double approx() const;
  bool is_exact() const noexcept { return exact.has_value(); }
};

struct IsolationOptions {
  /// Isolating intervals are refined to width at most 2^-refine_bits.
  unsigned refine_bits = 64;
  /// Cap on bisection depth when separating roots.
  unsigned max_depth = 512;
};

/// All real roots of a real polynomial, sorted ascending, by Sturm sequences
/// with rational bisection. Rational roots are always reported exactly.
/// Throws ZeroPolynomial; throws DimensionMismatch for non-real coefficients.
std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const IsolationOptions& opt = {});

/// Float mode: companion-matrix eigenvalues with |Im| < eps, multiplicities
/// taken from the exact square-free decomposition.
std::vector<RealRoot> isolate_real_roots_float(const Polynomial& p, double eps = 1e-9);

/// Real roots of a polynomial with Gaussian-rational coefficients
/// (the real roots of gcd(Re p, Im p)).
std::vector<RealRoot> real_roots(const Polynomial& p, const IsolationOptions& opt = {});

/// Distinct roots lying in Q(i), sorted lexicographically. Candidates come
/// from floating-point eigenvalues and are confirmed by exact evaluation, so
/// every returned root is exact; a root may be missed only if the numerics
/// are too far off to round onto it.
std::vector<Scalar> gaussian_rational_roots(const Polynomial& p);

/// Number of sign changes in the Sturm chain of p evaluated at x (exposed for tests).
int sturm_sign_changes(const std::vector<Polynomial>& chain, const Rational& x);
std::vector<Polynomial> sturm_chain(const Polynomial& p);

}  // namespace obsalg
