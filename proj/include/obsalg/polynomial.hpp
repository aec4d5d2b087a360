#pragma once

#include <string>
#include <utility>
#include <vector>

#include "obsalg/scalar.hpp"

namespace obsalg {

/// Univariate polynomial over the Gaussian rationals; coefficients are stored
/// lowest degree first and kept trimmed (no trailing zeros).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Scalar(0), Scalar(1)}); }
  /// (x - root)
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }
  bool is_real() const;

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial real_part() const;
  Polynomial imag_part() const;
  /// f(g(x))
  Polynomial compose(const Polynomial& inner) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws ZeroPolynomial when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// s, t with s*a + t*b = gcd(a, b) (monic).
struct Bezout {
  Polynomial gcd, s, t;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

/// Yun's decomposition: f = lc(f) * prod factor_i^multiplicity_i, factors monic,
/// square-free and pairwise coprime.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& f);
Polynomial square_free_part(const Polynomial& f);

/// Human form with variable `var`, highest degree first: "x^2 - 1".
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace obsalg
