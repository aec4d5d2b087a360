#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace obsalg {

using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal literal ("-0.25", "1e-3") into an exact
/// rational. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
Rational rational_abs(const Rational& q);

/// Exact Gaussian rational re + i*im. Real scalars are the im == 0 case; the
/// arithmetic takes the real fast path whenever both operands are real.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  /// max(|re|, |im|); an exact magnitude proxy used for normalization.
  Rational max_component() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Singular on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }


 private:
  Rational re_{0};
  Rational im_{0};
};

/// Lexicographic (re, im); only used for deterministic ordering.
inline bool lex_less(const Scalar& a, const Scalar& b) {
  return a.re() != b.re() ? a.re() < b.re() : a.im() < b.im();
}

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
/// Largest |v_k|^2; zero for the zero vector.
Rational max_norm2(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace obsalg
