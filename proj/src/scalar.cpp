#include "obsalg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_integer(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(s) + "'");
  mpz_class z(std::string(body), 10);
  return Rational(negative ? mpz_class(-z) : z);
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    Rational ex = parse_integer(s.substr(e + 1));
    exponent = ex.get_num().get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed decimal: '" + std::string(s) + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      throw ParseError("malformed number: '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw ParseError("malformed number: '" + std::string(s) + "'");
  Rational value{mpz_class(digits, 10)};
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift < 0)
    value /= Rational(scale);
  else
    value *= Rational(scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty scalar");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(s.substr(0, slash));
    Rational den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s);
  return parse_integer(s);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational Scalar::max_component() const {
  Rational a = rational_abs(re_), b = rational_abs(im_);
  return a < b ? b : a;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Singular("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  Rational d = o.norm2();
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational m = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  if (sgn(s.re()) == 0) return to_string(s.im()) + "i";
  std::string im = to_string(s.im());
  if (im.front() != '-') im = "+" + im;
  return to_string(s.re()) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r(a);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!b[k].is_zero()) r[k] += b[k];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector r(a);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (!b[k].is_zero()) r[k] -= b[k];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) r[k] = s * v[k];
  return r;
}

Vector conj(const Vector& v) {
  Vector r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) r[k] = v[k].conj();
  return r;
}

Rational max_norm2(const Vector& v) {
  Rational best(0);
  for (const auto& x : v) {
    Rational n = x.norm2();
    if (n > best) best = n;
  }
  return best;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ')';
  return os.str();
}

}  // namespace obsalg
