#include "obsalg/polynomial.hpp"

#include <sstream>

#include "obsalg/errors.hpp"

namespace obsalg {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = Scalar(1) / leading();
  return inv * *this;
}

Polynomial Polynomial::real_part() const {
  std::vector<Scalar> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = Scalar(c_[k].re());
  return Polynomial(std::move(r));
}

Polynomial Polynomial::imag_part() const {
  std::vector<Scalar> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = Scalar(c_[k].im());
  return Polynomial(std::move(r));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  std::vector<Scalar> r(p.c_);
  for (auto& c : r) c *= s;
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Scalar inv = Scalar(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Scalar f = rem[static_cast<std::size_t>(k)] * inv;
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {};
  Scalar inv = Scalar(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("square-free decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() == 0) return out;
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(fp, a).first;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial ai = gcd(b, d);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
  }
  return out;
}

Polynomial square_free_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("square-free part of zero");
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Scalar c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool show_coeff = k == 0 || !mag.is_one();
    if (show_coeff) {
      if (mag.is_real())
        os << mag;
      else
        os << '(' << mag << ')';
    }
    if (k > 0) {
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace obsalg
