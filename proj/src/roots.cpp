#include "obsalg/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

int sign_at(const Polynomial& p, const Rational& x) { return sgn(p(Scalar(x)).re()); }

mpz_class ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// lcm of coefficient denominators: every rational root of the monic f has
/// the form k / D for an integer k (rational root theorem on D*f).
mpz_class denominator_lcm(const Polynomial& f) {
  mpz_class d = 1;
  for (const auto& c : f.coeffs()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return d;
}

Rational cauchy_bound(const Polynomial& f) {
  Rational best(0);
  Rational lead = rational_abs(f.leading().re());
  for (int k = 0; k < f.degree(); ++k) {
    Rational r = rational_abs(f.coeff(static_cast<std::size_t>(k)).re()) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

class Isolator {
 public:
  Isolator(const Polynomial& f, int multiplicity, const IsolationOptions& opt)
      : f_(f), chain_(sturm_chain(f)), mult_(multiplicity), opt_(opt), denom_(denominator_lcm(f)) {
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, opt.refine_bits);
    min_width_ = Rational(1) / Rational(two_pow);
  }

  void run(std::vector<RealRoot>& out) {
    Rational b = cauchy_bound(f_);
    split(-b, b, sturm_sign_changes(chain_, -b), sturm_sign_changes(chain_, b), 0, out);
  }

 private:
  // Picks a split point inside (lo, hi) where f does not vanish.
  Rational split_point(const Rational& lo, const Rational& hi) const {
    for (long q = 2;; ++q)
      for (long p = 1; p < q; ++p) {
        Rational m = lo + (hi - lo) * Rational(p, q);
        if (sign_at(f_, m) != 0) return m;
      }
  }

  void split(const Rational& lo, const Rational& hi, int vlo, int vhi, unsigned depth,
             std::vector<RealRoot>& out) {
    int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
      out.push_back(refine(lo, hi));
      return;
    }
    if (depth >= opt_.max_depth) {
      RealRoot r;
      r.lo = lo;
      r.hi = hi;
      r.multiplicity = mult_;
      r.cluster = count;
      out.push_back(r);
      return;
    }
    Rational mid = split_point(lo, hi);
    int vmid = sturm_sign_changes(chain_, mid);
    split(lo, mid, vlo, vmid, depth + 1, out);
    split(mid, hi, vmid, vhi, depth + 1, out);
  }

  std::optional<Rational> rational_candidate(const Rational& lo, const Rational& hi) const {
    Rational D(denom_);
    mpz_class k0 = ceil_q(lo * D), k1 = floor_q(hi * D);
    for (mpz_class k = k0; k <= k1; ++k) {
      Rational c(k, denom_);
      c.canonicalize();
      if (sign_at(f_, c) == 0) return c;
    }
    return std::nullopt;
  }

  RealRoot refine(Rational lo, Rational hi) {
    RealRoot r;
    r.multiplicity = mult_;
    int slo = sign_at(f_, lo);
    if (sign_at(f_, hi) == 0) {
      r.lo = r.hi = hi;
      r.exact = hi;
      return r;
    }
    Rational inv_d = Rational(1) / Rational(denom_);
    bool checked_rational = false;
    for (;;) {
      Rational width = hi - lo;
      if (!checked_rational && width < inv_d) {
        checked_rational = true;
        if (auto c = rational_candidate(lo, hi)) {
          r.lo = r.hi = *c;
          r.exact = *c;
          return r;
        }
      }
      if (width <= min_width_ && checked_rational) break;
      Rational mid = (lo + hi) / 2;
      int smid = sign_at(f_, mid);
      if (smid == 0) {
        r.lo = r.hi = mid;
        r.exact = mid;
        return r;
      }
      if (smid == slo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    r.lo = lo;
    r.hi = hi;
    return r;
  }

  const Polynomial& f_;
  std::vector<Polynomial> chain_;
  int mult_;
  IsolationOptions opt_;
  mpz_class denom_;
  Rational min_width_;
};

std::vector<std::complex<double>> companion_roots(const Polynomial& monic) {
  const int n = monic.degree();
  std::vector<std::complex<double>> roots;
  if (n <= 0) return roots;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) c(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) c(k, n - 1) = -monic.coeff(static_cast<std::size_t>(k)).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  for (int k = 0; k < n; ++k) roots.push_back(es.eigenvalues()(k));
  return roots;
}

std::vector<Rational> rational_guesses(double value, const mpz_class& denom) {
  std::vector<Rational> out;
  if (!std::isfinite(value)) return out;
  // k / denom rounding (exact when denom is a valid root denominator).
  double scaled = value * denom.get_d();
  if (std::fabs(scaled) < 9e15) {
    Rational g(mpz_class(static_cast<double>(std::llround(scaled))), denom);
    g.canonicalize();
    out.push_back(g);
  }
  // Continued-fraction convergents with bounded denominators.
  double x = value;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(x);
    if (std::fabs(a) > 1e15) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class h = ai * h0 + h1, k = ai * k0 + k1;
    if (k > 100000000) break;
    Rational g(h, k);
    g.canonicalize();
    out.push_back(g);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    double frac = x - a;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return out;
}

}  // namespace

double RealRoot::approx() const {
  if (exact) return exact->get_d();
  return Rational((lo + hi) / 2).get_d();
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Scalar(-1) * r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sturm_sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p, const IsolationOptions& opt) {
  if (p.is_zero()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
  if (!p.is_real()) throw DimensionMismatch("Sturm isolation needs real coefficients");
  std::vector<RealRoot> out;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    Isolator iso(factor, mult, opt);
    iso.run(out);
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
  });
  return out;
}

std::vector<RealRoot> isolate_real_roots_float(const Polynomial& p, double eps) {
  if (p.is_zero()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
  std::vector<RealRoot> out;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    for (auto z : companion_roots(factor)) {
      if (std::fabs(z.imag()) >= eps) continue;
      RealRoot r;
      r.lo = r.hi = Rational(z.real());
      r.multiplicity = mult;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

std::vector<RealRoot> real_roots(const Polynomial& p, const IsolationOptions& opt) {
  if (p.is_zero()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
  if (p.is_real()) return isolate_real_roots(p, opt);
  // A real x is a root iff it is a common root of the real and imaginary parts.
  Polynomial g = gcd(p.real_part(), p.imag_part());
  std::vector<RealRoot> roots = g.degree() > 0 ? isolate_real_roots(g, opt) : std::vector<RealRoot>{};
  // Multiplicities refer to p, not to the gcd.
  for (auto& r : roots) {
    if (!r.exact) continue;
    int m = 0;
    Polynomial q = p;
    while (!q.is_zero() && q(Scalar(*r.exact)).is_zero()) {
      ++m;
      q = divmod(q, Polynomial::linear(Scalar(*r.exact))).first;
    }
    r.multiplicity = m;
  }
  return roots;
}

std::vector<Scalar> gaussian_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  std::vector<Scalar> found;
  if (p.degree() <= 0) return found;
  Polynomial s = square_free_part(p);
  mpz_class denom = denominator_lcm(s);
  auto known = [&](const Scalar& z) {
    return std::any_of(found.begin(), found.end(), [&](const Scalar& w) { return w == z; });
  };
  if (s.degree() == 1) {
    found.push_back(-s.coeff(0));
    return found;
  }
  for (auto z : companion_roots(s)) {
    auto re = rational_guesses(z.real(), denom);
    auto im = rational_guesses(z.imag(), denom);
    re.emplace_back(0);
    im.emplace_back(0);
    bool done = false;
    for (const auto& a : re) {
      for (const auto& b : im) {
        Scalar cand(a, b);
        if (std::abs(cand.to_complex() - z) > 1e-6 * std::max(1.0, std::abs(z))) continue;
        if (s(cand).is_zero()) {
          if (!known(cand)) found.push_back(cand);
          done = true;
          break;
        }
      }
      if (done) break;
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  return found;
}

}  // namespace obsalg
