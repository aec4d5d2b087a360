#include "obsalg/spectrum.hpp"

#include <cstdio>
#include <functional>

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

using NextPower = std::function<Vector(const Vector& a, const Vector& power)>;

Vector apply_with(const Vector& unit, const Vector& a, const Polynomial& f, const NextPower& next) {
  Vector acc = zero_vector(unit.size());
  Vector power = unit;
  for (int k = 0; k <= f.degree(); ++k) {
    if (k > 0) power = next(a, power);
    const Scalar& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) acc = acc + c * power;
  }
  return acc;
}

Polynomial min_poly_with(const Vector& unit, const Vector& a, const NextPower& next) {
  // Powers are appended until the first linear dependence; the dependence
  // coefficients give the monic annihilator of least degree.
  const std::size_t n = unit.size();
  std::vector<Vector> powers{unit};
  for (std::size_t deg = 1; deg <= n + 1; ++deg) {
    Vector p = next(a, powers.back());
    Matrix m = Matrix::from_columns(powers, n);
    if (auto sol = solve(m, p)) {
      std::vector<Scalar> coeffs(deg + 1);
      for (std::size_t k = 0; k < deg; ++k) coeffs[k] = -(*sol)[k];
      coeffs[deg] = Scalar(1);
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(std::move(p));
  }
  throw DimensionMismatch("no annihilating polynomial of degree <= dim (is the unit an identity?)");
}

NextPower two_product_next(const TwoProductAlgebra& alg) {
  return [&alg](const Vector& a, const Vector& power) {
    const Scalar half(Rational(1, 2));
    return half * (alg.square(a + power) - alg.square(a) - alg.square(power));
  };
}

NextPower assoc_next(const AssocAlgebra& alg) {
  return [&alg](const Vector& a, const Vector& power) { return alg.mul(a, power); };
}

SpectrumResult analyze(const Polynomial& min_poly, const std::function<Vector(const Polynomial&)>& apply, const SpectrumOptions& opt) {
  SpectrumResult r;
  r.min_poly = min_poly;
  std::vector<RealRoot> roots;
  if (opt.float_mode) {
    if (!min_poly.is_real()) throw DimensionMismatch("float mode needs a real minimal polynomial");
    roots = isolate_real_roots_float(min_poly, opt.float_eps);
  } else {
    roots = real_roots(min_poly);
  }
  int real_count = 0;
  for (const auto& root : roots) {
    real_count += root.multiplicity * root.cluster;
    if (root.multiplicity > 1) r.repeated_roots = true;
  }
  r.nonreal_roots = real_count < min_poly.degree();
  Polynomial sf = square_free_part(min_poly);
  if (sf.degree() < min_poly.degree()) {
    r.repeated_roots = true;
    r.nilpotent_witness = apply(sf);
  }
  r.spectrum = std::move(roots);
  for (auto& root : r.spectrum) root.multiplicity = 1;
  r.axiom8_ok = !r.nonreal_roots && !r.spectrum.empty();
  // A degree-1 minimal polynomial means A is a multiple of the unit, so the
  // one-point spectrum is legitimate; anything else with a repeated root
  // hides a nonzero nilpotent.
  bool constant = min_poly.degree() == 1;
  r.axiom9_ok = !r.repeated_roots && (constant || r.spectrum.size() != 1);
  return r;
}

}  // namespace

Vector poly_apply(const TwoProductAlgebra& alg, const Vector& a, const Polynomial& f) {
  return apply_with(alg.unit(), a, f, two_product_next(alg));
}

Vector poly_apply(const AssocAlgebra& alg, const Vector& a, const Polynomial& f) {
  return apply_with(alg.unit(), a, f, assoc_next(alg));
}

Polynomial minimal_polynomial(const TwoProductAlgebra& alg, const Vector& a) {
  return min_poly_with(alg.unit(), a, two_product_next(alg));
}

Polynomial minimal_polynomial(const AssocAlgebra& alg, const Vector& a) {
  return min_poly_with(alg.unit(), a, assoc_next(alg));
}

Polynomial minimal_polynomial(const AssocAlgebra& alg, const Vector& a, const Vector& unit) {
  return min_poly_with(unit, a, assoc_next(alg));
}

SpectrumResult physical_spectrum(const TwoProductAlgebra& alg, const Vector& a, const SpectrumOptions& opt) {
  return analyze(minimal_polynomial(alg, a),
                 [&](const Polynomial& f) { return poly_apply(alg, a, f); }, opt);
}

SpectrumResult physical_spectrum(const AssocAlgebra& alg, const Vector& a, const SpectrumOptions& opt) {
  return analyze(minimal_polynomial(alg, a),
                 [&](const Polynomial& f) { return poly_apply(alg, a, f); }, opt);
}

bool phantom_check(const SpectrumResult& r) { return r.axiom9_ok; }

std::string root_to_string(const RealRoot& r) {
  if (r.exact) return to_string(*r.exact);
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%.12g, %.12g]", r.lo.get_d(), r.hi.get_d());
  std::string s(buf);
  if (r.cluster > 1) s += " x" + std::to_string(r.cluster);
  return s;
}

}  // namespace obsalg
