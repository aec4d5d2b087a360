#include "obsalg/trichotomy.hpp"

#include "obsalg/errors.hpp"

namespace obsalg {

std::string to_string(Case c) {
  switch (c) {
    case Case::Case1Poisson: return "Case1Poisson";
    case Case::Case2RealAssociative: return "Case2RealAssociative";
    case Case::Case3ComplexAssociative: return "Case3ComplexAssociative";
    case Case::Abelian: return "Abelian";
    case Case::Inconsistent: return "Inconsistent";
  }
  return "?";
}

Vector associator(const TwoProductAlgebra& alg, const Vector& a, const Vector& b, const Vector& c) {
  return alg.tau(alg.tau(a, b), c) - alg.tau(a, alg.tau(b, c));
}

namespace {

struct Row {
  Vector assoc, nested;  // assoc(A,B,C) and [[A,C],B]
};

Row row_for(const TwoProductAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  const auto& t = alg.tau();
  const auto& b = alg.bracket();
  const std::size_t n = alg.dim();
  Vector ei = unit_vector(n, i), ek = unit_vector(n, k);
  Row r;
  r.assoc = t.apply(t.basis_product(i, j), ek) - t.apply(ei, t.basis_product(j, k));
  r.nested = b.apply(b.basis_product(i, k), unit_vector(n, j));
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace

namespace {

void tag_case(ClassificationReport& rep) {
  const LambdaMu& lm = *rep.lambda_mu;
  if (lm.lambda.is_zero()) {
    rep.kind = Case::Inconsistent;
    rep.reason = "pair (0 : 1) on a nonabelian algebra: the nested bracket vanishes while tau is not associative";
    return;
  }
  if (!lm.mu.is_real()) {
    rep.kind = Case::Inconsistent;
    rep.reason = "mu is not real";
    return;
  }
  int s = sgn(lm.mu.re());
  if (s == 0) {
    rep.kind = Case::Case1Poisson;
    return;
  }
  rep.kind = s < 0 ? Case::Case2RealAssociative : Case::Case3ComplexAssociative;
  rep.hbar_squared = rational_abs(lm.mu.re());
  rep.hbar = rational_sqrt(*rep.hbar_squared);
}

}  // namespace

ClassificationReport estimate_lambda_mu(const TwoProductAlgebra& alg) {
  const std::size_t n = alg.dim();
  ClassificationReport rep;
  if (alg.bracket().is_zero()) {
    rep.kind = Case::Abelian;
    rep.reason = "bracket vanishes identically";
    return rep;
  }
  // The first triple (lexicographic) with a nonzero row fixes the candidate
  // pair lambda : mu = nested : assoc; every other row must then agree.
  std::optional<LambdaMu> cand;
  for (std::size_t i = 0; i < n && !cand; ++i)
    for (std::size_t j = 0; j < n && !cand; ++j)
      for (std::size_t k = 0; k < n && !cand; ++k) {
        Row r = row_for(alg, i, j, k);
        for (std::size_t c = 0; c < n; ++c) {
          if (r.assoc[c].is_zero() && r.nested[c].is_zero()) continue;
          Scalar lambda = r.nested[c], mu = r.assoc[c];
          if (!lambda.is_zero()) {
            mu = mu / lambda;
            lambda = Scalar(1);
          } else {
            mu = Scalar(1);
          }
          cand = LambdaMu{lambda, mu};
          rep.witness = Triple{i, j, k};
          break;
        }
      }
  if (!cand) {
    rep.kind = Case::Abelian;
    rep.reason = "associator and nested bracket both vanish identically";
    return rep;
  }
  rep.lambda_mu = cand;
  Rational worst = 0;
  std::optional<Triple> worst_at;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Row r = row_for(alg, i, j, k);
        Rational d = max_norm2(cand->lambda * r.assoc - cand->mu * r.nested);
        if (d > worst) {
          worst = d;
          worst_at = Triple{i, j, k};
        }
      }
  if (worst_at) {
    rep.kind = Case::Inconsistent;
    rep.residual = worst;
    rep.witness = worst_at;
    rep.lambda_mu.reset();
    rep.reason = "no single pair (lambda : mu) fits every basis triple";
    return rep;
  }
  tag_case(rep);
  return rep;
}

ClassificationReport classify(const TwoProductAlgebra& alg) { return estimate_lambda_mu(alg); }

AssocAlgebra build_associative(const TwoProductAlgebra& alg, const ClassificationReport& report) {
  const std::size_t n = alg.dim();
  switch (report.kind) {
    case Case::Case1Poisson:
    case Case::Abelian:
      return AssocAlgebra(alg.label(), Field::Real, alg.tau(), alg.unit());
    case Case::Case2RealAssociative:
    case Case::Case3ComplexAssociative: {
      if (!report.hbar) throw NotClassified("hbar^2 = " + to_string(*report.hbar_squared) + " is not a rational square");
      const bool complex = report.kind == Case::Case3ComplexAssociative;
      Scalar coeff = complex ? Scalar(Rational(0), *report.hbar) : Scalar(*report.hbar);
      std::vector<Scalar> dense(n * n * n);
      for (std::size_t idx = 0; idx < dense.size(); ++idx)
        dense[idx] = alg.tau().dense()[idx] + coeff * alg.bracket().dense()[idx];
      std::optional<Star> star;
      if (complex) star = Star{Matrix::identity(n), true};
      return AssocAlgebra(alg.label(), complex ? Field::Complex : Field::Real, StructureTensor(n, std::move(dense)),
                          alg.unit(), std::move(star));
    }
    case Case::Inconsistent: break;
  }
  throw NotClassified("algebra '" + alg.label() + "' has no consistent classification");
}

AssociativityResult verify_associativity(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto& p = alg.product();
  AssociativityResult res;
  Rational worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector eij = p.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = p.apply(eij, unit_vector(n, k)) - p.apply(ei, p.basis_product(j, k));
        Rational size = max_norm2(d);
        if (size > worst) {
          worst = size;
          res.passed = false;
          res.witness = Triple{i, j, k};
          res.residual = std::move(d);
        }
      }
    }
  }
  return res;
}

TwoProductAlgebra recover_two_product(const AssocAlgebra& hull, const ClassificationReport& report,
                                      const std::string& label) {
  if (report.kind != Case::Case2RealAssociative && report.kind != Case::Case3ComplexAssociative)
    throw NotClassified("only cases 2 and 3 encode the bracket in the hull");
  if (!report.hbar) throw NotClassified("hbar is not rational");
  const std::size_t n = hull.dim();
  const bool complex = report.kind == Case::Case3ComplexAssociative;
  Scalar denom = complex ? Scalar(Rational(0), 2 * *report.hbar) : Scalar(2 * *report.hbar);
  const Scalar half(Rational(1, 2));
  TensorBuilder br(n), tau(n);
  const auto& p = hull.product();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        tau(i, j, k) = half * (p(i, j, k) + p(j, i, k));
        br(i, j, k) = (p(i, j, k) - p(j, i, k)) / denom;
      }
  return TwoProductAlgebra(label, Field::Real, std::move(br).build(), std::move(tau).build(), hull.unit());
}

bool compatible_with_mu(const TwoProductAlgebra& alg, const Scalar& mu) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Row r = row_for(alg, i, j, k);
        if (!is_zero(r.assoc - mu * r.nested)) return false;
      }
  return true;
}

}  // namespace obsalg
