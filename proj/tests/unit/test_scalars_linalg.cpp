#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "obsalg/errors.hpp"
#include "obsalg/matrix.hpp"
#include "obsalg/polynomial.hpp"
#include "obsalg/roots.hpp"
#include "obsalg/signature.hpp"

using namespace obsalg;

namespace {

Matrix rows(std::vector<std::vector<Scalar>> r) { return Matrix::from_rows(r); }

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, bool complex = false) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      long re = static_cast<long>(rng() % 5) - 2, im = complex ? static_cast<long>(rng() % 5) - 2 : 0;
      m(i, j) = Scalar(Rational(re), Rational(im));
    }
  return m;
}

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial::linear(Scalar(r));
  return p;
}

std::vector<Rational> exact_roots(const std::vector<RealRoot>& rs) {
  std::vector<Rational> out;
  for (const auto& r : rs) {
    EXPECT_TRUE(r.is_exact());
    if (r.exact) out.push_back(*r.exact);
  }
  return out;
}

}  // namespace

TEST(Scalar, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -0.25 "), Rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Scalar, GaussianArithmetic) {
  Scalar i = Scalar::i();
  EXPECT_EQ(i * i, Scalar(-1));
  Scalar z(Rational(1), Rational(2));
  EXPECT_EQ(z * z.conj(), Scalar(5));
  EXPECT_EQ(z / z, Scalar(1));
  EXPECT_THROW(z / Scalar(0), Singular);
}

TEST(Nullspace, RankOneSymmetric) {
  auto ns = nullspace(rows({{1, 1}, {1, 1}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], -ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());
}

TEST(Nullspace, FullRankIsEmpty) { EXPECT_TRUE(nullspace(Matrix::identity(3)).empty()); }

TEST(Nullspace, SingleRow) {
  Matrix m = rows({{1, 2, 3}});
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
  EXPECT_EQ(independent_subset(ns).size(), 2u);
}

TEST(Nullspace, RankNullityProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix m = random_matrix(r, c, rng, trial % 2 == 1);
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 20) {
    Matrix m = random_matrix(4, 4, rng, true);
    if (rank(m) < 4) {
      EXPECT_THROW(inverse(m), Singular);
      continue;
    }
    EXPECT_EQ(inverse(m) * m, Matrix::identity(4));
    ++checked;
  }
  EXPECT_THROW(inverse(rows({{1, 2}, {2, 4}})), Singular);
}

TEST(Solve, ConsistentAndInconsistent) {
  Matrix m = rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(solve(m, {Scalar(1), Scalar(2)}).has_value());
  auto x = solve(m, {Scalar(2), Scalar(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m * *x, (Vector{Scalar(2), Scalar(2)}));
}

TEST(Roots, ExamplesExact) {
  auto sq = [](int a2, int a1, int a0) { return Polynomial({Scalar(a0), Scalar(a1), Scalar(a2)}); };
  EXPECT_EQ(exact_roots(real_roots(sq(1, 0, -1))), (std::vector<Rational>{-1, 1}));
  EXPECT_TRUE(real_roots(sq(1, 0, 1)).empty());
  Polynomial cubic({Scalar(2), Scalar(-1), Scalar(-2), Scalar(1)});
  EXPECT_EQ(exact_roots(real_roots(cubic)), (std::vector<Rational>{-1, 1, 2}));
}

TEST(Roots, RationalRootsMatchConstruction) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> roots;
    std::size_t deg = 1 + rng() % 5;
    for (std::size_t k = 0; k < deg; ++k)
      roots.push_back(Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4)));
    for (auto& r : roots) r.canonicalize();
    auto found = real_roots(from_roots(roots));
    std::vector<Rational> distinct = roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    ASSERT_EQ(found.size(), distinct.size());
    for (std::size_t k = 0; k < found.size(); ++k) {
      ASSERT_TRUE(found[k].is_exact());
      EXPECT_EQ(*found[k].exact, distinct[k]);
      EXPECT_EQ(found[k].multiplicity, std::count(roots.begin(), roots.end(), distinct[k]));
    }
  }
}

TEST(Roots, IrrationalRootsIsolated) {
  // x^2 - 2: two simple roots near +-1.41421356.
  auto rs = real_roots(Polynomial({Scalar(-2), Scalar(0), Scalar(1)}));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_NEAR(rs[0].approx(), -1.41421356237, 1e-9);
  EXPECT_NEAR(rs[1].approx(), 1.41421356237, 1e-9);
  EXPECT_LT(rs[1].lo * rs[1].lo, 2);
  EXPECT_GT(rs[1].hi * rs[1].hi, 2);
}

TEST(Roots, SturmCountMatchesIsolation) {
  Polynomial p = from_roots({-3, Rational(1, 2), 2}) * Polynomial({Scalar(1), Scalar(0), Scalar(1)});
  auto chain = sturm_chain(p);
  EXPECT_EQ(sturm_sign_changes(chain, Rational(-10)) - sturm_sign_changes(chain, Rational(10)), 3);
  EXPECT_EQ(sturm_sign_changes(chain, Rational(0)) - sturm_sign_changes(chain, Rational(1)), 1);
}

TEST(Roots, GaussianRational) {
  Polynomial p = Polynomial::linear(Scalar::i()) * Polynomial::linear(Scalar(Rational(1, 2)));
  auto rs = gaussian_rational_roots(p);
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_TRUE(std::find(rs.begin(), rs.end(), Scalar::i()) != rs.end());
  EXPECT_TRUE(std::find(rs.begin(), rs.end(), Scalar(Rational(1, 2))) != rs.end());
}

TEST(Roots, FloatModeAgrees) {
  auto rs = isolate_real_roots_float(from_roots({-1, 1, 2}));
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_NEAR(rs[0].approx(), -1, 1e-9);
  EXPECT_NEAR(rs[2].approx(), 2, 1e-9);
}

TEST(Polynomial, ExtendedGcdBezoutIdentity) {
  Polynomial a = from_roots({1, 2, 3}), b = from_roots({2, 5});
  Bezout bz = extended_gcd(a, b);
  EXPECT_EQ(bz.gcd, Polynomial::linear(Scalar(2)));
  EXPECT_EQ(bz.s * a + bz.t * b, bz.gcd);
}

TEST(Polynomial, SquareFreePart) {
  Polynomial f = from_roots({1, 1, -2});
  EXPECT_EQ(square_free_part(f), from_roots({1, -2}));
  auto dec = square_free_decomposition(f);
  ASSERT_EQ(dec.size(), 2u);
  EXPECT_THROW(square_free_part(Polynomial()), ZeroPolynomial);
}

TEST(Polynomial, DivmodReconstructs) {
  Polynomial a({Scalar(1), Scalar(Rational(1, 3)), Scalar(0), Scalar(2)}), b({Scalar(-1), Scalar(1)});
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(Signature, Examples) {
  EXPECT_EQ(hermitian_signature(Matrix::identity(2)), (Inertia{2, 0}));
  EXPECT_EQ(hermitian_signature(Matrix::diagonal({Scalar(1), Scalar(-1)})), (Inertia{1, 1}));
  EXPECT_EQ(hermitian_signature(rows({{0, 1}, {1, 0}})), (Inertia{1, 1}));
  EXPECT_THROW(hermitian_signature(rows({{0, 1}, {0, 0}})), NotHermitian);
  EXPECT_THROW(hermitian_signature(rows({{1, 1}, {1, 1}})), Singular);
}

TEST(Signature, CongruenceInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    // H = diag(d) with random signs, P random invertible: sig(P H P^dagger) = sig(H).
    Vector d;
    Inertia expect;
    for (int k = 0; k < 4; ++k) {
      long v = static_cast<long>(rng() % 4) + 1;
      if (rng() % 2) {
        v = -v;
        ++expect.negative;
      } else {
        ++expect.positive;
      }
      d.push_back(Scalar(v));
    }
    Matrix p = random_matrix(4, 4, rng, true);
    if (rank(p) < 4) continue;
    Matrix h = p * Matrix::diagonal(d) * p.adjoint();
    EXPECT_EQ(hermitian_signature(h), expect);
    auto cd = congruence_diagonalize(h);
    EXPECT_EQ(cd.transform * h * cd.transform.adjoint(), Matrix::diagonal(cd.diagonal));
  }
}
