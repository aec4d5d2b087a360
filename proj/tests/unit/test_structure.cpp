#include <gtest/gtest.h>

#include <algorithm>

#include "obsalg/basis.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/spectrum.hpp"
#include "obsalg/structure.hpp"
#include "obsalg/trichotomy.hpp"
#include "oracle.hpp"

using namespace obsalg;

namespace {

AssocAlgebra hull(const std::string& name) {
  auto alg = oracle::corpus(name);
  if (auto* a = std::get_if<AssocAlgebra>(&alg)) return *a;
  const auto& tp = std::get<TwoProductAlgebra>(alg);
  return build_associative(tp, classify(tp));
}

std::size_t span_dim(std::vector<Vector> vs) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_columns(vs, vs.front().size()));
}

/// Matrix-unit relations checked with raw products, independent of verify_matrix_units.
void expect_matrix_units(const AssocAlgebra& alg, const WedderburnResult& w) {
  Vector sum = zero_vector(alg.dim());
  for (std::size_t p = 0; p < w.blocks.size(); ++p) {
    const auto& bp = w.blocks[p];
    for (std::size_t a = 0; a < bp.size; ++a) sum = sum + bp.unit(a, a);
    for (std::size_t q = 0; q < w.blocks.size(); ++q) {
      const auto& bq = w.blocks[q];
      for (std::size_t a = 0; a < bp.size; ++a)
        for (std::size_t b = 0; b < bp.size; ++b)
          for (std::size_t c = 0; c < bq.size; ++c)
            for (std::size_t d = 0; d < bq.size; ++d) {
              Vector prod = alg.mul(bp.unit(a, b), bq.unit(c, d));
              if (p == q && b == c)
                ASSERT_EQ(prod, bp.unit(a, d));
              else
                ASSERT_TRUE(is_zero(prod));
            }
    }
  }
  EXPECT_EQ(sum, alg.unit());
}

/// M2 (+) M2 with the star (A, B) -> (B^dagger, A^dagger).
AssocAlgebra swapped_pair() {
  AssocAlgebra base = oracle::block_algebra("swap", {2, 2});
  Matrix s(8, 8);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      s(4 + b * 2 + a, a * 2 + b) = 1;
      s(b * 2 + a, 4 + a * 2 + b) = 1;
    }
  return base.with_star(Star{s, true});
}

}  // namespace

TEST(Radical, Examples) {
  EXPECT_TRUE(radical(hull("pauli")).empty());
  auto r = radical(hull("poisson3"));
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(span_dim({r[0], r[1], unit_vector(3, 1), unit_vector(3, 2)}), 2u);
  AssocAlgebra one("one", Field::Real, oracle::trivial_algebra().tau(), {Scalar(1)});
  EXPECT_TRUE(radical(one).empty());
  EXPECT_EQ(radical(hull("dual-numbers")).size(), 1u);
}

TEST(Radical, ElementsAreNilpotentAndBasisCovariant) {
  for (const auto& name : {"poisson3", "dual-numbers"}) {
    AssocAlgebra alg = hull(name);
    auto rad = radical(alg);
    for (const auto& v : rad) {
      EXPECT_TRUE(is_nilpotent(alg, v));
      Polynomial m = minimal_polynomial(alg, v);
      for (int k = 0; k < m.degree(); ++k) EXPECT_TRUE(m.coeff(k).is_zero());
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto [s, g] = scramble(alg, seed);
      auto rs = radical(s);
      ASSERT_EQ(rs.size(), rad.size());
      std::vector<Vector> both = rad;
      for (const auto& v : rs) both.push_back(g * v);  // back to the old coordinates
      EXPECT_EQ(span_dim(both), rad.size());
    }
  }
}

TEST(Center, Dimensions) {
  EXPECT_EQ(center(hull("pauli")).size(), 1u);
  EXPECT_EQ(center(hull("c-plus-m2")).size(), 2u);
  EXPECT_EQ(center(hull("cn-diagonal")).size(), 3u);
}

TEST(Hermitian, V2ElementsAreConjugatePairs) {
  AssocAlgebra v2 = hull("v2");
  auto hb = hermitian_basis(v2);
  EXPECT_EQ(hb.size(), 2u);
  for (const auto& h : hb) {
    EXPECT_EQ(v2.star(h), h);
    EXPECT_EQ(h[1], h[0].conj());
  }
  AssocAlgebra plain("plain", Field::Complex, v2.product(), v2.unit());
  EXPECT_THROW(hermitian_basis(plain), StarInconsistent);
}

TEST(Nilpotent, Examples) {
  AssocAlgebra ind = hull("m2c-indefinite");
  auto w = find_nilpotent(ind, true);
  ASSERT_TRUE(w);
  EXPECT_FALSE(is_zero(*w));
  EXPECT_EQ(ind.star(*w), *w);
  EXPECT_TRUE(is_zero(ind.mul(*w, *w)));
  EXPECT_FALSE(find_nilpotent(hull("pauli"), true));
  auto x = find_nilpotent(hull("poisson3"), false);
  ASSERT_TRUE(x);
  EXPECT_TRUE(is_zero(hull("poisson3").mul(*x, *x)));
}

TEST(Wedderburn, CorpusBlocks) {
  using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;
  auto p = wedderburn_decompose(hull("pauli"));
  EXPECT_EQ(p.summary(), (Blocks{{2, 1}}));
  EXPECT_EQ(p.center_dim, 1u);
  auto c = wedderburn_decompose(hull("c-plus-m2"));
  EXPECT_EQ(c.summary(), (Blocks{{1, 1}, {2, 1}}));
  EXPECT_EQ(c.center_dim, 2u);
  EXPECT_EQ(wedderburn_decompose(hull("cn-diagonal")).summary(), (Blocks{{1, 3}}));
  AssocAlgebra big = oracle::block_algebra("m1m2m2", {1, 2, 2});
  auto b = wedderburn_decompose(big);
  EXPECT_EQ(b.summary(), (Blocks{{1, 1}, {2, 2}}));
  expect_matrix_units(big, b);
  EXPECT_THROW(wedderburn_decompose(hull("dual-numbers")), NotSemisimple);
}

TEST(Wedderburn, RealHullIsComplexified) {
  using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;
  auto w = wedderburn_decompose(hull("m2r-jordan"));
  EXPECT_EQ(w.summary(), (Blocks{{2, 1}}));
}

TEST(Wedderburn, ScrambleInvariantWithExactUnits) {
  using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;
  AssocAlgebra alg = hull("c-plus-m2");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AssocAlgebra s = scramble(alg, seed).first;
    auto w = wedderburn_decompose(s, seed);
    EXPECT_EQ(w.summary(), (Blocks{{1, 1}, {2, 1}})) << "seed " << seed;
    EXPECT_TRUE(verify_matrix_units(s, w));
    expect_matrix_units(s, w);
    EXPECT_FALSE(w.seeds.empty());
  }
}

TEST(Wedderburn, BlockCoordinatesRoundTrip) {
  AssocAlgebra alg = hull("c-plus-m2");
  auto w = wedderburn_decompose(alg);
  Vector x = {Scalar(1), Scalar(-2), Scalar(Rational(1, 3)), Scalar::i(), Scalar(5)};
  auto mats = to_block_matrices(w, x);
  ASSERT_EQ(mats.size(), 2u);
  Vector back = zero_vector(5);
  for (std::size_t b = 0; b < mats.size(); ++b) back = back + from_block_matrix(w, b, mats[b]);
  EXPECT_EQ(back, x);
  // Block coordinates are multiplicative.
  Vector y = {Scalar(2), Scalar(0), Scalar(1), Scalar(-1), Scalar(1)};
  auto my = to_block_matrices(w, y), mxy = to_block_matrices(w, alg.mul(x, y));
  for (std::size_t b = 0; b < mats.size(); ++b) EXPECT_EQ(mats[b] * my[b], mxy[b]);
}

TEST(Conjugator, Examples) {
  auto adjoint = [](const Matrix& m) { return m.adjoint(); };
  EXPECT_EQ(find_conjugator_H(2, adjoint), Matrix::identity(2));

  Matrix h0 = Matrix::diagonal({Scalar(2), Scalar(-1)});
  auto via = [](Matrix h) {
    return [h](const Matrix& m) { return inverse(h) * m.adjoint() * h; };
  };
  Matrix h = find_conjugator_H(2, via(h0));
  EXPECT_EQ(h, Matrix::diagonal({Scalar(1), Scalar(Rational(-1, 2))}));
  EXPECT_EQ(hermitian_signature(h), (Inertia{1, 1}));

  Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  Matrix hs = find_conjugator_H(2, via(swap));
  EXPECT_EQ(hs, swap);
  EXPECT_EQ(hermitian_signature(hs), (Inertia{1, 1}));

  // The identity map reverses no products, so H E_ab = E_ba H has only H = 0.
  auto identity = [](const Matrix& m) { return m; };
  EXPECT_THROW(find_conjugator_H(2, identity), NoConjugator);
}

TEST(StarClassification, Corpus) {
  auto one = [](const std::string& name) {
    AssocAlgebra a = hull(name);
    return classify_star(a, wedderburn_decompose(a));
  };
  auto p = one("pauli");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].type, StarType::Standard);
  EXPECT_EQ(p[0].size, 2u);
  EXPECT_EQ(*p[0].conjugator, Matrix::identity(2));

  AssocAlgebra v2 = hull("v2");
  auto v = classify_star(v2, wedderburn_decompose(v2));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].type, StarType::V2);
  ASSERT_TRUE(v[0].witness);
  EXPECT_EQ(v2.star(*v[0].witness), *v[0].witness);
  // The witness squares to minus the unit: min poly x^2 + 1.
  EXPECT_EQ(v2.mul(*v[0].witness, *v[0].witness), Scalar(-1) * v2.unit());

  AssocAlgebra ind = hull("m2c-indefinite");
  auto i = classify_star(ind, wedderburn_decompose(ind));
  ASSERT_EQ(i.size(), 1u);
  EXPECT_EQ(i[0].type, StarType::Indefinite);
  EXPECT_EQ(i[0].size, 2u);
  EXPECT_EQ(*i[0].signature, (Inertia{1, 1}));
  ASSERT_TRUE(i[0].witness);
  EXPECT_EQ(ind.star(*i[0].witness), *i[0].witness);
  EXPECT_TRUE(is_zero(ind.mul(*i[0].witness, *i[0].witness)));

  auto c = one("c-plus-m2");
  ASSERT_EQ(c.size(), 2u);
  for (const auto& s : c) EXPECT_EQ(s.type, StarType::Standard);
}

TEST(StarClassification, SwapOfMatrixBlocks) {
  AssocAlgebra alg = swapped_pair();
  auto s = classify_star(alg, wedderburn_decompose(alg));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].type, StarType::Swap);
  ASSERT_TRUE(s[0].witness);
  EXPECT_EQ(alg.star(*s[0].witness), *s[0].witness);
  EXPECT_TRUE(is_nilpotent(alg, *s[0].witness));
}

TEST(StarClassification, ScrambleInvariantTypes) {
  for (const auto& name : {"v2", "m2c-indefinite", "c-plus-m2", "cn-diagonal"}) {
    AssocAlgebra alg = hull(name);
    auto types = [](const std::vector<StarSummand>& ss) {
      std::vector<std::string> t;
      for (const auto& s : ss) t.push_back(to_string(s.type) + std::to_string(s.size));
      std::sort(t.begin(), t.end());
      return t;
    };
    auto base = types(classify_star(alg, wedderburn_decompose(alg)));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      AssocAlgebra s = scramble(alg, seed).first;
      EXPECT_EQ(types(classify_star(s, wedderburn_decompose(s, seed))), base) << name << " seed " << seed;
    }
  }
}

TEST(StarClassification, XSquaredPlusOneIsRejectedBySpectrum) {
  AssocAlgebra v2 = hull("v2");
  auto s = classify_star(v2, wedderburn_decompose(v2));
  auto r = physical_spectrum(v2, *s[0].witness);
  EXPECT_FALSE(r.axiom8_ok);
}

TEST(Structure, AnalyzeStructure) {
  auto r = analyze_structure(hull("dual-numbers"), true);
  EXPECT_FALSE(r.semisimple);
  EXPECT_FALSE(r.wedderburn);
  auto q = analyze_structure(hull("c-plus-m2"), true);
  EXPECT_TRUE(q.semisimple && q.star_analyzed);
  EXPECT_EQ(q.star_summands.size(), 2u);
}
