#include <gtest/gtest.h>

#include "obsalg/axioms.hpp"
#include "obsalg/basis.hpp"
#include "obsalg/composite.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/trichotomy.hpp"
#include "oracle.hpp"

using namespace obsalg;

namespace {
const Scalar kQuarter{Rational(1, 4)};
}

TEST(Composite, PauliPauliMatchesKroneckerOracle) {
  auto p = oracle::corpus_tp("pauli");
  auto pp = tensor_compose(p, p, kQuarter);
  EXPECT_EQ(pp.dim(), 16u);
  EXPECT_EQ(pp.label(), "pauli*pauli");
  EXPECT_EQ(pp, oracle::hermitian_two_product("pp", oracle::pauli_strings(2)));
}

TEST(Composite, PauliPauliSpotValues) {
  auto p = oracle::corpus_tp("pauli");
  auto pp = tensor_compose(p, p, kQuarter);
  // [e1(x)e1, e2(x)e1] = 2 e3(x)e0
  EXPECT_EQ(pp.bracket(unit_vector(16, 5), unit_vector(16, 9)), Scalar(2) * unit_vector(16, 12));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Vector lhs = pp.bracket(unit_vector(16, a), unit_vector(16, b));
      Vector rhs = zero_vector(16);
      for (const auto& [k, v] : p.bracket().nonzeros(a, b)) rhs[k] += v;  // e0(x)e_k has index k
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Composite, PassesAxiomsAndKeepsInvariant) {
  auto p = oracle::corpus_tp("pauli");
  auto m = oracle::corpus_tp("m2r-jordan");
  auto q = oracle::corpus_tp("poisson3");
  auto pp = tensor_compose(p, p, kQuarter);
  auto mm = tensor_compose(m, m, -kQuarter);
  auto qq = tensor_compose(q, q, Scalar(0));
  for (const auto* alg : {&pp, &mm, &qq}) {
    EXPECT_TRUE(verify(*alg).passed()) << alg->label();
  }
  EXPECT_EQ(classify(pp).lambda_mu->mu, kQuarter);
  EXPECT_EQ(classify(mm).lambda_mu->mu, -kQuarter);
  EXPECT_EQ(classify(qq).kind, Case::Case1Poisson);
}

TEST(Composite, PoissonTensorProduct) {
  auto q = oracle::corpus_tp("poisson3");
  auto qq = tensor_compose(q, q, Scalar(0));
  // [x(x)1, y(x)1] = x(x)1 with x(x)1 = 3, y(x)1 = 6.
  EXPECT_EQ(qq.bracket(unit_vector(9, 3), unit_vector(9, 6)), unit_vector(9, 3));
}

TEST(Composite, Embeddings) {
  auto p = oracle::corpus_tp("pauli");
  auto pp = tensor_compose(p, p, kQuarter);
  Matrix e1 = embed_factor(p, p, 1), e2 = embed_factor(p, p, 2);
  EXPECT_EQ(e1.column(3), unit_vector(16, 12));
  EXPECT_EQ(e1 * p.unit(), pp.unit());
  EXPECT_EQ(e2 * p.unit(), pp.unit());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vector bi = unit_vector(4, i), bj = unit_vector(4, j);
      EXPECT_EQ(pp.bracket(e1 * bi, e1 * bj), e1 * p.bracket(bi, bj));
      EXPECT_EQ(pp.tau(e1 * bi, e1 * bj), e1 * p.tau(bi, bj));
      EXPECT_TRUE(is_zero(pp.bracket(e1 * bi, e2 * bj)));
    }
}

TEST(Composite, SwapIsIsomorphism) {
  auto p = oracle::corpus_tp("pauli");
  auto sp = scramble(p, 3).first;
  auto t = oracle::trivial_algebra();
  for (auto [a, b] : {std::pair{p, sp}, std::pair{t, p}}) {
    auto ab = tensor_compose(a, b, kQuarter), ba = tensor_compose(b, a, kQuarter);
    EXPECT_EQ(change_basis(ab, swap_matrix(a.dim(), b.dim()).transpose()), ba);
  }
}

TEST(Composite, Reassociation) {
  auto q = oracle::corpus_tp("poisson3");
  auto p = oracle::corpus_tp("pauli");
  auto t = oracle::trivial_algebra();
  EXPECT_TRUE(reassociation_check(q, q, q, Scalar(0)));
  EXPECT_TRUE(reassociation_check(t, p, p, kQuarter));
  EXPECT_EQ(tensor_compose(t, tensor_compose(p, p, kQuarter), kQuarter), tensor_compose(p, p, kQuarter));
}

TEST(Composite, ErrorPaths) {
  auto p = oracle::corpus_tp("pauli");
  auto m = oracle::corpus_tp("m2r-jordan");
  EXPECT_THROW(tensor_compose(p, m, kQuarter), IncompatibleInvariants);
  EXPECT_THROW(tensor_compose(p, p, -kQuarter), IncompatibleInvariants);
  EXPECT_THROW(tensor_compose(oracle::corpus_tp("bad-poisson"), p, kQuarter), AxiomFailure);
  ComposeOptions force;
  force.unchecked = true;
  auto bad = tensor_compose(p, m, kQuarter, force);
  const AxiomReport rep = verify(bad);
  const AxiomCheck* j = rep.find("jacobi");
  ASSERT_NE(j, nullptr);
  EXPECT_FALSE(j->passed);
  EXPECT_EQ(j->witness.size(), 3u);
}
