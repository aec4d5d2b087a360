#include <gtest/gtest.h>

#include "obsalg/basis.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/pipeline.hpp"
#include "obsalg/report.hpp"
#include "oracle.hpp"

using namespace obsalg;

namespace {

PipelineReport run(const std::string& name, std::uint64_t seed = 0) {
  PipelineOptions opt;
  opt.seed = seed;
  return run_pipeline(oracle::corpus(name), opt);
}

using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST(Pipeline, PauliIsQMLike) {
  auto r = run("pauli");
  EXPECT_EQ(r.verdict, Verdict::QMLike);
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_EQ(r.structure->wedderburn->summary(), (Blocks{{2, 1}}));
  EXPECT_EQ(*r.classification->hbar, Rational(1, 2));
  EXPECT_TRUE(r.star_rigidity && r.star_rigidity->passed);
  EXPECT_EQ(r.hochschild->h2_dim, 0u);
  EXPECT_GE(r.samples_checked, 50u);
}

TEST(Pipeline, Poisson3ExcludedByNilpotent) {
  auto r = run("poisson3");
  EXPECT_EQ(r.verdict, Verdict::Excluded);
  EXPECT_EQ(r.axiom, "9");
  EXPECT_EQ(exit_code(r), 1);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, unit_vector(3, 1));
}

TEST(Pipeline, M2rJordanRealAssociativeThenExcluded) {
  auto r = run("m2r-jordan");
  EXPECT_EQ(r.classification->kind, Case::Case2RealAssociative);
  EXPECT_TRUE(r.structure->semisimple);
  EXPECT_EQ(r.verdict, Verdict::Excluded);
  EXPECT_EQ(r.axiom, "8");
  ASSERT_TRUE(r.spectrum_violation);
  EXPECT_EQ(r.spectrum_violation->result.min_poly, Polynomial({Scalar(1), Scalar(0), Scalar(1)}));
}

TEST(Pipeline, V2ExcludedByAxiom8) {
  auto r = run("v2");
  EXPECT_EQ(r.verdict, Verdict::Excluded);
  EXPECT_EQ(r.axiom, "8");
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (Vector{Scalar::i(), -Scalar::i()}));
  ASSERT_TRUE(r.witness_spectrum);
  EXPECT_TRUE(r.witness_spectrum->spectrum.empty());
}

TEST(Pipeline, IndefiniteExcludedWithHermitianNilpotent) {
  auto r = run("m2c-indefinite");
  EXPECT_EQ(r.verdict, Verdict::Excluded);
  EXPECT_EQ(r.axiom, "9");
  ASSERT_TRUE(r.witness);
  AssocAlgebra a = oracle::corpus_assoc("m2c-indefinite");
  EXPECT_EQ(a.star(*r.witness), *r.witness);
  EXPECT_TRUE(is_zero(a.mul(*r.witness, *r.witness)));
}

TEST(Pipeline, OtherCorpusVerdicts) {
  EXPECT_EQ(run("bad-poisson").verdict, Verdict::Inconsistent);
  EXPECT_EQ(run("c-plus-m2").verdict, Verdict::QMLike);
  EXPECT_EQ(run("cn-diagonal").verdict, Verdict::QMLike);
  auto d = run("dual-numbers");
  EXPECT_EQ(d.verdict, Verdict::Excluded);
  EXPECT_EQ(d.axiom, "9");
}

TEST(Pipeline, DeterministicForSeed) {
  for (const auto& name : {"pauli", "v2", "c-plus-m2"})
    EXPECT_EQ(to_json(run(name, 3)).dump(), to_json(run(name, 3)).dump()) << name;
}

TEST(Pipeline, VerdictsScrambleInvariant) {
  for (const auto& name : oracle::corpus_names()) {
    auto base = run(name);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      PipelineOptions opt;
      auto r = run_pipeline(change_basis(oracle::corpus(name), scramble_matrix(dim_of(oracle::corpus(name)), seed)),
                            opt);
      EXPECT_EQ(r.verdict, base.verdict) << name << " seed " << seed;
      EXPECT_EQ(r.axiom, base.axiom) << name << " seed " << seed;
    }
  }
}

TEST(Report, SummaryOfPauliPipeline) {
  Json rep = envelope("pipeline", "pauli", to_json(run("pauli")));
  Summary s = summarize_reports({rep});
  ASSERT_EQ(s.machine["entries"].size(), 1u);
  const Json& e = s.machine["entries"][0];
  EXPECT_EQ(e["case"], "Case3ComplexAssociative");
  EXPECT_EQ(e["hbar"], "1/2");
  EXPECT_EQ(e["blocks"], Json::parse("[[2,1]]"));
  EXPECT_NE(s.human.find("Case3ComplexAssociative"), std::string::npos);
  EXPECT_NE(s.human.find("hbar=1/2"), std::string::npos);
}

TEST(Report, EmptyAndSorted) {
  Summary empty = summarize_reports({});
  EXPECT_TRUE(empty.machine["entries"].empty());
  EXPECT_TRUE(empty.human.empty());
  Json a = envelope("pipeline", "v2", to_json(run("v2")));
  Json b = envelope("pipeline", "pauli", to_json(run("pauli")));
  Summary s = summarize_reports({a, b});
  EXPECT_EQ(s.machine["entries"][0]["label"], "pauli");
  EXPECT_EQ(s.machine["entries"][1]["label"], "v2");
}

TEST(Report, ScrambledReportsHaveIdenticalInvariants) {
  for (const auto& name : {"pauli", "c-plus-m2", "m2c-indefinite"}) {
    AnyAlgebra alg = oracle::corpus(name);
    PipelineOptions opt;
    Json r0 = envelope("pipeline", name, to_json(run_pipeline(alg, opt)));
    Json r1 = envelope("pipeline", name, to_json(run_pipeline(change_basis(alg, scramble_matrix(dim_of(alg), 5)), opt)));
    Summary s0 = summarize_reports({r0}), s1 = summarize_reports({r1});
    EXPECT_EQ(s0.machine, s1.machine) << name;
    EXPECT_EQ(s0.human, s1.human);
  }
}

TEST(Report, SchemaMismatch) {
  Json rep = envelope("classify", "x", Json::object());
  rep["schema"] = 2;
  EXPECT_THROW(summarize_reports({rep}), SchemaMismatch);
  Json unknown = envelope("nonsense", "x", Json::object());
  EXPECT_THROW(summarize_reports({unknown}), SchemaMismatch);
  Json missing = envelope("classify", "x", Json::object());
  EXPECT_THROW(summarize_reports({missing}), SchemaMismatch);
}
