// One PASS/FAIL line per acceptance criterion. Exact arithmetic throughout;
// the only float tolerance is kRootTol on isolated irrational roots.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "obsalg/axioms.hpp"
#include "obsalg/basis.hpp"
#include "obsalg/composite.hpp"
#include "obsalg/deformation.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/pipeline.hpp"
#include "obsalg/spectrum.hpp"
#include "obsalg/structure.hpp"
#include "obsalg/trichotomy.hpp"
#include "oracle.hpp"

using namespace obsalg;

namespace {

constexpr double kRootTol = 1e-7;
constexpr double kTimeLimit = 10.0;  // seconds per criterion
const Scalar kQuarter{Rational(1, 4)};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

AssocAlgebra hull_of(const AnyAlgebra& alg) {
  if (const auto* a = std::get_if<AssocAlgebra>(&alg)) return *a;
  const auto& tp = std::get<TwoProductAlgebra>(alg);
  return build_associative(tp, classify(tp));
}

std::vector<double> approx(const SpectrumResult& r) {
  std::vector<double> out;
  for (const auto& x : r.spectrum) out.push_back(x.approx());
  return out;
}

std::vector<double> dedupe(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > kRootTol) out.push_back(x);
  return out;
}

double eval(const Polynomial& f, double x) {
  double acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + it->re().get_d();
  return acc;
}

bool close(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > kRootTol) return false;
  return true;
}

// Brute-force oracle: lambda = 1 and mu from the first nonzero coordinate of
// [[A,C],B], then every triple must agree. nullopt if no consistent mu.
std::optional<Scalar> brute_force_mu(const TwoProductAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::optional<Scalar> mu;
  auto e = [&](std::size_t k) { return unit_vector(n, k); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector as = alg.tau(alg.tau(e(a), e(b)), e(c)) - alg.tau(e(a), alg.tau(e(b), e(c)));
        Vector dbl = alg.bracket(alg.bracket(e(a), e(c)), e(b));
        for (std::size_t k = 0; k < n && !mu; ++k)
          if (!dbl[k].is_zero()) mu = as[k] / dbl[k];
      }
  if (!mu) mu = Scalar(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector as = alg.tau(alg.tau(e(a), e(b)), e(c)) - alg.tau(e(a), alg.tau(e(b), e(c)));
        Vector dbl = alg.bracket(alg.bracket(e(a), e(c)), e(b));
        if (as != *mu * dbl) return std::nullopt;
      }
  return mu;
}

void criterion1(Outcome& o) {
  struct Want {
    const char* name;
    Case kind;
    Scalar mu;
    Triple witness;
  };
  for (const Want& w : {Want{"pauli", Case::Case3ComplexAssociative, kQuarter, {1, 1, 2}},
                        Want{"m2r-jordan", Case::Case2RealAssociative, -kQuarter, {0, 0, 1}},
                        Want{"poisson3", Case::Case1Poisson, Scalar(0), {0, 0, 0}}}) {
    auto tp = oracle::corpus_tp(w.name);
    auto r = classify(tp);
    auto bf = brute_force_mu(tp);
    o.require(bf && *bf == w.mu, std::string(w.name) + " brute-force mu");
    o.require(r.kind == w.kind, std::string(w.name) + " case");
    o.require(r.lambda_mu && r.lambda_mu->lambda == Scalar(1) && r.lambda_mu->mu == w.mu,
              std::string(w.name) + " (lambda:mu)");
    if (w.kind != Case::Case1Poisson) o.require(r.witness == w.witness, std::string(w.name) + " witness triple");
  }
  auto p = classify(oracle::corpus_tp("pauli"));
  o.require(p.hbar && *p.hbar == Rational(1, 2), "pauli hbar");
  o.detail << "pauli (1:1/4) hbar=1/2, m2r-jordan (1:-1/4), poisson3 (1:0), brute force agrees";
}

void criterion2(Outcome& o) {
  AssocAlgebra h = hull_of(oracle::corpus("pauli"));
  const auto basis = oracle::pauli_strings(1);
  std::size_t entries = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j, ++entries)
      o.require(h.product().basis_product(i, j) == oracle::trace_coords(basis, basis[i] * basis[j]),
                "pauli hull entry " + std::to_string(i) + "," + std::to_string(j));
  o.require(h.mul(unit_vector(4, 1), unit_vector(4, 2)) == Scalar::i() * unit_vector(4, 3), "e1 e2 = i e3");
  std::size_t hulls = 0;
  for (const auto& name : oracle::corpus_names()) {
    if (name == "bad-poisson") continue;  // fails the axioms, no hull
    o.require(verify_associativity(hull_of(oracle::corpus(name))).passed, name + " hull associative");
    ++hulls;
  }
  auto tp = oracle::corpus_tp("pauli");
  auto r = verify_associativity(AssocAlgebra("tau", Field::Real, tp.tau(), tp.unit()));
  o.require(!r.passed && r.witness == Triple{1, 1, 2}, "tau alone fails at (1,1,2)");
  o.detail << entries << " product entries exact, " << hulls << " hulls associative, tau alone fails at (1,1,2)";
}

void criterion3(Outcome& o) {
  auto p = oracle::corpus_tp("pauli");
  auto pp = tensor_compose(p, p, kQuarter);
  auto ref = oracle::hermitian_two_product("pp", oracle::pauli_strings(2));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      for (std::size_t k = 0; k < 16; ++k)
        bad += (pp.bracket()(i, j, k) != ref.bracket()(i, j, k)) + (pp.tau()(i, j, k) != ref.tau()(i, j, k));
  o.require(bad == 0, std::to_string(bad) + " structure constants differ");
  o.require(pp.unit() == ref.unit(), "unit");
  o.require(verify(pp).passed(), "composite axioms");
  o.require(reassociation_check(p, p, p, kQuarter), "reassociation dim 64");
  o.detail << "16^3 bracket and tau constants exact, reassociation of pauli^3 (dim 64) holds";
}

void criterion4(Outcome& o) {
  auto p = oracle::corpus_tp("pauli");
  auto m = oracle::corpus_tp("m2r-jordan");
  bool raised = false;
  try {
    tensor_compose(p, m, kQuarter);
  } catch (const IncompatibleInvariants&) {
    raised = true;
  }
  o.require(raised, "IncompatibleInvariants");
  ComposeOptions force;
  force.unchecked = true;
  auto bad = tensor_compose(p, m, kQuarter, force);
  const AxiomReport rep = verify(bad);
  const AxiomCheck* j = rep.find("jacobi");
  o.require(j && !j->passed && j->witness.size() == 3, "forced Jacobi witness");
  if (j && !j->passed) {
    auto e = [](std::size_t k) { return unit_vector(16, k); };
    const auto& w = j->witness;
    Vector jac = bad.bracket(e(w[0]), bad.bracket(e(w[1]), e(w[2]))) +
                 bad.bracket(e(w[1]), bad.bracket(e(w[2]), e(w[0]))) +
                 bad.bracket(e(w[2]), bad.bracket(e(w[0]), e(w[1])));
    o.require(!is_zero(jac), "witness has nonzero Jacobiator");
    o.detail << "IncompatibleInvariants raised; forced composite fails Jacobi at (" << w[0] << "," << w[1] << ","
             << w[2] << ")";
  }
}

void criterion5(Outcome& o) {
  auto run = [](const std::string& n) { return run_pipeline(oracle::corpus(n)); };
  auto pauli = run("pauli");
  o.require(pauli.verdict == Verdict::QMLike, "pauli QM-like");
  auto q = run("poisson3");
  o.require(q.verdict == Verdict::Excluded && q.axiom == "9" && q.witness == unit_vector(3, 1), "poisson3 axiom 9 x");
  auto v = run("v2");
  o.require(v.verdict == Verdict::Excluded && v.axiom == "8" && v.witness == Vector{Scalar::i(), -Scalar::i()} &&
                v.witness_spectrum && v.witness_spectrum->spectrum.empty(),
            "v2 axiom 8 (i,-i)");
  auto ind = run("m2c-indefinite");
  AssocAlgebra a = oracle::corpus_assoc("m2c-indefinite");
  o.require(ind.verdict == Verdict::Excluded && ind.witness && !is_zero(*ind.witness) &&
                a.star(*ind.witness) == *ind.witness && is_zero(a.mul(*ind.witness, *ind.witness)),
            "m2c-indefinite Hermitian nilpotent");
  auto m = run("m2r-jordan");
  o.require(m.verdict == Verdict::Excluded, "m2r-jordan excluded");
  o.detail << "pauli QM-like; poisson3 axiom 9 at x; v2 axiom 8 at (i,-i); m2c-indefinite axiom " << ind.axiom
           << " at " << (ind.witness ? to_string(*ind.witness) : "-") << "; m2r-jordan axiom " << m.axiom;
}

void criterion6(Outcome& o) {
  AssocAlgebra c = oracle::corpus_assoc("c-plus-m2");
  using Blocks = std::vector<std::pair<std::size_t, std::size_t>>;
  std::size_t good = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    AssocAlgebra s = scramble(c, seed).first;
    auto w = wedderburn_decompose(s, seed);
    bool ok = w.summary() == Blocks{{1, 1}, {2, 1}} && verify_matrix_units(s, w);
    o.require(ok, "scramble " + std::to_string(seed));
    good += ok;
  }
  auto rad = radical(hull_of(oracle::corpus("dual-numbers")));
  o.require(rad.size() == 1, "dual-numbers radical dim 1");
  o.detail << good << "/10 scrambles give [(1,1),(2,1)] with exact matrix units; dual-numbers radical dim "
           << rad.size();
}

void criterion7(Outcome& o) {
  auto pauli = oracle::corpus_tp("pauli");
  auto r = physical_spectrum(pauli, unit_vector(4, 3));
  o.require(r.spectrum.size() == 2 && r.spectrum[0].exact == Rational(-1) && r.spectrum[1].exact == Rational(1),
            "pauli e3 spectrum {-1,1}");

  std::mt19937_64 rng(7);
  auto random_poly = [&] {
    std::vector<Scalar> c(1 + rng() % 4);
    for (auto& v : c) v = Scalar(static_cast<long>(rng() % 7) - 3);
    return Polynomial(c);
  };
  std::size_t checks = 0, constants = 0;
  for (const auto& name : oracle::corpus_names()) {
    if (name == "bad-poisson") continue;
    AnyAlgebra alg = oracle::corpus(name);
    std::vector<Vector> xs;
    if (const auto* a = std::get_if<AssocAlgebra>(&alg)) {
      xs = hermitian_basis(*a);
    } else {
      for (std::size_t k = 0; k < dim_of(alg); ++k) xs.push_back(unit_vector(dim_of(alg), k));
    }
    xs.push_back(xs.front() + xs.back());
    auto spec = [&](const Vector& x) { return std::visit([&](const auto& a) { return physical_spectrum(a, x); }, alg); };
    auto apply = [&](const Vector& x, const Polynomial& f) {
      return std::visit([&](const auto& a) { return poly_apply(a, x, f); }, alg);
    };
    for (const auto& x : xs)
      for (int t = 0; t < 3; ++t) {
        Polynomial f = random_poly(), g = random_poly();
        o.require(apply(apply(x, g), f) == apply(x, f.compose(g)), name + " composition");
        o.require(apply(x, f + g) == apply(x, f) + apply(x, g), name + " additivity");
        auto rx = spec(x);
        if (!rx.nonreal_roots) {
          std::vector<double> mapped;
          for (double v : approx(rx)) mapped.push_back(eval(f, v));
          o.require(close(approx(spec(apply(x, f))), dedupe(mapped)), name + " spectral mapping");
        }
        checks += 3;
      }
    Vector u = std::visit([](const auto& a) { return a.unit(); }, alg);
    for (long c : {-3L, 0L, 2L}) o.require(phantom_check(spec(Scalar(c) * u)), name + " constant");
    ++constants;
  }
  o.require(!phantom_check(physical_spectrum(oracle::corpus_tp("poisson3"), unit_vector(3, 1))), "poisson3 x phantom");
  o.detail << "pauli e3 -> {-1,1}; " << checks << " mapping/composition/additivity checks (deg <= 3); phantom "
           << "passes on " << 3 * constants << " constants, fails on poisson3 x";
}

void criterion8(Outcome& o) {
  auto h2 = [](const AssocAlgebra& a) { return h2_dimension(a).h2_dim; };
  o.require(h2(oracle::block_algebra("m2", {2})) == 0, "M2");
  o.require(h2(oracle::block_algebra("c+m2", {1, 2})) == 0, "C+M2");
  for (std::size_t n = 1; n <= 3; ++n)
    o.require(h2(oracle::block_algebra("cn", std::vector<std::size_t>(n, 1))) == 0, "C^" + std::to_string(n));
  AssocAlgebra dual = hull_of(oracle::corpus("dual-numbers"));
  TensorBuilder b(2);
  b(1, 1, 0) = 1;  // x^2 = eps: psi(x, x) = 1
  StructureTensor psi = std::move(b).build();
  o.require(hochschild_d2(dual, psi).is_zero() && !is_coboundary(dual, psi), "eps cocycle not a coboundary");
  std::size_t hd = h2(dual);
  o.require(hd >= 1, "dual h2 >= 1");
  auto sr = star_rigidity_check(oracle::block_algebra("m2", {2}), Rational(1, 10), 0, 20);
  o.require(sr.passed && sr.checks.size() == 20, "star rigidity M2");
  o.detail << "h2 = 0 for M2, C+M2, C^1..C^3; dual-numbers h2 = " << hd
           << " with explicit non-coboundary cocycle; 20 star perturbations at t=1/10 positive";
}

struct Signature {
  std::vector<bool> axioms;
  std::optional<LambdaMu> lambda_mu;
  std::string kind;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::optional<std::size_t> h2;
  std::string verdict;
  std::vector<Polynomial> min_polys;
  std::vector<std::vector<double>> spectra;

  std::string diff(const Signature& s) const {
    if (axioms != s.axioms) return "axioms";
    if (lambda_mu != s.lambda_mu) return "(lambda:mu)";
    if (kind != s.kind) return "case";
    if (blocks != s.blocks) return "blocks";
    if (h2 != s.h2) return "h2";
    if (verdict != s.verdict) return "verdict " + verdict + " vs " + s.verdict;
    if (min_polys != s.min_polys) return "minimal polynomials";
    for (std::size_t k = 0; k < spectra.size(); ++k)
      if (!close(spectra[k], s.spectra[k])) return "spectrum";
    return "";
  }
};

// `transport` maps original coordinates into the basis of `alg`.
Signature signature(const AnyAlgebra& alg, const std::vector<Vector>& xs, const Matrix& transport) {
  Signature s;
  auto rep = run_pipeline(alg);
  if (rep.axioms)
    for (const auto& c : rep.axioms->checks) s.axioms.push_back(c.passed);
  if (rep.hull_associativity) s.axioms.push_back(rep.hull_associativity->passed);
  if (rep.classification) {
    s.lambda_mu = rep.classification->lambda_mu;
    s.kind = to_string(rep.classification->kind);
  }
  if (rep.structure && rep.structure->wedderburn) s.blocks = rep.structure->wedderburn->summary();
  if (rep.hochschild) s.h2 = rep.hochschild->h2_dim;
  s.verdict = to_string(rep.verdict) + " " + rep.axiom;
  if (rep.verdict == Verdict::Inconsistent) return s;
  for (const auto& x : xs) {
    Vector y = transport * x;
    auto r = std::visit([&](const auto& a) { return physical_spectrum(a, y); }, alg);
    s.min_polys.push_back(r.min_poly);
    s.spectra.push_back(approx(r));
  }
  return s;
}

void criterion9(Outcome& o) {
  std::size_t runs = 0;
  for (const auto& name : oracle::corpus_names()) {
    AnyAlgebra alg = oracle::corpus(name);
    const std::size_t n = dim_of(alg);
    std::vector<Vector> xs;
    for (std::size_t k = 0; k < n; ++k) xs.push_back(unit_vector(n, k));
    for (std::size_t k = 0; k + 1 < n; ++k) xs.push_back(unit_vector(n, k) + unit_vector(n, k + 1));
    Signature base = signature(alg, xs, Matrix::identity(n));
    for (std::uint64_t seed = 0; seed < 10; ++seed, ++runs) {
      Matrix g = scramble_matrix(n, seed);
      std::string d = base.diff(signature(change_basis(alg, g), xs, inverse(g)));
      o.require(d.empty(), name + " seed " + std::to_string(seed) + " " + d);
    }
  }
  o.detail << runs << " scrambled runs agree on axioms, (lambda:mu), case, blocks, spectra, h2 and verdict";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < kTimeLimit, "time limit");
    failed += !o.ok;
    std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " (" << o.detail.str() << "; "
              << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
