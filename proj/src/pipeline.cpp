#include "obsalg/pipeline.hpp"

#include <random>

#include "obsalg/errors.hpp"

namespace obsalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::QMLike: return "QM-like";
    case Verdict::ClassicalLike: return "Classical-like";
    case Verdict::RealAssociative: return "RealAssociative";
    case Verdict::Excluded: return "Excluded";
    case Verdict::Inconsistent: return "Inconsistent";
  }
  return "?";
}

int exit_code(const PipelineReport& r) { return r.verdict == Verdict::QMLike ? 0 : 1; }

std::vector<SpectrumSample> sample_observables(const std::vector<Vector>& basis, std::uint64_t seed,
                                               std::size_t random_count) {
  std::vector<SpectrumSample> out;
  if (basis.empty()) return out;
  const std::size_t n = basis.front().size();
  for (std::size_t i = 0; i < basis.size(); ++i) out.push_back({"b" + std::to_string(i), basis[i], {}});
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      std::string bi = "b" + std::to_string(i), bj = "b" + std::to_string(j);
      out.push_back({bi + " + " + bj, basis[i] + basis[j], {}});
      out.push_back({bi + " - " + bj, basis[i] - basis[j], {}});
    }
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < random_count; ++r) {
    Vector x = zero_vector(n);
    for (const auto& b : basis) {
      long c = static_cast<long>(rng() % 7) - 3;
      if (c != 0) x = x + Scalar(c) * b;
    }
    out.push_back({"random " + std::to_string(r), std::move(x), {}});
  }
  return out;
}

namespace {

template <class Fn>
auto in_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(stage) + ": " + e.what());
  }
}

std::string indices(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? ", " : "") + std::to_string(w[k]);
  return s + ")";
}

bool is_real_vector(const Vector& v) {
  for (const auto& c : v)
    if (!c.is_real()) return false;
  return true;
}

// A real semisimple algebra other than R^n holds an element with non-real
// spectrum: a conjugate pair of central idempotents f, conj(f) gives
// i(f - conj f), a real element squaring to -(f + conj f); a real block of
// size >= 2 is M_n(R) and a seeded search in f A finds one. nullopt means the
// algebra is R^n; an empty sample means the search ran out.
std::optional<std::optional<SpectrumSample>> structural_axiom8(const AssocAlgebra& hull, const WedderburnResult& w,
                                                               std::uint64_t seed, auto&& spectrum_of) {
  bool required = false;
  for (const auto& b : w.blocks) {
    if (!is_real_vector(b.central_idempotent)) {
      Vector x = Scalar::i() * (b.central_idempotent - conj(b.central_idempotent));
      SpectrumSample s{"i(f - conj f) for a non-real central idempotent f", x, spectrum_of(x)};
      if (!s.result.axiom8_ok) return std::optional<SpectrumSample>(s);
      required = true;
    }
  }
  const std::size_t n = hull.dim();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& b : w.blocks) {
    if (b.size < 2 || !is_real_vector(b.central_idempotent)) continue;
    required = true;
    for (int t = 0; t < 4000; ++t) {
      Vector y = zero_vector(n);
      for (std::size_t k = 0; k < n; ++k) y[k] = Scalar(static_cast<long>(rng() % 19) - 9);
      Vector x = hull.mul(b.central_idempotent, y);
      SpectrumSample s{"seeded search in a real matrix block (" + std::to_string(t) + ")", x, spectrum_of(x)};
      if (!s.result.axiom8_ok) return std::optional<SpectrumSample>(s);
    }
  }
  if (!required) return std::nullopt;
  return std::optional<SpectrumSample>{};
}

class Pipeline {
 public:
  Pipeline(PipelineReport& rep) : rep_(rep) {}

  void exclude(const std::string& stage, const std::string& axiom, const std::string& reason,
               std::optional<Vector> witness) {
    if (decided_) return;
    decided_ = true;
    rep_.verdict = Verdict::Excluded;
    rep_.stage = stage;
    rep_.axiom = axiom;
    rep_.reason = reason;
    rep_.witness = std::move(witness);
  }

  void inconsistent(const std::string& stage, const std::string& reason) {
    decided_ = true;
    rep_.verdict = Verdict::Inconsistent;
    rep_.stage = stage;
    rep_.reason = reason;
  }

  bool decided() const { return decided_; }

 private:
  PipelineReport& rep_;
  bool decided_ = false;
};

}  // namespace

PipelineReport run_pipeline(const AnyAlgebra& input, const PipelineOptions& opt) {
  PipelineReport rep;
  rep.options = opt;
  rep.label = label_of(input);
  rep.dim = dim_of(input);
  Pipeline pl(rep);

  const TwoProductAlgebra* tp = std::get_if<TwoProductAlgebra>(&input);
  rep.assoc_input = tp == nullptr;
  std::optional<AssocAlgebra> hull;
  std::vector<Vector> observables;

  if (tp) {
    rep.axioms = in_stage("verify", [&] { return verify(*tp); });
    if (const AxiomCheck* bad = rep.axioms->first_failure()) {
      pl.inconsistent("verify", bad->name + " fails at " + indices(bad->witness));
      return rep;
    }
    rep.classification = in_stage("classify", [&] { return classify(*tp); });
    if (rep.classification->kind == Case::Inconsistent) {
      pl.inconsistent("classify", rep.classification->reason);
      return rep;
    }
    if (rep.classification->kind == Case::Abelian)
      rep.notes.push_back("abelian bracket: the hull is tau itself and (lambda : mu) is undetermined");
    hull = in_stage("hull", [&] { return build_associative(*tp, *rep.classification); });
    for (std::size_t k = 0; k < tp->dim(); ++k) observables.push_back(unit_vector(tp->dim(), k));
  } else {
    hull = std::get<AssocAlgebra>(input);
    observables = hull->star() ? hermitian_basis(*hull) : std::vector<Vector>{};
    if (!hull->star())
      for (std::size_t k = 0; k < hull->dim(); ++k) observables.push_back(unit_vector(hull->dim(), k));
  }

  rep.hull_associativity = in_stage("hull", [&] { return verify_associativity(*hull); });
  if (!rep.hull_associativity->passed) {
    auto w = *rep.hull_associativity->witness;
    pl.inconsistent("hull", "product is not associative at " + indices({w[0], w[1], w[2]}));
    return rep;
  }

  const bool has_star = hull->star().has_value();
  rep.structure = in_stage("structure", [&] { return analyze_structure(*hull, true, opt.seed); });
  const StructureReport& sr = *rep.structure;
  auto spectrum_of = [&](const Vector& x) {
    return tp ? physical_spectrum(*tp, x, opt.spectrum) : physical_spectrum(*hull, x, opt.spectrum);
  };

  if (!sr.semisimple) {
    std::optional<Vector> nil = in_stage("structure", [&] { return find_nilpotent(*hull, has_star, opt.seed); });
    pl.exclude("structure", "9", "nonzero radical: a nonzero nilpotent observable has one-point spectrum {0}", nil);
    if (nil) rep.witness_spectrum = spectrum_of(*nil);
  } else if (sr.star_analyzed) {
    for (const auto& s : sr.star_summands)
      if (s.type == StarType::V2) {
        pl.exclude("structure", "8", "V2 summand: the Hermitian element i f_k - i f_j has no real spectrum", s.witness);
        if (s.witness) rep.witness_spectrum = spectrum_of(*s.witness);
      }
    for (const auto& s : sr.star_summands)
      if (s.type == StarType::Indefinite || s.type == StarType::Swap) {
        pl.exclude("structure", "9", to_string(s.type) + " star summand: it contains a nonzero Hermitian nilpotent",
                   s.witness);
        if (s.witness) rep.witness_spectrum = spectrum_of(*s.witness);
      }
  }

  in_stage("spectrum", [&] {
    std::optional<SpectrumSample> first8, first9;
    for (auto& s : sample_observables(observables, opt.seed, opt.samples)) {
      s.result = spectrum_of(s.element);
      ++rep.samples_checked;
      if (!s.result.axiom8_ok && !first8) first8 = s;
      if (!s.result.axiom9_ok && !first9) first9 = s;
    }
    // Sampling depends on the basis; for real hulls the axiom 8 decision is
    // structural so the verdict does not.
    bool structural8 = false;
    if (!first8 && !has_star && hull->field() == Field::Real && sr.semisimple && sr.wedderburn) {
      if (auto found = structural_axiom8(*hull, *sr.wedderburn, opt.seed, spectrum_of)) {
        if (*found) first8 = **found;
        else structural8 = true;
      }
    }
    if (structural8) {
      pl.exclude("spectrum", "8", "real semisimple hull is not R^n, so some observable has non-real spectrum "
                                  "(no explicit witness found within the search budget)", std::nullopt);
    } else if (first8) {
      rep.spectrum_violation = first8;
      if (!pl.decided()) rep.witness_spectrum = first8->result;
      pl.exclude("spectrum", "8", "observable " + first8->origin + " has minimal polynomial " +
                                      to_string(first8->result.min_poly) + " with non-real roots or no real root",
                 first8->element);
    } else if (first9) {
      rep.spectrum_violation = first9;
      if (!pl.decided()) rep.witness_spectrum = first9->result;
      pl.exclude("spectrum", "9", "observable " + first9->origin + " has minimal polynomial " +
                                      to_string(first9->result.min_poly) + " with a repeated root",
                 first9->element);
    }
    return 0;
  });

  bool all_standard = sr.star_analyzed;
  for (const auto& s : sr.star_summands) all_standard = all_standard && s.type == StarType::Standard;
  if (sr.semisimple) {
    if (hull->dim() <= 8)
      rep.hochschild = in_stage("rigidity", [&] { return h2_dimension(*hull); });
    else
      rep.notes.push_back("Hochschild computation skipped: dim > 8");
    if (all_standard)
      rep.star_rigidity = in_stage("rigidity", [&] {
        return star_rigidity_check(*hull, opt.rigidity_t, opt.seed, opt.rigidity_samples);
      });
  }

  if (!pl.decided()) {
    const bool case3 = tp ? rep.classification->kind == Case::Case3ComplexAssociative : has_star;
    const bool case2 = tp && rep.classification->kind == Case::Case2RealAssociative;
    if (case3 && sr.semisimple && all_standard) {
      rep.verdict = Verdict::QMLike;
    } else if (case2) {
      rep.verdict = Verdict::RealAssociative;
    } else {
      rep.verdict = Verdict::ClassicalLike;
    }
  }
  return rep;
}

}  // namespace obsalg
