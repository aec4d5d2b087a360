// obsalg: command-line front end for the observable-algebra library.
//
// Exit codes: 0 success (pipeline: QM-like), 1 a violated axiom or failed
// physical requirement, 2 bad input or any other error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "obsalg/axioms.hpp"
#include "obsalg/composite.hpp"
#include "obsalg/deformation.hpp"
#include "obsalg/errors.hpp"
#include "obsalg/io.hpp"
#include "obsalg/pipeline.hpp"
#include "obsalg/report.hpp"
#include "obsalg/spectrum.hpp"
#include "obsalg/structure.hpp"
#include "obsalg/trichotomy.hpp"

using namespace obsalg;

namespace {

struct Common {
  bool json = false;
  std::string out;
};

/// Prints the human text (or the JSON report with --json) and writes the JSON
/// report to -o when given.
void emit(const Common& c, const Json& report, const std::string& human) {
  if (c.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << report.dump(2) << "\n";
  }
}

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string triple(const Triple& t) {
  return "(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")";
}

std::string indices(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? ", " : "") + std::to_string(w[k]);
  return s + ")";
}

/// The associative algebra a command should work on: the input itself, or the
/// hull of a two-product algebra.
AssocAlgebra hull_of(const AnyAlgebra& alg) {
  if (const auto* a = std::get_if<AssocAlgebra>(&alg)) return *a;
  const auto& tp = std::get<TwoProductAlgebra>(alg);
  return build_associative(tp, classify(tp));
}

Vector parse_element(const std::string& text, std::size_t dim) {
  Vector v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    v.push_back(Scalar(parse_rational(part)));
  }
  if (v.size() != dim)
    throw DimensionMismatch("element has " + std::to_string(v.size()) + " coordinates, algebra has dim " +
                            std::to_string(dim));
  return v;
}

std::string spectrum_text(const SpectrumResult& r) {
  std::ostringstream os;
  os << "min_poly: " << to_string(r.min_poly) << "\n";
  os << "spectrum: {";
  for (std::size_t k = 0; k < r.spectrum.size(); ++k) os << (k ? ", " : "") << root_to_string(r.spectrum[k]);
  os << "}\n";
  os << "non-real roots: " << (r.nonreal_roots ? "yes" : "no") << "\n";
  os << "repeated roots: " << (r.repeated_roots ? "yes" : "no") << "\n";
  os << "axiom 8: " << (r.axiom8_ok ? "ok" : "violated") << "\n";
  os << "axiom 9: " << (r.axiom9_ok ? "ok" : "violated") << "\n";
  if (r.nilpotent_witness) os << "nilpotent witness: " << to_string(*r.nilpotent_witness) << "\n";
  return os.str();
}

std::string blocks_text(const WedderburnResult& w) {
  std::string s = "[";
  auto sm = w.summary();
  for (std::size_t k = 0; k < sm.size(); ++k)
    s += (k ? ", " : "") + std::string("(") + std::to_string(sm[k].first) + "," + std::to_string(sm[k].second) + ")";
  return s + "]";
}

int cmd_verify(const Common& c, const std::string& path) {
  AnyAlgebra alg = load_algebra_file(path);
  std::ostringstream os;
  Json body;
  bool ok = true;
  if (const auto* tp = std::get_if<TwoProductAlgebra>(&alg)) {
    AxiomReport r = verify(*tp);
    body = to_json(r);
    ok = r.passed();
    for (const auto& ch : r.checks) {
      os << ch.name << ": " << (ch.passed ? "ok" : "FAILED");
      if (!ch.passed) os << " at " << indices(ch.witness) << ", defect " << to_string(ch.residual);
      os << "\n";
    }
  } else {
    const auto& a = std::get<AssocAlgebra>(alg);
    AssociativityResult r = verify_associativity(a);
    AxiomReport rep;
    rep.checks.push_back({"associativity", r.passed,
                          r.witness ? std::vector<std::size_t>{(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]}
                                    : std::vector<std::size_t>{},
                          r.residual});
    if (a.star()) {
      auto defect = star_defect(a.product(), *a.star());
      rep.checks.push_back({"star", !defect, {}, {}});
      if (defect) os << "star: FAILED (" << *defect << ")\n";
    }
    body = to_json(rep);
    ok = rep.passed();
    os << "associativity: " << (r.passed ? "ok" : "FAILED at " + triple(*r.witness)) << "\n";
  }
  os << (ok ? "all checks passed\n" : "violations found\n");
  emit(c, envelope("verify", label_of(alg), body), os.str());
  return ok ? 0 : 1;
}

int cmd_classify(const Common& c, const std::string& path) {
  AnyAlgebra alg = load_algebra_file(path);
  const auto* tp = std::get_if<TwoProductAlgebra>(&alg);
  if (!tp) throw ParseError("classify expects a two-product algebra (bracket and tau)");
  ClassificationReport r = classify(*tp);
  Json body = to_json(r);
  std::ostringstream os;
  os << "case: " << to_string(r.kind) << "\n";
  os << "lambda:mu = " << (r.lambda_mu ? to_string(r.lambda_mu->lambda) + " : " + to_string(r.lambda_mu->mu) : "-")
     << "\n";
  os << "hbar = " << (body["hbar"].is_null() ? "-" : str(body["hbar"])) << "\n";
  if (r.witness) os << "witness: " << triple(*r.witness) << "\n";
  if (!r.reason.empty()) os << "reason: " << r.reason << "\n";
  emit(c, envelope("classify", tp->label(), body), os.str());
  return (r.kind == Case::Abelian || r.kind == Case::Inconsistent) ? 1 : 0;
}

int cmd_compose(const Common& c, const std::string& pa, const std::string& pb, const std::string& mu, bool force) {
  AnyAlgebra a = load_algebra_file(pa), b = load_algebra_file(pb);
  const auto* ta = std::get_if<TwoProductAlgebra>(&a);
  const auto* tb = std::get_if<TwoProductAlgebra>(&b);
  if (!ta || !tb) throw ParseError("compose expects two two-product algebras");
  ComposeOptions opt;
  opt.unchecked = force;
  TwoProductAlgebra ab = tensor_compose(*ta, *tb, Scalar(parse_rational(mu)), opt);
  Json doc = to_json(ab);
  std::ostringstream os;
  os << "composed " << ab.label() << ", dim " << ab.dim() << ", mu = " << mu << (force ? " (unchecked)" : "") << "\n";
  int rc = 0;
  if (force) {
    AxiomReport r = verify(ab);
    if (const AxiomCheck* bad = r.first_failure()) {
      os << bad->name << " fails at " << indices(bad->witness) << "\n";
      rc = 1;
    }
  }
  if (c.json) std::cout << doc.dump(2) << "\n";
  else std::cout << os.str();
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << doc.dump(1) << "\n";
  }
  return rc;
}

int cmd_decompose(const Common& c, const std::string& path, bool star, std::uint64_t seed) {
  AnyAlgebra alg = load_algebra_file(path);
  AssocAlgebra h = hull_of(alg);
  StructureReport r = analyze_structure(h, star, seed);
  std::ostringstream os;
  os << "radical dim: " << r.radical_basis.size() << "\n";
  os << "semisimple: " << (r.semisimple ? "yes" : "no") << "\n";
  if (r.wedderburn) {
    os << "blocks (size,multiplicity): " << blocks_text(*r.wedderburn) << "\n";
    os << "center dim: " << r.wedderburn->center_dim << "\n";
    os << "seeds:";
    for (auto s : r.wedderburn->seeds) os << " " << s;
    os << "\n";
  }
  for (const auto& s : r.star_summands) {
    os << "star summand: " << to_string(s.type) << " size " << s.size;
    if (s.signature) os << " signature (" << s.signature->positive << "," << s.signature->negative << ")";
    if (s.witness) os << " witness " << to_string(*s.witness);
    os << "\n";
  }
  if (star && !r.star_analyzed) os << "star: not analyzed (no star, or not semisimple)\n";
  Json body = to_json(r);
  body["seed"] = seed;
  emit(c, envelope("decompose", h.label(), body), os.str());
  return r.semisimple ? 0 : 1;
}

int cmd_spectrum(const Common& c, const std::string& path, const std::string& element, double eps, bool use_float) {
  AnyAlgebra alg = load_algebra_file(path);
  SpectrumOptions opt;
  opt.float_mode = use_float;
  opt.float_eps = eps;
  Vector x = parse_element(element, dim_of(alg));
  SpectrumResult r = std::visit([&](const auto& a) { return physical_spectrum(a, x, opt); }, alg);
  Json body = to_json(r);
  body["element"] = vector_to_json(x);
  emit(c, envelope("spectrum", label_of(alg), body), spectrum_text(r));
  return r.axiom8_ok && r.axiom9_ok ? 0 : 1;
}

int cmd_rigidity(const Common& c, const std::string& path, std::uint64_t seed, std::size_t samples,
                 const std::string& t) {
  AnyAlgebra alg = load_algebra_file(path);
  AssocAlgebra h = hull_of(alg);
  HochschildReport hr = h2_dimension(h);
  std::ostringstream os;
  os << "cochain dims: " << hr.dims[0] << ", " << hr.dims[1] << ", " << hr.dims[2] << "\n";
  os << "rank d1 = " << hr.rank_d1 << ", rank d2 = " << hr.rank_d2 << "\n";
  os << "h2 dim: " << hr.h2_dim << "\n";
  Json body{{"hochschild", to_json(hr)}};
  bool star_ok = false;
  try {
    StarRigidityResult sr = star_rigidity_check(h, parse_rational(t), seed, samples);
    star_ok = sr.passed;
    body["star"] = to_json(sr);
    os << "star rigidity: " << (sr.passed ? "passed" : "FAILED") << " (" << sr.samples << " perturbations, t = " << t
       << ", seed " << seed << ")\n";
  } catch (const Error& e) {
    body["star"] = Json{{"passed", false}, {"error", e.what()}};
    os << "star rigidity: not applicable (" << e.what() << ")\n";
  }
  emit(c, envelope("rigidity", h.label(), body), os.str());
  return hr.h2_dim == 0 && star_ok ? 0 : 1;
}

int cmd_pipeline(const Common& c, const std::string& path, std::uint64_t seed, std::size_t samples, double eps,
                 bool use_float) {
  AnyAlgebra alg = load_algebra_file(path);
  PipelineOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.spectrum.float_mode = use_float;
  opt.spectrum.float_eps = eps;
  PipelineReport r = run_pipeline(alg, opt);
  std::ostringstream os;
  os << r.label << ": " << to_string(r.verdict);
  if (!r.axiom.empty()) os << " (axiom " << r.axiom << ")";
  os << "\n";
  if (!r.stage.empty()) os << "stage: " << r.stage << "\n";
  if (!r.reason.empty()) os << "reason: " << r.reason << "\n";
  if (r.witness) os << "witness: " << to_string(*r.witness) << "\n";
  if (r.classification) {
    const auto& cl = *r.classification;
    os << "case: " << to_string(cl.kind);
    if (cl.lambda_mu) os << ", lambda:mu = " << to_string(cl.lambda_mu->lambda) << " : " << to_string(cl.lambda_mu->mu);
    if (cl.hbar) os << ", hbar = " << to_string(*cl.hbar);
    os << "\n";
  }
  if (r.structure && r.structure->wedderburn) os << "blocks: " << blocks_text(*r.structure->wedderburn) << "\n";
  if (r.hochschild) os << "h2 dim: " << r.hochschild->h2_dim << "\n";
  os << "seed " << seed << ", " << r.samples_checked << " observables sampled\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  emit(c, envelope("pipeline", r.label, to_json(r)), os.str());
  return exit_code(r);
}

int cmd_report(const Common& c, const std::vector<std::string>& files) {
  std::vector<Json> reports;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw ParseError("cannot open " + f);
    try {
      reports.push_back(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(f + ": " + e.what());
    }
  }
  Summary s = summarize_reports(reports);
  emit(c, s.machine, s.human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observable-algebra toolkit: axioms, classification, structure, spectra, rigidity"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Common common;
  app.add_flag("--json", common.json, "Print the JSON report instead of text");
  app.add_option("-o,--output", common.out, "Write the JSON report (compose: the algebra) to this file");

  std::string a, b, mu, element = "", t = "1/10";
  std::uint64_t seed = 0;
  std::size_t samples = 50, rig_samples = 20;
  double eps = 1e-9;
  bool star = false, force = false, use_float = false;
  std::vector<std::string> files;

  auto* verify_cmd = app.add_subcommand("verify", "Check the Lie, tau and derivation axioms (or associativity)");
  verify_cmd->add_option("algebra", a)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Estimate (lambda:mu) and the trichotomy case");
  classify_cmd->add_option("algebra", a)->required();
  auto* compose_cmd = app.add_subcommand("compose", "Tensor-compose two two-product algebras");
  compose_cmd->add_option("A", a)->required();
  compose_cmd->add_option("B", b)->required();
  compose_cmd->add_option("--mu", mu, "Shared invariant mu as p/q")->required();
  compose_cmd->add_flag("--force", force, "Skip factor validation and report the resulting axiom failure");
  auto* decompose_cmd = app.add_subcommand("decompose", "Radical, Wedderburn blocks and star classification");
  decompose_cmd->add_option("algebra", a)->required();
  decompose_cmd->add_flag("--star", star, "Classify the star on each block");
  decompose_cmd->add_option("--seed", seed);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Minimal polynomial and physical spectrum of an element");
  spectrum_cmd->add_option("algebra", a)->required();
  spectrum_cmd->add_option("--element", element, "Comma-separated coordinates, e.g. 0,0,0,1")->required();
  spectrum_cmd->add_flag("--float", use_float, "Numerical roots instead of exact isolation");
  spectrum_cmd->add_option("--float-eps", eps);
  auto* rigidity_cmd = app.add_subcommand("rigidity", "Hochschild H^2 and star rigidity");
  rigidity_cmd->add_option("algebra", a)->required();
  rigidity_cmd->add_option("--seed", seed);
  rigidity_cmd->add_option("--samples", rig_samples);
  rigidity_cmd->add_option("-t", t, "Perturbation size as p/q");
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run every stage and print the verdict");
  pipeline_cmd->add_option("algebra", a)->required();
  pipeline_cmd->add_option("--seed", seed);
  pipeline_cmd->add_option("--samples", samples, "Random observables sampled for the spectral axioms");
  pipeline_cmd->add_flag("--float", use_float);
  pipeline_cmd->add_option("--float-eps", eps);
  auto* report_cmd = app.add_subcommand("report", "Summarize JSON reports from earlier commands");
  report_cmd->add_option("reports", files);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return cmd_verify(common, a);
    if (*classify_cmd) return cmd_classify(common, a);
    if (*compose_cmd) return cmd_compose(common, a, b, mu, force);
    if (*decompose_cmd) return cmd_decompose(common, a, star, seed);
    if (*spectrum_cmd) return cmd_spectrum(common, a, element, eps, use_float);
    if (*rigidity_cmd) return cmd_rigidity(common, a, seed, rig_samples, t);
    if (*pipeline_cmd) return cmd_pipeline(common, a, seed, samples, eps, use_float);
    if (*report_cmd) return cmd_report(common, files);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Factors that break the axioms or disagree on (lambda:mu) are a
    // physics violation, not malformed input.
    return e.kind() == "IncompatibleInvariants" || e.kind() == "AxiomFailure" ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
