#include "obsalg/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

Json indices_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json roots_json(const std::vector<RealRoot>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) {
    if (r.exact) {
      out.push_back(to_string(*r.exact));
    } else {
      Json j{{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"approx", r.approx()}};
      if (r.cluster > 1) j["cluster"] = r.cluster;
      out.push_back(j);
    }
  }
  return out;
}

Json blocks_json(const std::vector<std::pair<std::size_t, std::size_t>>& s) {
  Json out = Json::array();
  for (const auto& [size, mult] : s) out.push_back(Json::array({size, mult}));
  return out;
}

}  // namespace

Json to_json(const AxiomCheck& c) {
  Json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.passed) {
    j["witness"] = indices_json(c.witness);
    j["residual"] = vector_to_json(c.residual);
  }
  return j;
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

Json to_json(const ClassificationReport& r) {
  Json j{{"case", to_string(r.kind)}};
  if (r.lambda_mu)
    j["lambda_mu"] = Json{{"lambda", scalar_to_json(r.lambda_mu->lambda)}, {"mu", scalar_to_json(r.lambda_mu->mu)}};
  else
    j["lambda_mu"] = nullptr;
  if (r.hbar)
    j["hbar"] = to_string(*r.hbar);
  else if (r.hbar_squared)
    j["hbar"] = "sqrt(" + to_string(*r.hbar_squared) + ")";
  else
    j["hbar"] = nullptr;
  j["residual"] = to_string(r.residual);
  if (r.witness) j["witness"] = Json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const AssociativityResult& r) {
  Json j{{"passed", r.passed}};
  if (!r.passed) {
    j["witness"] = Json::array({(*r.witness)[0], (*r.witness)[1], (*r.witness)[2]});
    j["residual"] = vector_to_json(r.residual);
  }
  return j;
}

Json to_json(const SpectrumResult& r) {
  Json j{{"min_poly", to_string(r.min_poly)},
         {"min_poly_coeffs", vector_to_json(r.min_poly.coeffs())},
         {"spectrum", roots_json(r.spectrum)},
         {"nonreal_roots", r.nonreal_roots},
         {"repeated_roots", r.repeated_roots},
         {"axiom8_ok", r.axiom8_ok},
         {"axiom9_ok", r.axiom9_ok}};
  if (r.nilpotent_witness) j["nilpotent_witness"] = vector_to_json(*r.nilpotent_witness);
  return j;
}

Json to_json(const WedderburnResult& w) {
  Json seeds = Json::array();
  for (auto s : w.seeds) seeds.push_back(s);
  Json idem = Json::array();
  for (const auto& b : w.blocks) idem.push_back(vector_to_json(b.central_idempotent));
  return Json{{"blocks", blocks_json(w.summary())},
              {"center_dim", w.center_dim},
              {"central_idempotents", idem},
              {"basis_change", matrix_to_json(w.basis_change)},
              {"seeds", seeds}};
}

Json to_json(const StarSummand& s) {
  Json j{{"type", to_string(s.type)}, {"size", s.size}, {"blocks", indices_json(s.blocks)}};
  if (s.signature) j["signature"] = Json::array({s.signature->positive, s.signature->negative});
  if (s.conjugator) {
    j["conjugator"] = matrix_to_json(*s.conjugator);
    j["conjugator_normalization"] = "max(|Re|, |Im|) over entries = 1, first nonzero diagonal entry positive";
  }
  if (s.witness) j["witness"] = vector_to_json(*s.witness);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json to_json(const StructureReport& r) {
  Json rad = Json::array();
  for (const auto& v : r.radical_basis) rad.push_back(vector_to_json(v));
  Json j{{"semisimple", r.semisimple}, {"radical_dim", r.radical_basis.size()}, {"radical_basis", rad}};
  if (r.wedderburn) j["wedderburn"] = to_json(*r.wedderburn);
  j["blocks"] = r.wedderburn ? blocks_json(r.wedderburn->summary()) : Json::array();
  if (r.star_analyzed) {
    Json s = Json::array();
    for (const auto& x : r.star_summands) s.push_back(to_json(x));
    j["star_summands"] = s;
  }
  return j;
}

Json to_json(const HochschildReport& r) {
  Json j{{"dims", Json::array({r.dims[0], r.dims[1], r.dims[2]})},
         {"rank_d1", r.rank_d1},
         {"rank_d2", r.rank_d2},
         {"h2_dim", r.h2_dim},
         {"normalization", "unit-normalized cochains"}};
  if (!r.cocycle_basis.empty()) {
    Json cs = Json::array();
    for (const auto& t : r.cocycle_basis) {
      Json entries = Json::array();
      const std::size_t n = t.dim();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (const auto& [k, v] : t.nonzeros(a, b)) entries.push_back(Json::array({a, b, k, scalar_to_json(v)}));
      cs.push_back(entries);
    }
    j["cocycle_basis"] = cs;
  }
  return j;
}

Json to_json(const StarRigidityResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"size", c.h.rows()},
                          {"signature", Json::array({c.signature.positive, c.signature.negative})},
                          {"exact_positive", c.exact_positive},
                          {"cholesky_residual", c.cholesky_residual},
                          {"passed", c.passed}});
  return Json{{"passed", r.passed},
              {"t", to_string(r.t)},
              {"seed", r.seed},
              {"samples", r.samples},
              {"block_sizes", indices_json(r.block_sizes)},
              {"checks", checks}};
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["input"] = r.assoc_input ? "associative" : "two-product";
  j["seed"] = r.options.seed;
  j["samples"] = r.options.samples;
  j["verdict"] = to_string(r.verdict);
  if (!r.stage.empty()) j["stage"] = r.stage;
  if (!r.axiom.empty()) j["axiom"] = r.axiom;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.witness) j["witness"] = vector_to_json(*r.witness);
  if (r.witness_spectrum) j["witness_spectrum"] = to_json(*r.witness_spectrum);
  Json stages;
  if (r.axioms) stages["axioms"] = to_json(*r.axioms);
  if (r.classification) stages["classification"] = to_json(*r.classification);
  if (r.hull_associativity) stages["hull_associativity"] = to_json(*r.hull_associativity);
  if (r.structure) stages["structure"] = to_json(*r.structure);
  Json spec{{"samples_checked", r.samples_checked}};
  if (r.spectrum_violation)
    spec["violation"] = Json{{"origin", r.spectrum_violation->origin},
                             {"element", vector_to_json(r.spectrum_violation->element)},
                             {"result", to_json(r.spectrum_violation->result)}};
  stages["spectrum"] = spec;
  Json rig;
  if (r.hochschild) rig["hochschild"] = to_json(*r.hochschild);
  if (r.star_rigidity) rig["star"] = to_json(*r.star_rigidity);
  stages["rigidity"] = rig;
  j["stages"] = stages;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json envelope(const std::string& kind, const std::string& label, const Json& body) {
  Json j{{"schema", kReportSchema}, {"kind", kind}, {"label", label}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

namespace {

const std::set<std::string>& known_kinds() {
  static const std::set<std::string> k{"verify", "classify", "decompose", "spectrum", "rigidity", "pipeline"};
  return k;
}

Json get_or_null(const Json& j, const Json::json_pointer& p) { return j.contains(p) ? j.at(p) : Json(nullptr); }

/// Fields that do not depend on the basis the algebra was written in.
Json invariant_fields(const Json& r) {
  const std::string kind = r.at("kind");
  Json e{{"label", r.at("label")}, {"kind", kind}};
  using P = Json::json_pointer;
  if (kind == "verify") {
    e["passed"] = r.at("passed");
    Json failed = Json::array();
    for (const auto& c : r.at("checks"))
      if (!c.at("passed").get<bool>()) failed.push_back(c.at("name"));
    e["failed_checks"] = failed;
  } else if (kind == "classify") {
    e["case"] = r.at("case");
    e["lambda_mu"] = r.at("lambda_mu");
    e["hbar"] = r.at("hbar");
  } else if (kind == "decompose") {
    e["semisimple"] = r.at("semisimple");
    e["radical_dim"] = r.at("radical_dim");
    e["blocks"] = r.at("blocks");
    if (r.contains("star_summands")) {
      std::vector<std::string> types;
      for (const auto& s : r.at("star_summands")) types.push_back(s.at("type"));
      std::sort(types.begin(), types.end());
      e["star_types"] = types;
    }
  } else if (kind == "spectrum") {
    e["min_poly"] = r.at("min_poly");
    e["spectrum"] = r.at("spectrum");
    e["axiom8_ok"] = r.at("axiom8_ok");
    e["axiom9_ok"] = r.at("axiom9_ok");
  } else if (kind == "rigidity") {
    e["h2_dim"] = get_or_null(r, P("/hochschild/h2_dim"));
    e["star_rigid"] = get_or_null(r, P("/star/passed"));
  } else if (kind == "pipeline") {
    e["verdict"] = r.at("verdict");
    e["axiom"] = r.value("axiom", "");
    e["case"] = get_or_null(r, P("/stages/classification/case"));
    e["lambda_mu"] = get_or_null(r, P("/stages/classification/lambda_mu"));
    e["hbar"] = get_or_null(r, P("/stages/classification/hbar"));
    e["blocks"] = get_or_null(r, P("/stages/structure/blocks"));
    e["h2_dim"] = get_or_null(r, P("/stages/rigidity/hochschild/h2_dim"));
  }
  return e;
}

std::string human_line(const Json& e) {
  std::ostringstream os;
  os << e.at("label").get<std::string>() << " [" << e.at("kind").get<std::string>() << "]";
  for (auto it = e.begin(); it != e.end(); ++it) {
    if (it.key() == "label" || it.key() == "kind") continue;
    os << " " << it.key() << "=" << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  return os.str();
}

}  // namespace

Summary summarize_reports(const std::vector<Json>& reports) {
  std::vector<Json> entries;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Json& r = reports[i];
    if (!r.is_object() || !r.contains("schema") || r.at("schema") != kReportSchema)
      throw SchemaMismatch("report " + std::to_string(i) + ": expected \"schema\": " + std::to_string(kReportSchema));
    if (!r.contains("kind") || !r.at("kind").is_string() || !known_kinds().count(r.at("kind").get<std::string>()))
      throw SchemaMismatch("report " + std::to_string(i) + ": unknown or missing \"kind\"");
    if (!r.contains("label")) throw SchemaMismatch("report " + std::to_string(i) + ": missing \"label\"");
    try {
      entries.push_back(invariant_fields(r));
    } catch (const nlohmann::json::exception& e) {
      throw SchemaMismatch("report " + std::to_string(i) + ": " + e.what());
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Json& a, const Json& b) {
    auto ka = std::make_pair(a.at("label").get<std::string>(), a.at("kind").get<std::string>());
    auto kb = std::make_pair(b.at("label").get<std::string>(), b.at("kind").get<std::string>());
    return ka < kb;
  });
  Summary s;
  s.machine = Json{{"schema", kReportSchema}, {"kind", "summary"}, {"entries", entries}};
  for (const auto& e : entries) s.human += human_line(e) + "\n";
  return s;
}

}  // namespace obsalg
