#pragma once

#include <string>
#include <vector>

#include "obsalg/io.hpp"
#include "obsalg/pipeline.hpp"

namespace obsalg {

inline constexpr int kReportSchema = 1;

Json to_json(const AxiomCheck& c);
Json to_json(const AxiomReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const AssociativityResult& r);
Json to_json(const SpectrumResult& r);
Json to_json(const WedderburnResult& w);
Json to_json(const StarSummand& s);
Json to_json(const StructureReport& r);
Json to_json(const HochschildReport& r);
Json to_json(const StarRigidityResult& r);
Json to_json(const PipelineReport& r);

/// {"schema": 1, "kind": kind, "label": label} followed by the body's fields.
Json envelope(const std::string& kind, const std::string& label, const Json& body);

struct Summary {
  Json machine;
  std::string human;
};

/// Validates each report ("schema" == 1, known "kind") and extracts the
/// basis-independent fields, sorted by (label, kind). Throws SchemaMismatch.
Summary summarize_reports(const std::vector<Json>& reports);

}  // namespace obsalg
