#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weightvar/presentation.hpp"

namespace weightvar {

inline constexpr const char* kJsonFormat = "weightvar-presentation";
inline constexpr int kJsonVersion = 1;

struct ReportOptions {
  bool emit_certificates = false;
  bool chern = false;
};

/// Human-readable summary ending in a `poincare: ...` line.
std::string text_report(const QuotientPresentation& pres, const ReportOptions& opts = {});

/// Versioned JSON document. `poincare` lists {degree, dimension} objects for
/// the even cohomological degrees 0, 2, ..., top.
nlohmann::json to_json(const QuotientPresentation& pres, const ReportOptions& opts = {});

/// Reads the inputs back from a document produced by to_json.
ReductionInput input_from_json(const nlohmann::json& doc);

/// Rechecks every kernel certificate in the document: the witness
/// inequality and its minimality against the recorded inputs, and the
/// polynomial against a fresh ∂_vΔ(x,u_τ). Returns one message per failure.
std::vector<std::string> verify_certificates(const nlohmann::json& doc);

}  // namespace weightvar
