#pragma once

#include "formalpde/completion.hpp"
#include "formalpde/hilbert.hpp"
#include "formalpde/parser.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace formalpde {

struct AnalysisOptions {
  std::uint64_t seed = 0;
  unsigned hilbert_truncation = 8;
  CompletionOptions completion;
};

// FNV-1a 64 of the canonical rendering, as 16 hex digits.
std::string digest(const LinearSystem& sys);

// Sections of the full report. Each takes the input system and completes it
// itself where needed.
nlohmann::json input_section(const SystemDocument& doc);
nlohmann::json completion_section(const IntegrabilityReport& rep);
nlohmann::json involution_section(const LinearSystem& completed, const InvolutionOptions& opts);
nlohmann::json acyclicity_section(const LinearSystem& completed, unsigned extra_orders);
nlohmann::json hilbert_section(const LinearSystem& completed, unsigned truncation);
nlohmann::json inverse_section(const LinearSystem& completed);
nlohmann::json purity_section(const LinearSystem& sys, const InvolutionOptions& opts);

nlohmann::json analyze(const SystemDocument& doc, const AnalysisOptions& opts = {});

// True when the report carries a window-inconclusive completion verdict.
bool inconclusive(const nlohmann::json& report);

// Indented "key: value" listing of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace formalpde
