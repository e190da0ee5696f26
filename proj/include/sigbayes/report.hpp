#pragma once

// Report serialization: JSON documents and aligned plain-text summaries.
// Numeric JSON fields are emitted with full round-trip precision, and huge
// likelihood ratios only ever appear as log10 values plus a scientific-
// notation string; no linear-scale float is emitted for |log10| > 300.

#include "sigbayes/baseball.hpp"
#include "sigbayes/evidence.hpp"

#include <json.hpp>

#include <string>

namespace sigbayes::report {

inline constexpr const char* kToolName = "sigbayes";
inline constexpr const char* kToolVersion = "0.1.0";

// Verbal equivalent keyed to log10 LR bands. A reporting aid only; the number
// is the finding, the words follow the number.
std::string verbal_scale(double log10_lr);

nlohmann::json tool_json();
nlohmann::json summary_json(const MatchSummary& summary);
nlohmann::json evidence_json(const EvidenceReport& report);
nlohmann::json per_game_json(const baseball::PerGameEvidence& per_game);
nlohmann::json rate_json(const baseball::BangRateEstimate& estimate,
                         const baseball::Date& from, const baseball::Date& to);

std::string evidence_text(const EvidenceReport& report, const std::string& heading);
std::string per_game_text(const baseball::PerGameEvidence& per_game);
std::string rate_text(const baseball::BangRateEstimate& estimate);

} // namespace sigbayes::report
