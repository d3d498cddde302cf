#pragma once

// Serialisation of results: JSON (tagged unions), CSV sweep rows and the
// one-line human summaries printed by the command-line tool.

#include "multibraid/model.hpp"
#include "multibraid/resolution.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace multibraid
{

nlohmann::json to_json(const Multiplicity& m);
Multiplicity multiplicity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassificationResult& r);
ClassificationResult result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

std::string witness_kind(const ClassificationResult& r);
std::string certificate_kind(const ClassificationResult& r);

/// "FREE, witness: free vertex 0, exponents (0,1,2,3)" and similar.
std::string summary_line(const ClassificationResult& r);

/// "; oracle gap at degree 4 (dim 1); AGREE" style suffix.
std::string oracle_suffix(const ClassificationResult& closed_form,
                          const ClassificationResult& oracle);

inline constexpr const char* kCsvHeader =
    "m01,m02,m03,m12,m13,m23,verdict,witness_kind,certificate_kind,exponents,oracle_verdict,agree";

std::string csv_row(const Multiplicity& m, const ClassificationResult& r,
                    const std::optional<ClassificationResult>& oracle);

} // namespace multibraid
