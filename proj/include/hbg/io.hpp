#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbg/explorer.hpp"
#include "hbg/qsim.hpp"

namespace hbg::io {

/// Insertion-ordered so that emitted documents have a stable, readable layout.
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& doc);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json matrix_to_json(const Matrix& m);
/// Throws kSchema for non-numeric entries and kDimensionMismatch for ragged rows.
Matrix matrix_from_json(const Json& j, const std::string& what);

// Game: {"kind": "game", "C": [[...]], "row_labels": [...], "col_labels": [...]}
Json game_to_json(const GameMatrix& game);
GameMatrix game_from_json(const Json& j);

// Round: {"kind": "round", "bob_upcard": "9", "dealer_upcard": "T", "shoe": ["A", ...]}
Json round_to_json(const blackjack::RoundConfig& config);
blackjack::RoundConfig round_from_json(const Json& j);

// Sweep spec: {"kind": "sweep_spec", "A": ..., "B": ..., "t_min", "t_max", "step"}
Json sweep_spec_to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const Json& j);

Json hyperbit_strategy_to_json(const HyperbitStrategy& strategy);
HyperbitStrategy hyperbit_strategy_from_json(const Json& j);
/// Accepts a solution document (uses its hyperbit strategy) or a bare strategy.
HyperbitStrategy strategy_from_document(const Json& j);

Json solution_to_json(const StrategySolution& solution);
Json analysis_to_json(const ThreeTwoAnalysis& analysis);
/// {"kind": "solution", "game": ..., "values": ..., "advantage", "method",
///  "unlimited": ..., "classical": ..., "hyperbit": ..., "analysis"?}
Json report_to_json(const GameMatrix& game, const RegimeReport& report);

Json gate_to_json(const Gate& gate);
Gate gate_from_json(const Json& j);
Json circuit_to_json(const CircuitSpec& circuit);
CircuitSpec circuit_from_json(const Json& j);

Json verification_to_json(const VerificationReport& report);

Json boundaries_to_json(const std::vector<Boundary>& boundaries);

Json record_to_json(const AdvantageRecord& record);
AdvantageRecord record_from_json(const Json& j);

/// Fixed-point-free decimal with 17 significant digits.
std::string format_double(double v);

std::string sweep_csv(const std::vector<SweepPoint>& points);
std::string catalog_csv(const Catalog& catalog);
/// Parses a catalog CSV. Strata and threshold are not part of the CSV and
/// are left empty.
std::vector<AdvantageRecord> records_from_csv(const std::string& text);

/// Blackjack tables, read from $HBG_CACHE_DIR when a valid cache exists and
/// written there otherwise. Without the variable, tables are computed.
const blackjack::Tables& cached_tables();
Json tables_to_json(const blackjack::Tables& tables);
blackjack::Tables tables_from_json(const Json& j);

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string content_hash(const std::string& bytes);

struct ValidationReport {
  bool ok = true;
  std::string kind;
  std::vector<std::string> problems;
};

/// Schema and invariant checks without running solvers. `intent` names the
/// command the file is meant for ("blackjack", "value", ...), or is empty.
/// Never throws for malformed content; problems are listed instead.
ValidationReport validate_document(const Json& doc, const std::string& intent = "");
ValidationReport validate_file(const std::filesystem::path& path,
                               const std::string& intent = "");
Json validation_to_json(const ValidationReport& report);

}  // namespace hbg::io
