#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mobility/measures.hpp"

namespace mobility {

/// A period-0 base vector plus named period-1 candidates of the same length.
struct ScenarioSet {
    StatusVector base;
    std::vector<std::pair<std::string, StatusVector>> scenarios;
};

/// Measure-by-scenario value matrix rendered with a fixed decimal count and a
/// '.' separator, independent of locale.
struct ResultTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
    std::vector<std::vector<double>> values;  // [row][column]
};

struct ParsedProfile {
    std::vector<std::string> ids;
    MovementProfile profile;
};

/// Reads `id,u,v` CSV (LF or CRLF). Throws MissingHeader / BadNumber with the
/// 1-based line number / DuplicateId, plus the profile invariant errors.
ParsedProfile parse_profile_csv(std::istream& in);
ParsedProfile load_profile_csv(const std::string& path);

/// Writes a profile back out in the same `id,u,v` schema at full precision.
void write_profile_csv(std::ostream& out, const ParsedProfile& p);

/// Reads `id,group` CSV and resolves the labels against the profile's ids.
/// Throws UnknownGroupId for ids missing from either side.
SubgroupPartition parse_groups_csv(std::istream& in, const std::vector<std::string>& ids);
SubgroupPartition load_groups_csv(const std::string& path,
                                  const std::vector<std::string>& ids);

/// Reads `{"base": [...], "scenarios": {"label": [...]}}`.
ScenarioSet parse_scenario_json(const std::string& text);
ScenarioSet load_scenario_json(const std::string& path);

/// Locale-independent fixed rendering, e.g. render_value(1.0/3, 3) == "0.333";
/// infinities render as "inf"/"-inf".
std::string render_value(double value, int decimals);

std::string table_to_tsv(const ResultTable& t, int decimals);
std::string table_to_json(const ResultTable& t, int decimals);

/// Built-in reference scenario set: base (10, 20, 40) with the seven period-1
/// variants 1a..1g (shifted, rescaled and reranked incomes).
ScenarioSet builtin_scenarios();

/// Reference tables computed from built-in data: 1 = the two statistical
/// indices on two log-income cases; 2 = the ten comparison indices across the
/// scenarios (alpha = 1 for RG/BC, log status for the statistical pair);
/// 4 = the six class measures (alpha 0, gamma 1, sample-variance t1,
/// distance-based p). Throws BadArguments for other ids.
ResultTable run_paper_tables(int which);

/// Evaluates one measure across a scenario set (one column per scenario).
ResultTable scenario_table(const ScenarioSet& set, const MeasureSpec& spec);

struct PropertyReport;  // axioms.hpp
std::string report_to_json(const PropertyReport& report);

}  // namespace mobility
