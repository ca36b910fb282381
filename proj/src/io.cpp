#include "mobility/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mobility/axioms.hpp"

namespace mobility {

namespace {

using nlohmann::json;

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        fail(Errc::BadNumber, "bad number '" + text + "' on line " + std::to_string(line_no));
    }
    while (used < text.size() && (text[used] == ' ' || text[used] == '\t')) ++used;
    if (used != text.size())
        fail(Errc::BadNumber, "bad number '" + text + "' on line " + std::to_string(line_no));
    return value;
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadArguments, "cannot open '" + path + "'");
    return in;
}

}  // namespace

ParsedProfile parse_profile_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || split_csv(strip_cr(line)) != std::vector<std::string>{"id", "u", "v"})
        fail(Errc::MissingHeader, "expected header 'id,u,v'");
    ParsedProfile out;
    StatusVector u, v;
    std::set<std::string> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3)
            fail(Errc::BadNumber, "expected 3 fields on line " + std::to_string(line_no));
        if (!seen.insert(fields[0]).second)
            fail(Errc::DuplicateId, "duplicate id '" + fields[0] + "'");
        out.ids.push_back(fields[0]);
        u.push_back(parse_number(fields[1], line_no));
        v.push_back(parse_number(fields[2], line_no));
    }
    out.profile = validate_profile(std::move(u), std::move(v));
    return out;
}

ParsedProfile load_profile_csv(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_profile_csv(in);
}

void write_profile_csv(std::ostream& out, const ParsedProfile& p) {
    out << "id,u,v\n";
    char buffer[64];
    for (std::size_t i = 0; i < p.profile.size(); ++i) {
        std::snprintf(buffer, sizeof buffer, "%.17g,%.17g", p.profile.u[i], p.profile.v[i]);
        out << p.ids[i] << ',' << buffer << '\n';
    }
}

SubgroupPartition parse_groups_csv(std::istream& in, const std::vector<std::string>& ids) {
    std::string line;
    if (!std::getline(in, line) ||
        split_csv(strip_cr(line)) != std::vector<std::string>{"id", "group"})
        fail(Errc::MissingHeader, "expected header 'id,group'");
    std::map<std::string, std::string> group_of_id;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 2)
            fail(Errc::BadNumber, "expected 2 fields on line " + std::to_string(line_no));
        if (!group_of_id.emplace(fields[0], fields[1]).second)
            fail(Errc::DuplicateId, "duplicate id '" + fields[0] + "'");
    }
    std::map<std::string, std::size_t> label_index;
    std::vector<std::size_t> assignment;
    assignment.reserve(ids.size());
    for (const std::string& id : ids) {
        const auto it = group_of_id.find(id);
        if (it == group_of_id.end())
            fail(Errc::UnknownGroupId, "no group for id '" + id + "'");
        assignment.push_back(label_index.emplace(it->second, label_index.size()).first->second);
    }
    for (const auto& [id, group] : group_of_id)
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            fail(Errc::UnknownGroupId, "group file mentions unknown id '" + id + "'");
    return make_partition(std::move(assignment));
}

SubgroupPartition load_groups_csv(const std::string& path, const std::vector<std::string>& ids) {
    auto in = open_or_fail(path);
    return parse_groups_csv(in, ids);
}

ScenarioSet parse_scenario_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::BadNumber, std::string("bad scenario json: ") + e.what());
    }
    if (!doc.contains("base") || !doc.contains("scenarios"))
        fail(Errc::MissingHeader, "scenario json needs 'base' and 'scenarios'");
    ScenarioSet out;
    out.base = doc["base"].get<StatusVector>();
    for (const auto& [label, values] : doc["scenarios"].items()) {
        StatusVector v = values.get<StatusVector>();
        if (v.size() != out.base.size())
            fail(Errc::LengthMismatch, "scenario '" + label + "' length differs from base");
        out.scenarios.emplace_back(label, std::move(v));
    }
    return out;
}

ScenarioSet load_scenario_json(const std::string& path) {
    auto in = open_or_fail(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_json(buffer.str());
}

std::string render_value(double value, int decimals) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    // avoid the "-0.000" artifact
    std::string text(buffer);
    if (text.find_first_not_of("-0.") == std::string::npos && text[0] == '-') text.erase(0, 1);
    return text;
}

std::string table_to_tsv(const ResultTable& t, int decimals) {
    std::string out = "measure";
    for (const auto& c : t.column_labels) out += "\t" + c;
    out += "\n";
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
        out += t.row_labels[r];
        for (double v : t.values[r]) out += "\t" + render_value(v, decimals);
        out += "\n";
    }
    return out;
}

std::string table_to_json(const ResultTable& t, int decimals) {
    json rows = json::array();
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
        json cells = json::array();
        for (double v : t.values[r]) cells.push_back(render_value(v, decimals));
        rows.push_back(json{{"label", t.row_labels[r]}, {"values", cells}});
    }
    return json{{"columns", t.column_labels}, {"rows", rows}}.dump(2);
}

ScenarioSet builtin_scenarios() {
    ScenarioSet set;
    set.base = {10.0, 20.0, 40.0};
    set.scenarios = {
        {"1a", {20.0, 40.0, 80.0}},  {"1b", {15.0, 25.0, 45.0}}, {"1c", {20.0, 40.0, 10.0}},
        {"1d", {40.0, 80.0, 20.0}},  {"1e", {25.0, 45.0, 15.0}}, {"1f", {10.0, 30.0, 40.0}},
        {"1g", {10.0, 40.0, 160.0}},
    };
    return set;
}

ResultTable scenario_table(const ScenarioSet& set, const MeasureSpec& spec) {
    ResultTable t;
    t.row_labels = {measure_key(spec.id)};
    t.values.emplace_back();
    for (const auto& [label, v] : set.scenarios) {
        t.column_labels.push_back(label);
        t.values[0].push_back(evaluate(spec, validate_profile(set.base, v)));
    }
    return t;
}

namespace {

ResultTable statistical_case_table() {
    ResultTable t;
    t.row_labels = {"case1", "case2"};
    t.column_labels = {"1-rho", "1-beta"};
    const StatusVector x0{1.0, 2.0, 3.0};
    for (const StatusVector& x1 : {StatusVector{3.0, 2.0, 3.0}, StatusVector{3.0, 1.0, 5.0}}) {
        const auto p = validate_profile(x0, x1);
        t.values.push_back({pearson_mobility(p), elasticity_mobility(p)});
    }
    return t;
}

ResultTable comparison_index_table() {
    const ScenarioSet set = builtin_scenarios();
    ResultTable t;
    t.row_labels = {"1-beta", "1-rho", "FO1", "FO2", "S_Theil",
                    "S_Gini", "RG1",   "RG2", "BCD", "BCU"};
    for (const auto& [label, v] : set.scenarios) t.column_labels.push_back(label);
    t.values.assign(t.row_labels.size(), {});
    for (const auto& [label, v] : set.scenarios) {
        const auto p = validate_profile(set.base, v);
        const auto logs = transform_status(p, StatusTransform::log_status);
        t.values[0].push_back(elasticity_mobility(logs));
        t.values[1].push_back(pearson_mobility(logs));
        t.values[2].push_back(fields_ok(p, FieldsOkVariant::income));
        t.values[3].push_back(fields_ok(p, FieldsOkVariant::log_income));
        t.values[4].push_back(shorrocks(p, InequalityKind::theil));
        t.values[5].push_back(shorrocks(p, InequalityKind::relative_gini));
        t.values[6].push_back(ray_genicot(p, RayGenicotVariant::absolute, 1.0));
        t.values[7].push_back(ray_genicot(p, RayGenicotVariant::relative, 1.0));
        t.values[8].push_back(barcena_canto(p, BarcenaCantoDirection::down, 1.0));
        t.values[9].push_back(barcena_canto(p, BarcenaCantoDirection::up, 1.0));
    }
    return t;
}

ResultTable class_measure_table() {
    const ScenarioSet set = builtin_scenarios();
    ResultTable t;
    t.row_labels = {"A1", "A2", "S1", "S2", "T1", "T2"};
    for (const auto& [label, v] : set.scenarios) t.column_labels.push_back(label);
    t.values.assign(t.row_labels.size(), {});
    const WeightScheme scheme{1, PMode::distance_based};
    for (const auto& [label, v] : set.scenarios) {
        const auto p = validate_profile(set.base, v);
        t.values[0].push_back(a1(p, 0.0));
        t.values[1].push_back(gamma_measure(p, DistanceConcept::absolute, scheme));
        t.values[2].push_back(s1(p, 0.0));
        t.values[3].push_back(gamma_measure(p, DistanceConcept::scale_normalised, scheme));
        t.values[4].push_back(t1(p, 0.0, VarianceConvention::sample));
        t.values[5].push_back(gamma_measure(p, DistanceConcept::translation_normalised, scheme));
    }
    return t;
}

}  // namespace

ResultTable run_paper_tables(int which) {
    switch (which) {
        case 1: return statistical_case_table();
        case 2: return comparison_index_table();
        case 4: return class_measure_table();
        default: fail(Errc::BadArguments, "no built-in table " + std::to_string(which));
    }
}

namespace {

json profile_to_json(const MovementProfile& p) {
    return json{{"u", p.u}, {"v", p.v}};
}

json witness_to_json(const Witness& w) {
    return json{{"before", profile_to_json(w.before)},
                {"after", profile_to_json(w.after)},
                {"value_before", w.value_before},
                {"value_after", w.value_after},
                {"requirement", w.requirement == Requirement::strict_increase
                                    ? "strict_increase"
                                    : "invariant"},
                {"note", w.note}};
}

json audit_to_json(const AuditRecord& a) {
    json out{{"property", a.property},
             {"verdict", verdict_name(a.result.verdict)},
             {"detail", a.result.detail}};
    if (a.result.witness) out["witness"] = witness_to_json(*a.result.witness);
    return out;
}

}  // namespace

std::string report_to_json(const PropertyReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json cells;
        for (std::size_t c = 0; c < report.columns.size(); ++c)
            cells[report.columns[c]] = row.cells[c];
        json audits = json::array();
        for (const auto& a : row.audits) audits.push_back(audit_to_json(a));
        rows.push_back(json{{"measure", row.label}, {"cells", cells}, {"audits", audits}});
    }
    return json{{"seed", report.seed},
                {"trials", report.trials},
                {"columns", report.columns},
                {"measures", rows}}
        .dump(2);
}

}  // namespace mobility
