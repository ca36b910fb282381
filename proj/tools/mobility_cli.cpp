#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mobility/axioms.hpp"
#include "mobility/inequality.hpp"
#include "mobility/io.hpp"

namespace {

using mobility::Errc;
using mobility::Error;
using mobility::MeasureSpec;
using nlohmann::json;

constexpr int kExitDomainError = 1;
constexpr int kExitBadArguments = 2;

struct CommonFlags {
    std::string measure = "S1";
    double alpha = 0.0;
    bool alpha_set = false;
    int gamma = 1;
    double location_c = 0.0;
    double alpha_tilde = 0.5;
    std::string status = "identity";
    std::string pmode = "distance";
    std::string var = "n";
    std::string ineq = "theil";
    std::string format = "json";
    int decimals = 3;
};

void add_measure_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--measure", f.measure,
                    "one of elasticity,pearson,FO1,FO2,shorrocks,RG1,RG2,BCD,BCU,"
                    "A1,S1,T1,A2,S2,T2,intermediate");
    cmd->add_option("--alpha", f.alpha, "class-1 sensitivity / RG,BC exponent")
        ->each([&f](const std::string&) { f.alpha_set = true; });
    cmd->add_option("--gamma", f.gamma, "class-2 weight power (0 or odd)");
    cmd->add_option("--c", f.location_c, "intermediate-family location parameter");
    cmd->add_option("--alpha-tilde", f.alpha_tilde, "intermediate-family sensitivity");
    cmd->add_option("--status", f.status, "identity|log|rank")
        ->check(CLI::IsMember({"identity", "log", "rank"}));
    cmd->add_option("--pmode", f.pmode, "status|distance (default distance)")
        ->check(CLI::IsMember({"status", "distance"}));
    cmd->add_option("--var", f.var, "variance denominator: n|n-1 (default n)")
        ->check(CLI::IsMember({"n", "n-1"}));
    cmd->add_option("--ineq", f.ineq, "shorrocks inequality functional: theil|gini")
        ->check(CLI::IsMember({"theil", "gini"}));
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--decimals", f.decimals, "decimal places in table output")
        ->check(CLI::Range(0, 17));
}

MeasureSpec spec_from_flags(const CommonFlags& f) {
    MeasureSpec spec;
    const auto id = mobility::parse_measure(f.measure);
    if (!id) throw Error(Errc::BadArguments, "unknown measure '" + f.measure + "'");
    spec.id = *id;
    spec.alpha = f.alpha;
    if (!f.alpha_set && (spec.id == mobility::MeasureId::rg1 ||
                         spec.id == mobility::MeasureId::rg2 ||
                         spec.id == mobility::MeasureId::bcd ||
                         spec.id == mobility::MeasureId::bcu))
        spec.alpha = 1.0;  // the conventional default for the directional indices
    spec.gamma = f.gamma;
    spec.location_c = f.location_c;
    spec.alpha_tilde = f.alpha_tilde;
    spec.transform = f.status == "log"    ? mobility::StatusTransform::log_status
                     : f.status == "rank" ? mobility::StatusTransform::rank
                                          : mobility::StatusTransform::identity;
    spec.p_mode =
        f.pmode == "status" ? mobility::PMode::status_based : mobility::PMode::distance_based;
    spec.variance = f.var == "n-1" ? mobility::VarianceConvention::sample
                                   : mobility::VarianceConvention::population;
    spec.ineq = f.ineq == "gini" ? mobility::InequalityKind::relative_gini
                                 : mobility::InequalityKind::theil;
    if (spec.gamma < 0) throw Error(Errc::NegativeGamma, "gamma must be nonnegative");
    if (spec.gamma >= 1 && spec.gamma % 2 == 0)
        throw Error(Errc::EvenGamma, "gamma must be 0 or odd");
    return spec;
}

json spec_params(const MeasureSpec& spec, const CommonFlags& f) {
    json params{{"status", f.status}};
    using mobility::MeasureId;
    switch (spec.id) {
        case MeasureId::a1:
        case MeasureId::s1:
            params["alpha"] = spec.alpha;
            break;
        case MeasureId::t1:
            params["alpha"] = spec.alpha;
            params["var"] = f.var;
            break;
        case MeasureId::a2:
        case MeasureId::s2:
        case MeasureId::t2:
            params["gamma"] = spec.gamma;
            params["pmode"] = f.pmode;
            break;
        case MeasureId::rg1:
        case MeasureId::rg2:
        case MeasureId::bcd:
        case MeasureId::bcu:
            params["alpha"] = spec.alpha;
            break;
        case MeasureId::intermediate:
            params["c"] = spec.location_c;
            params["alpha_tilde"] = spec.alpha_tilde;
            break;
        case MeasureId::shorrocks:
            params["ineq"] = f.ineq;
            break;
        default:
            break;
    }
    return params;
}

double unsign_zero(double value) { return value + 0.0; }

json value_json(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return unsign_zero(value);
}

json decomposition_json(const mobility::DecompositionResult& d) {
    json components;
    for (const auto& c : d.components)
        components[c.label] =
            json{{"weight", unsign_zero(c.weight)}, {"value", unsign_zero(c.value)}};
    return json{{"components", components},
                {"between", unsign_zero(d.between)},
                {"total", unsign_zero(d.total)},
                {"residual", unsign_zero(d.residual)}};
}

int run(int argc, char** argv) {
    CLI::App app{"mobility measurement toolkit"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string input, groups_path, scenario_path;
    int which = 2;
    std::uint64_t seed = 1;
    int trials = 120;
    bool check_all = false;
    std::string method = "updown";

    auto* compute = app.add_subcommand("compute", "evaluate one measure on a profile CSV");
    compute->add_option("--input", input, "profile CSV (header id,u,v)")->required();
    add_measure_flags(compute, f);
    add_output_flags(compute, f);

    auto* decompose = app.add_subcommand("decompose", "split a measure into components");
    decompose->add_option("--input", input, "profile CSV (header id,u,v)")->required();
    decompose->add_option("--method", method, "updown|seg|subgroup")
        ->check(CLI::IsMember({"updown", "seg", "subgroup"}));
    decompose->add_option("--groups", groups_path, "groups CSV (header id,group)");
    add_measure_flags(decompose, f);
    add_output_flags(decompose, f);

    auto* check = app.add_subcommand("check", "audit measures against the mobility principles");
    check->add_flag("--all", check_all, "audit the whole default roster");
    check->add_option("--seed", seed, "deterministic probe seed");
    check->add_option("--trials", trials, "random probes per property")->check(CLI::Range(1, 100000));
    add_measure_flags(check, f);

    auto* tables = app.add_subcommand("paper-tables", "reproduce the built-in reference tables");
    tables->add_option("--which", which, "table id: 1, 2 or 4")->required();
    add_output_flags(tables, f);

    auto* scen = app.add_subcommand("scenarios", "evaluate a measure over a scenario JSON file");
    scen->add_option("--input", scenario_path, "scenario JSON")->required();
    add_measure_flags(scen, f);
    add_output_flags(scen, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << json{{"error", {{"code", "BadArguments"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return kExitBadArguments;
    }

    try {
        if (compute->parsed()) {
            const MeasureSpec spec = spec_from_flags(f);
            const auto parsed = mobility::load_profile_csv(input);
            const double value = mobility::evaluate(spec, parsed.profile);
            if (f.format == "tsv") {
                std::cout << "measure\tvalue\n"
                          << f.measure << "\t" << mobility::render_value(value, f.decimals)
                          << "\n";
            } else {
                std::cout << json{{"measure", f.measure},
                                  {"params", spec_params(spec, f)},
                                  {"value", value_json(value)}}
                                 .dump(2)
                          << "\n";
            }
        } else if (decompose->parsed()) {
            const MeasureSpec spec = spec_from_flags(f);
            const auto parsed = mobility::load_profile_csv(input);
            mobility::DecompositionResult result;
            const bool class1_measure =
                spec.id == mobility::MeasureId::s1 || spec.id == mobility::MeasureId::t1;
            auto class1_split = [&](const mobility::SubgroupPartition& partition) {
                return spec.id == mobility::MeasureId::s1
                           ? mobility::decompose_s1_subgroups(parsed.profile, spec.alpha,
                                                              partition)
                           : mobility::decompose_t1_subgroups(parsed.profile, spec.alpha,
                                                              partition);
            };
            if (method == "subgroup") {
                if (groups_path.empty())
                    throw Error(Errc::BadArguments, "subgroup method needs --groups");
                if (!class1_measure)
                    throw Error(Errc::BadArguments, "subgroup method applies to S1 or T1");
                result = class1_split(mobility::load_groups_csv(groups_path, parsed.ids));
            } else if (method == "updown" && class1_measure) {
                result = class1_split(mobility::updown_partition(parsed.profile));
                result.components[0].label = "up";
                if (result.components.size() > 1) result.components[1].label = "down";
            } else {
                const auto dc = mobility::class2_concept(spec.id);
                if (!dc)
                    throw Error(Errc::BadArguments, method + " method applies to A2, S2 or T2");
                if (method == "seg") {
                    if (spec.gamma != 1)
                        throw Error(Errc::BadArguments,
                                    "the structural/exchange/growth split is defined at gamma 1");
                    result = mobility::decompose_seg(parsed.profile, *dc);
                } else {
                    result = mobility::decompose_updown(
                        parsed.profile, *dc,
                        mobility::WeightScheme{spec.gamma, spec.p_mode});
                }
            }
            json out = decomposition_json(result);
            out["measure"] = f.measure;
            out["method"] = method;
            out["params"] = spec_params(spec, f);
            std::cout << out.dump(2) << "\n";
        } else if (check->parsed()) {
            std::vector<mobility::RosterEntry> roster;
            if (check_all) {
                roster = mobility::default_roster();
            } else {
                const MeasureSpec spec = spec_from_flags(f);
                for (auto& entry : mobility::default_roster())
                    if (entry.spec.id == spec.id) { roster.push_back(entry); break; }
                if (roster.empty())
                    throw Error(Errc::BadArguments,
                                "'" + f.measure + "' is not in the audit roster");
                roster[0].spec = spec;
            }
            const auto report = mobility::property_report(roster, trials, seed);
            std::cout << mobility::report_to_json(report) << "\n";
        } else if (tables->parsed()) {
            const auto table = mobility::run_paper_tables(which);
            std::cout << (f.format == "tsv" ? mobility::table_to_tsv(table, f.decimals)
                                            : mobility::table_to_json(table, f.decimals));
            if (f.format == "json") std::cout << "\n";
        } else if (scen->parsed()) {
            const MeasureSpec spec = spec_from_flags(f);
            const auto set = mobility::load_scenario_json(scenario_path);
            const auto table = mobility::scenario_table(set, spec);
            std::cout << (f.format == "tsv" ? mobility::table_to_tsv(table, f.decimals)
                                            : mobility::table_to_json(table, f.decimals));
            if (f.format == "json") std::cout << "\n";
        }
    } catch (const Error& e) {
        std::cout << json{{"error", {{"code", e.code_name()}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        const bool argument_error = e.code() == Errc::BadArguments ||
                                    e.code() == Errc::EvenGamma ||
                                    e.code() == Errc::NegativeGamma;
        return argument_error ? kExitBadArguments : kExitDomainError;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
