#include "mobility/axioms.hpp"

#include <algorithm>
#include <cmath>

namespace mobility {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::weak: return "weak";
        case Verdict::fail: return "fail";
    }
    return "?";
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::size_t Rng::index(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform01() * static_cast<double>(n)));
}

namespace {

constexpr double kMargin = 1e-9;

double margin_for(double value) { return kMargin * (1.0 + std::fabs(value)); }

MovementProfile random_profile(Rng& rng, std::size_t n_lo = 3, std::size_t n_hi = 10) {
    const std::size_t n = n_lo + rng.index(n_hi - n_lo + 1);
    StatusVector u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = rng.uniform(1.0, 100.0);
        v[i] = rng.uniform(1.0, 100.0);
    }
    return MovementProfile{std::move(u), std::move(v)};
}

struct Probe {
    MovementProfile before;
    MovementProfile after;
    std::string note;
};

// Single-person upward move: v_i' >= u_i in the base profile, then raised.
// Never flips anyone's mover classification.
Probe up_probe(Rng& rng) {
    MovementProfile base = random_profile(rng);
    const std::size_t i = rng.index(base.size());
    const double gap = rng.uniform01() < 0.25 ? 0.0 : rng.uniform(0.0, 15.0);
    base.v[i] = base.u[i] + gap;
    MovementProfile moved = base;
    moved.v[i] += rng.uniform(0.5, 10.0);
    return Probe{std::move(base), std::move(moved), "single upward move"};
}

// Single-person downward move; the person is strictly a downward mover in the
// base already, so the probe stays inside one mover classification.
Probe down_probe(Rng& rng) {
    MovementProfile base = random_profile(rng);
    const std::size_t i = rng.index(base.size());
    base.v[i] = base.u[i] * (1.0 - rng.uniform(0.05, 0.6));
    MovementProfile moved = base;
    moved.v[i] -= rng.uniform(0.1, 0.6) * base.v[i];
    return Probe{std::move(base), std::move(moved), "single downward move"};
}

// Fixed families where fragile indices are known to stay flat or reverse.
std::vector<Probe> deterministic_probes(MovementScope scope) {
    std::vector<Probe> probes;
    const StatusVector base{1.0, 2.0, 3.0};
    if (scope == MovementScope::both) {
        // pure exchange reached by two raises and one fall
        probes.push_back(Probe{MovementProfile{{10.0, 20.0, 40.0}, {10.0, 20.0, 40.0}},
                               MovementProfile{{10.0, 20.0, 40.0}, {20.0, 40.0, 10.0}},
                               "pure exchange of positions"});
    }
    if (scope == MovementScope::both || scope == MovementScope::down) {
        // equidistant origins with the outer destination gap pinned at -2k:
        // the regression slope ignores the middle person's fall
        probes.push_back(Probe{MovementProfile{base, {2.0, 1.5, 4.0}},
                               MovementProfile{base, {2.0, 1.0, 4.0}},
                               "slope-blind family, middle person falls"});
    }
    if (scope == MovementScope::both || scope == MovementScope::up) {
        // chain of upward moves landing on an affine destination
        probes.push_back(Probe{MovementProfile{base, base},
                               MovementProfile{base, {1.0, 3.0, 5.0}},
                               "upward chain onto an affine destination"});
    }
    return probes;
}

std::vector<Probe> registration_probes(Rng& rng, int trials) {
    std::vector<Probe> probes;
    const StatusVector u{10.0, 20.0, 40.0};
    const MovementProfile still{u, u};
    for (StatusVector v : {StatusVector{20.0, 40.0, 10.0}, StatusVector{40.0, 80.0, 20.0},
                           StatusVector{25.0, 45.0, 15.0}}) {
        probes.push_back(Probe{still, MovementProfile{u, std::move(v)},
                               "reranking movement vs immobility"});
    }
    for (int t = 0; t < trials; ++t) {
        MovementProfile p = random_profile(rng);
        StatusVector rotated(p.u.size());
        for (std::size_t i = 0; i < p.u.size(); ++i) rotated[i] = p.u[(i + 1) % p.u.size()];
        probes.push_back(Probe{MovementProfile{p.u, p.u}, MovementProfile{p.u, rotated},
                               "random rotation vs immobility"});
    }
    return probes;
}

std::optional<Witness> run_increase_probes(const MeasureSpec& spec,
                                           const std::vector<Probe>& probes) {
    for (const Probe& probe : probes) {
        double before, after;
        try {
            before = evaluate(spec, probe.before);
            after = evaluate(spec, probe.after);
        } catch (const Error&) {
            continue;  // probe outside this measure's domain
        }
        if (!(after > before + margin_for(before)))
            return Witness{probe.before, probe.after, before, after,
                           Requirement::strict_increase, probe.note};
    }
    return std::nullopt;
}

}  // namespace

PropertyVerdict check_monotonicity(const MeasureSpec& spec, MovementScope scope, int trials,
                                   std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Probe> probes;
    if (scope == MovementScope::registration) {
        probes = registration_probes(rng, std::max(2, trials / 10));
    } else {
        probes = deterministic_probes(scope);
        for (int t = 0; t < trials; ++t) {
            const bool go_up =
                scope == MovementScope::up || (scope == MovementScope::both && t % 2 == 0);
            probes.push_back(go_up ? up_probe(rng) : down_probe(rng));
        }
    }
    PropertyVerdict out;
    if (auto w = run_increase_probes(spec, probes)) {
        out.verdict = Verdict::fail;
        out.witness = std::move(w);
        out.detail = "a movement-increasing change failed to raise the measure";
        return out;
    }
    out.verdict = scope == MovementScope::both ? Verdict::pass : Verdict::weak;
    switch (scope) {
        case MovementScope::both: out.detail = "strict under upward and downward moves"; break;
        case MovementScope::up: out.detail = "strict under upward moves"; break;
        case MovementScope::down: out.detail = "strict under downward moves"; break;
        case MovementScope::registration:
            out.detail = "movement registers strictly above immobility";
            break;
    }
    return out;
}

PropertyVerdict check_monotonicity2(const MeasureSpec& spec, int trials, std::uint64_t seed) {
    Rng rng(seed);
    const DistanceConcept dc =
        class2_concept(spec.id).value_or(DistanceConcept::absolute);

    std::vector<Probe> probes;
    for (int t = 0; t < trials; ++t) {
        if (t % 2 == 0) {
            // matched pair with equal origins, both on the same side of it
            MovementProfile base = random_profile(rng);
            const std::size_t i = rng.index(base.size());
            const std::size_t j = (i + 1 + rng.index(base.size() - 1)) % base.size();
            const double origin = rng.uniform(20.0, 60.0);
            const bool above = t % 4 == 0;
            const double far = rng.uniform(6.0, 15.0);
            const double near = rng.uniform(1.0, far - 2.0);
            base.u[i] = base.u[j] = origin;
            base.v[i] = above ? origin + far : origin - far;
            base.v[j] = above ? origin + near : origin - near;
            const double delta = 0.4 * std::min(far - near, near);
            MovementProfile moved = base;
            moved.v[i] += above ? delta : -delta;
            moved.v[j] += above ? -delta : delta;
            probes.push_back(
                Probe{std::move(base), std::move(moved), "equal-origin matched pair spread"});
        } else {
            // opposite-side pair in the measure's own distance concept
            MovementProfile base;
            std::size_t i = 0, j = 0;
            bool found = false;
            for (int attempt = 0; attempt < 64 && !found; ++attempt) {
                base = random_profile(rng);
                const auto d = distances(base, dc);
                bool up_found = false, down_found = false;
                double best_up = 0.3, best_down = -0.3;
                for (std::size_t k = 0; k < d.size(); ++k) {
                    if (d[k] > best_up) { best_up = d[k]; i = k; up_found = true; }
                    if (d[k] < best_down) { best_down = d[k]; j = k; down_found = true; }
                }
                found = up_found && down_found;
            }
            if (!found) continue;
            const double delta = std::min(rng.uniform(0.2, 2.0), 0.5 * base.v[j]);
            MovementProfile moved = base;
            moved.v[i] += delta;
            moved.v[j] -= delta;
            probes.push_back(
                Probe{std::move(base), std::move(moved), "opposite-side matched pair spread"});
        }
    }

    PropertyVerdict out;
    if (auto w = run_increase_probes(spec, probes)) {
        out.verdict = Verdict::fail;
        out.witness = std::move(w);
        out.detail = "a mean-preserving matched spread failed to raise the measure";
        return out;
    }
    out.verdict = Verdict::pass;
    out.detail = "strict under mean-preserving matched spreads";
    return out;
}

namespace {

double lowest_of(const MovementProfile& p) {
    return std::min(*std::min_element(p.u.begin(), p.u.end()),
                    *std::min_element(p.v.begin(), p.v.end()));
}

PropertyVerdict check_invariance(const MeasureSpec& spec, InvarianceMode mode, int trials,
                                 std::uint64_t seed, bool scale) {
    Rng rng(seed);
    PropertyVerdict out;
    std::optional<Witness> value_witness;

    auto transformed = [&](const MovementProfile& p, double c0, double c1) {
        MovementProfile q = p;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (scale) {
                q.u[i] *= c0;
                q.v[i] *= c1;
            } else {
                q.u[i] += c0;
                q.v[i] += c1;
            }
        }
        return q;
    };

    for (int t = 0; t < trials && !value_witness; ++t) {
        const MovementProfile p = random_profile(rng);
        double c0, c1;
        if (scale) {
            c0 = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
            c1 = mode == InvarianceMode::independent
                     ? std::exp(rng.uniform(std::log(0.2), std::log(5.0)))
                     : c0;
        } else if (mode == InvarianceMode::independent) {
            // keep each period strictly positive for log-domain measures
            c0 = rng.uniform(-(*std::min_element(p.u.begin(), p.u.end()) - 0.1), 30.0);
            c1 = rng.uniform(-(*std::min_element(p.v.begin(), p.v.end()) - 0.1), 30.0);
        } else {
            c0 = c1 = rng.uniform(-(lowest_of(p) - 0.1), 30.0);
        }
        const MovementProfile q = transformed(p, c0, c1);
        double before, after;
        try {
            before = evaluate(spec, p);
            after = evaluate(spec, q);
        } catch (const Error&) {
            continue;
        }
        if (std::fabs(after - before) > margin_for(before))
            value_witness = Witness{p, q, before, after, Requirement::invariant,
                                    scale ? "rescaled status" : "translated status"};
    }

    if (!value_witness) {
        out.verdict = Verdict::pass;
        out.detail = "value invariant";
        return out;
    }

    if (mode == InvarianceMode::joint) {
        // ordering-level fallback: a common change must preserve comparisons
        bool order_ok = true;
        for (int t = 0; t < trials && order_ok; ++t) {
            const MovementProfile p1 = random_profile(rng, 4, 4);
            const MovementProfile p2 = random_profile(rng, 4, 4);
            const double c = scale ? std::exp(rng.uniform(std::log(0.2), std::log(5.0)))
                                   : rng.uniform(
                                         -(std::min(lowest_of(p1), lowest_of(p2)) - 0.1), 30.0);
            try {
                const double a1v = evaluate(spec, p1);
                const double a2v = evaluate(spec, p2);
                if (std::fabs(a1v - a2v) < 1e-6 * (1.0 + std::fabs(a1v))) continue;
                const double b1 = evaluate(spec, transformed(p1, c, c));
                const double b2 = evaluate(spec, transformed(p2, c, c));
                if ((a1v < a2v) != (b1 < b2)) order_ok = false;
            } catch (const Error&) {
                continue;
            }
        }
        if (order_ok) {
            out.verdict = Verdict::weak;
            out.detail = "order-preserving under the common change; value not invariant";
            return out;
        }
    }

    out.verdict = Verdict::fail;
    out.witness = std::move(value_witness);
    out.detail = "value changes under the transformation";
    return out;
}

}  // namespace

PropertyVerdict check_scale(const MeasureSpec& spec, InvarianceMode mode, int trials,
                            std::uint64_t seed) {
    return check_invariance(spec, mode, trials, seed, true);
}

PropertyVerdict check_translation(const MeasureSpec& spec, InvarianceMode mode, int trials,
                                  std::uint64_t seed) {
    return check_invariance(spec, mode, trials, seed, false);
}

bool verify_witness(const MeasureSpec& spec, const Witness& w, double tolerance) {
    double before, after;
    try {
        before = evaluate(spec, w.before);
        after = evaluate(spec, w.after);
    } catch (const Error&) {
        return false;
    }
    if (std::fabs(before - w.value_before) > tolerance * (1.0 + std::fabs(before))) return false;
    if (std::fabs(after - w.value_after) > tolerance * (1.0 + std::fabs(after))) return false;
    switch (w.requirement) {
        case Requirement::strict_increase:
            return !(after > before + margin_for(before));
        case Requirement::invariant:
            return std::fabs(after - before) > tolerance * (1.0 + std::fabs(before));
    }
    return false;
}

// ---------------------------------------------------------------------------
// Roster and report
// ---------------------------------------------------------------------------

std::vector<RosterEntry> default_roster() {
    auto spec_of = [](MeasureId id) {
        MeasureSpec s;
        s.id = id;
        if (id == MeasureId::rg1 || id == MeasureId::rg2 || id == MeasureId::bcd ||
            id == MeasureId::bcu)
            s.alpha = 1.0;
        return s;
    };
    std::vector<RosterEntry> roster;
    auto add = [&](std::string label, MeasureId id, MovementColumn col, MovementScope scope,
                   ConsistencyClaim sc, ConsistencyClaim tr, bool ud, bool ex, bool dir) {
        roster.push_back(
            RosterEntry{std::move(label), spec_of(id), col, scope, sc, tr, ud, ex, dir});
    };
    using MC = MovementColumn;
    using MS = MovementScope;
    using CC = ConsistencyClaim;
    add("A1", MeasureId::a1, MC::monotonicity, MS::up, CC::joint_only, CC::none, true, false, true);
    add("A2", MeasureId::a2, MC::monotonicity, MS::both, CC::none, CC::joint_only, true, true, true);
    add("S1", MeasureId::s1, MC::monotonicity2, MS::both, CC::full, CC::none, true, false, true);
    add("S2", MeasureId::s2, MC::monotonicity2, MS::both, CC::full, CC::none, true, true, true);
    add("T1", MeasureId::t1, MC::monotonicity2, MS::both, CC::none, CC::full, true, false, true);
    add("T2", MeasureId::t2, MC::monotonicity2, MS::both, CC::none, CC::full, true, true, true);
    add("elasticity", MeasureId::elasticity, MC::none, MS::both, CC::joint_only, CC::none,
        false, false, false);
    add("pearson", MeasureId::pearson, MC::none, MS::both, CC::full, CC::full, false, false,
        false);
    add("FO1", MeasureId::fo1, MC::monotonicity, MS::both, CC::none, CC::joint_only, true, true,
        false);
    add("FO2", MeasureId::fo2, MC::monotonicity, MS::both, CC::joint_only, CC::none, true, true,
        false);
    add("S_Theil", MeasureId::shorrocks, MC::monotonicity, MS::registration, CC::joint_only,
        CC::none, false, false, false);
    roster.back().spec.ineq = InequalityKind::theil;
    add("S_Gini", MeasureId::shorrocks, MC::monotonicity, MS::registration, CC::joint_only,
        CC::none, false, false, false);
    roster.back().spec.ineq = InequalityKind::relative_gini;
    add("RG1", MeasureId::rg1, MC::none, MS::both, CC::joint_only, CC::none, false, false,
        true);
    add("RG2", MeasureId::rg2, MC::none, MS::both, CC::full, CC::none, false, false, true);
    add("BCD", MeasureId::bcd, MC::monotonicity, MS::down, CC::joint_only, CC::none, true, false,
        true);
    add("BCU", MeasureId::bcu, MC::monotonicity, MS::up, CC::joint_only, CC::none, true, false,
        true);
    return roster;
}

namespace {

bool holds(const PropertyVerdict& v) { return v.verdict != Verdict::fail; }

// numeric spot-check that the advertised decomposition identity closes
bool decomposition_identity_ok(const RosterEntry& entry, bool exchange_split,
                               std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 8; ++t) {
        MovementProfile p = random_profile(rng, 6, 10);
        // make sure both mover groups are populated
        p.v[0] = p.u[0] + 5.0;
        p.v[1] = std::max(0.5, p.u[1] - 5.0);
        try {
            const MeasureId id = entry.spec.id;
            if (exchange_split) {
                if (auto c = class2_concept(id)) {
                    const auto seg = decompose_seg(p, *c);
                    if (std::fabs(seg.residual) > 1e-9 * (1.0 + std::fabs(seg.total)))
                        return false;
                }
                continue;
            }
            if (id == MeasureId::s1) {
                const auto split = decompose_s1_subgroups(p, 0.3, updown_partition(p));
                if (std::fabs(split.residual) > 1e-9 * (1.0 + std::fabs(split.total)))
                    return false;
            } else if (id == MeasureId::t1) {
                const auto split = decompose_t1_subgroups(p, 0.2, updown_partition(p));
                if (std::fabs(split.residual) > 1e-9 * (1.0 + std::fabs(split.total)))
                    return false;
            } else if (auto c = class2_concept(id)) {
                const auto ud = decompose_updown(p, *c, WeightScheme{1, entry.spec.p_mode});
                if (std::fabs(ud.residual) > 1e-9 * (1.0 + std::fabs(ud.total))) return false;
            } else {
                // additive indices: the value equals the share-weighted group values
                const auto g = updown_partition(p);
                MovementProfile up, down;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    auto& block = g.group_of[i] == 0 ? up : down;
                    block.u.push_back(p.u[i]);
                    block.v.push_back(p.v[i]);
                }
                if (up.size() < 2 || down.size() < 2) continue;
                const double share_up =
                    static_cast<double>(up.size()) / static_cast<double>(p.size());
                const double whole = evaluate(entry.spec, p);
                const double split = share_up * evaluate(entry.spec, up) +
                                     (1.0 - share_up) * evaluate(entry.spec, down);
                if (std::fabs(whole - split) > 1e-9 * (1.0 + std::fabs(whole))) return false;
            }
        } catch (const Error&) {
            continue;
        }
    }
    return true;
}

}  // namespace

PropertyReport property_report(const std::vector<RosterEntry>& roster, int trials,
                               std::uint64_t seed) {
    PropertyReport report;
    report.seed = seed;
    report.trials = trials;
    report.columns = {"monotonicity",      "monotonicity2", "scale",      "translation",
                      "updown",      "exchange",    "directional"};

    std::uint64_t stream = seed;
    for (const RosterEntry& entry : roster) {
        ReportRow row;
        row.label = entry.label;

        const auto mono = check_monotonicity(entry.spec, entry.scope, trials, ++stream);
        const auto mono2 = check_monotonicity2(entry.spec, trials, ++stream);
        const auto scale_ind =
            check_scale(entry.spec, InvarianceMode::independent, trials, ++stream);
        const auto scale_joint =
            check_scale(entry.spec, InvarianceMode::joint, trials, ++stream);
        const auto trans_ind =
            check_translation(entry.spec, InvarianceMode::independent, trials, ++stream);
        const auto trans_joint =
            check_translation(entry.spec, InvarianceMode::joint, trials, ++stream);
        row.audits = {{"monotonicity", mono},
                      {"monotonicity2", mono2},
                      {"scale-independent", scale_ind},
                      {"scale-joint", scale_joint},
                      {"translation-independent", trans_ind},
                      {"translation-joint", trans_joint}};

        std::string ax2, ax2p;
        if (entry.movement == MovementColumn::monotonicity && holds(mono)) ax2 = "check";
        if (entry.movement == MovementColumn::monotonicity2 && mono2.verdict == Verdict::pass)
            ax2p = "check";

        std::string scale_cell;
        if (entry.scale == ConsistencyClaim::full && scale_ind.verdict == Verdict::pass)
            scale_cell = "check";
        else if (entry.scale == ConsistencyClaim::joint_only && holds(scale_joint))
            scale_cell = "(PSI)";

        std::string trans_cell;
        if (entry.translation == ConsistencyClaim::full && trans_ind.verdict == Verdict::pass)
            trans_cell = "check";
        else if (entry.translation == ConsistencyClaim::joint_only && holds(trans_joint))
            trans_cell = "(PTI)";

        std::string ud_cell, ex_cell;
        if (entry.updown && decomposition_identity_ok(entry, false, seed ^ 0x5bd1e995ULL))
            ud_cell = "check";
        if (entry.exchange && decomposition_identity_ok(entry, true, seed ^ 0xc2b2ae35ULL))
            ex_cell = "check";

        row.cells = {ax2,     ax2p,    scale_cell, trans_cell,
                     ud_cell, ex_cell, entry.directional ? "check" : ""};
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace mobility
