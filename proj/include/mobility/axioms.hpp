#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mobility/measures.hpp"

namespace mobility {

enum class Verdict { pass, weak, fail };

const char* verdict_name(Verdict v);

/// What a probe demanded of the measure.
enum class Requirement { strict_increase, invariant };

/// A concrete counterexample: the probe pair and the values the measure took.
/// Witnesses are self-contained; verify_witness re-evaluates them from scratch.
struct Witness {
    MovementProfile before;
    MovementProfile after;
    double value_before = 0.0;
    double value_after = 0.0;
    Requirement requirement = Requirement::strict_increase;
    std::string note;
};

struct PropertyVerdict {
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;  ///< present on every fail
    std::string detail;
};

/// Probe directions for the movement audits. `both` demands strict response to
/// upward and downward single-person moves; `up`/`down` are the one-sided
/// variants; `registration` only demands that canonical movement profiles
/// register strictly above immobility.
enum class MovementScope { both, up, down, registration };

/// Invariance flavour: `independent` rescales/translates the two periods
/// separately; `joint` applies one common change to both.
enum class InvarianceMode { independent, joint };

/// Deterministic splitmix64 generator; identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ULL) {}
    std::uint64_t next();
    double uniform01();
    double uniform(double lo, double hi);
    std::size_t index(std::size_t n);

private:
    std::uint64_t state_;
};

PropertyVerdict check_monotonicity(const MeasureSpec& spec, MovementScope scope, int trials,
                                   std::uint64_t seed);

/// Mean-preserving matched-pair probes: equal-origin same-side spreads (where
/// binary-weight measures are exactly flat) and opposite-side pairs taken in
/// the measure's own distance concept.
PropertyVerdict check_monotonicity2(const MeasureSpec& spec, int trials, std::uint64_t seed);

/// Value invariance under rescaling. In joint mode a value failure falls back
/// to an order-preservation test across profile pairs; passing only that
/// yields `weak`.
PropertyVerdict check_scale(const MeasureSpec& spec, InvarianceMode mode, int trials,
                            std::uint64_t seed);

PropertyVerdict check_translation(const MeasureSpec& spec, InvarianceMode mode, int trials,
                                  std::uint64_t seed);

/// True when the recorded violation reproduces under independent re-evaluation.
bool verify_witness(const MeasureSpec& spec, const Witness& w, double tolerance = 1e-9);

// ---------------------------------------------------------------------------
// Property matrix over the measure roster
// ---------------------------------------------------------------------------

enum class MovementColumn { monotonicity, monotonicity2, none };
enum class ConsistencyClaim { full, joint_only, none };

/// One measure plus its documented property profile and the audit scope the
/// movement claim is tested under.
struct RosterEntry {
    std::string label;
    MeasureSpec spec;
    MovementColumn movement = MovementColumn::none;
    MovementScope scope = MovementScope::both;
    ConsistencyClaim scale = ConsistencyClaim::none;
    ConsistencyClaim translation = ConsistencyClaim::none;
    bool updown = false;
    bool exchange = false;
    bool directional = false;
};

/// The sixteen-measure default roster (six library classes, ten comparison
/// indices), parameterised as in the built-in tables (alpha 0, gamma 1,
/// alpha 1 for RG/BC).
std::vector<RosterEntry> default_roster();

struct AuditRecord {
    std::string property;  // "monotonicity", "monotonicity2", "scale-independent", ...
    PropertyVerdict result;
};

struct ReportRow {
    std::string label;
    // rendered cells, in column order:
    // monotonicity, monotonicity2, scale, translation, updown, exchange, directional
    std::vector<std::string> cells;
    std::vector<AuditRecord> audits;
};

struct PropertyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<std::string> columns;
    std::vector<ReportRow> rows;
};

/// Runs every audit for every roster entry and renders the property matrix.
/// Claimed cells render only if their audit holds (pass, or weak for
/// one-sided/ordering-level claims); failures render empty and carry the
/// witness in the audit records. Deterministic given the seed.
PropertyReport property_report(const std::vector<RosterEntry>& roster, int trials,
                               std::uint64_t seed);

}  // namespace mobility
