#pragma once

#include <optional>
#include <string>

#include "mobility/class1.hpp"
#include "mobility/class2.hpp"
#include "mobility/legacy.hpp"
#include "mobility/profile.hpp"

namespace mobility {

enum class MeasureId {
    elasticity,
    pearson,
    fo1,
    fo2,
    shorrocks,
    rg1,
    rg2,
    bcd,
    bcu,
    a1,
    s1,
    t1,
    a2,
    s2,
    t2,
    intermediate,
};

/// Uniform handle over every index in the library: the identifier plus the
/// parameters the index consumes. Irrelevant fields are ignored.
struct MeasureSpec {
    MeasureId id = MeasureId::s1;
    double alpha = 0.0;       ///< class-1 sensitivity; RG/BC exponent
    int gamma = 1;            ///< class-2 weight power
    double location_c = 0.0;  ///< intermediate-family location
    double alpha_tilde = 0.5;
    StatusTransform transform = StatusTransform::identity;
    PMode p_mode = PMode::distance_based;
    VarianceConvention variance = VarianceConvention::population;
    InequalityKind ineq = InequalityKind::theil;
};

/// Applies spec.transform, then evaluates the requested index.
double evaluate(const MeasureSpec& spec, const MovementProfile& p);

const char* measure_key(MeasureId id);
std::optional<MeasureId> parse_measure(const std::string& key);

/// Distance concept behind a class-2 id; empty for everything else.
std::optional<DistanceConcept> class2_concept(MeasureId id);

}  // namespace mobility
