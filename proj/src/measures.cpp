#include "mobility/measures.hpp"

namespace mobility {

double evaluate(const MeasureSpec& spec, const MovementProfile& raw) {
    const MovementProfile p = transform_status(raw, spec.transform);
    const WeightScheme scheme{spec.gamma, spec.p_mode};
    switch (spec.id) {
        case MeasureId::elasticity: return elasticity_mobility(p);
        case MeasureId::pearson: return pearson_mobility(p);
        case MeasureId::fo1: return fields_ok(p, FieldsOkVariant::income);
        case MeasureId::fo2: return fields_ok(p, FieldsOkVariant::log_income);
        case MeasureId::shorrocks: return shorrocks(p, spec.ineq);
        case MeasureId::rg1: return ray_genicot(p, RayGenicotVariant::absolute, spec.alpha);
        case MeasureId::rg2: return ray_genicot(p, RayGenicotVariant::relative, spec.alpha);
        case MeasureId::bcd: return barcena_canto(p, BarcenaCantoDirection::down, spec.alpha);
        case MeasureId::bcu: return barcena_canto(p, BarcenaCantoDirection::up, spec.alpha);
        case MeasureId::a1: return a1(p, spec.alpha);
        case MeasureId::s1: return s1(p, spec.alpha);
        case MeasureId::t1: return t1(p, spec.alpha, spec.variance);
        case MeasureId::a2: return gamma_measure(p, DistanceConcept::absolute, scheme);
        case MeasureId::s2: return gamma_measure(p, DistanceConcept::scale_normalised, scheme);
        case MeasureId::t2:
            return gamma_measure(p, DistanceConcept::translation_normalised, scheme);
        case MeasureId::intermediate: return intermediate(p, spec.location_c, spec.alpha_tilde);
    }
    fail(Errc::BadArguments, "unknown measure id");
}

const char* measure_key(MeasureId id) {
    switch (id) {
        case MeasureId::elasticity: return "elasticity";
        case MeasureId::pearson: return "pearson";
        case MeasureId::fo1: return "FO1";
        case MeasureId::fo2: return "FO2";
        case MeasureId::shorrocks: return "shorrocks";
        case MeasureId::rg1: return "RG1";
        case MeasureId::rg2: return "RG2";
        case MeasureId::bcd: return "BCD";
        case MeasureId::bcu: return "BCU";
        case MeasureId::a1: return "A1";
        case MeasureId::s1: return "S1";
        case MeasureId::t1: return "T1";
        case MeasureId::a2: return "A2";
        case MeasureId::s2: return "S2";
        case MeasureId::t2: return "T2";
        case MeasureId::intermediate: return "intermediate";
    }
    return "?";
}

std::optional<MeasureId> parse_measure(const std::string& key) {
    for (MeasureId id : {MeasureId::elasticity, MeasureId::pearson, MeasureId::fo1,
                         MeasureId::fo2, MeasureId::shorrocks, MeasureId::rg1, MeasureId::rg2,
                         MeasureId::bcd, MeasureId::bcu, MeasureId::a1, MeasureId::s1,
                         MeasureId::t1, MeasureId::a2, MeasureId::s2, MeasureId::t2,
                         MeasureId::intermediate})
        if (key == measure_key(id)) return id;
    return std::nullopt;
}

std::optional<DistanceConcept> class2_concept(MeasureId id) {
    switch (id) {
        case MeasureId::a2: return DistanceConcept::absolute;
        case MeasureId::s2: return DistanceConcept::scale_normalised;
        case MeasureId::t2: return DistanceConcept::translation_normalised;
        default: return std::nullopt;
    }
}

}  // namespace mobility
