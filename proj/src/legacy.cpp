#include "mobility/legacy.hpp"

#include <cmath>

#include "mobility/inequality.hpp"

namespace mobility {

namespace {

double tiny(double scale) { return 1e-300 + 0.0 * scale; }

}  // namespace

double elasticity_mobility(const MovementProfile& p) {
    const double var_u = variance(p.u);
    if (var_u <= tiny(var_u))
        fail(Errc::DegenerateOrigin, "elasticity undefined: var(u) = 0");
    return 1.0 - covariance(p.u, p.v) / var_u;
}

double pearson_mobility(const MovementProfile& p) {
    const double var_u = variance(p.u);
    const double var_v = variance(p.v);
    if (var_u <= tiny(var_u) || var_v <= tiny(var_v))
        fail(Errc::DegenerateVariance, "correlation undefined: a period has zero variance");
    return 1.0 - covariance(p.u, p.v) / std::sqrt(var_u * var_v);
}

double fields_ok(const MovementProfile& p, FieldsOkVariant variant) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (variant == FieldsOkVariant::income) {
            acc += std::fabs(p.v[i] - p.u[i]);
        } else {
            if (p.u[i] <= 0.0 || p.v[i] <= 0.0)
                fail(Errc::NonPositiveForLog, "log variant needs strictly positive incomes");
            acc += std::fabs(std::log(p.v[i]) - std::log(p.u[i]));
        }
    }
    return acc / static_cast<double>(p.size());
}

double shorrocks(const MovementProfile& p, InequalityKind kind) {
    StatusVector pooled(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.u[i] <= 0.0 || p.v[i] <= 0.0)
            fail(Errc::NonPositiveIncome, "shorrocks needs strictly positive incomes");
        pooled[i] = p.u[i] + p.v[i];
    }
    const auto ineq = [kind](const StatusVector& x) {
        return kind == InequalityKind::theil ? generalized_entropy(x, 1.0)
                                             : gini(x, GiniVariant::relative);
    };
    const double mu_u = mean(p.u);
    const double mu_v = mean(p.v);
    const double mu_pooled = mu_u + mu_v;
    const double denom = (mu_u / mu_pooled) * ineq(p.u) + (mu_v / mu_pooled) * ineq(p.v);
    if (denom == 0.0)
        fail(Errc::ZeroDenominator, "shorrocks undefined: both periods are perfectly equal");
    return 1.0 - ineq(pooled) / denom;
}

double ray_genicot(const MovementProfile& p, RayGenicotVariant variant, double alpha) {
    if (!(alpha > 0.0)) fail(Errc::BadAlpha, "ray-genicot needs alpha > 0");
    double sum_u = 0.0, sum_v = 0.0, pow_u = 0.0, pow_v = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.u[i] <= 0.0 || p.v[i] <= 0.0)
            fail(Errc::NonPositiveIncome, "ray-genicot needs strictly positive incomes");
        sum_u += p.u[i];
        sum_v += p.v[i];
        pow_u += std::pow(p.u[i], -alpha);
        pow_v += std::pow(p.v[i], -alpha);
    }
    const double base = -std::log(pow_v / pow_u) / alpha;
    if (variant == RayGenicotVariant::absolute) return base;
    return base + std::log(sum_u / sum_v);
}

double barcena_canto(const MovementProfile& p, BarcenaCantoDirection direction, double alpha) {
    if (alpha < 0.0) fail(Errc::BadAlpha, "barcena-canto needs alpha >= 0");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool mover = direction == BarcenaCantoDirection::down ? p.v[i] < p.u[i]
                                                                    : p.v[i] > p.u[i];
        if (!mover) continue;
        if (p.u[i] <= 0.0)
            fail(Errc::NonPositiveOrigin, "movers need a strictly positive origin income");
        const double share = std::fabs(p.v[i] - p.u[i]) / p.u[i];
        acc += std::pow(share, alpha);
    }
    return acc / static_cast<double>(p.size());
}

}  // namespace mobility
