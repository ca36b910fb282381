#pragma once

#include "mobility/profile.hpp"

namespace mobility {

/// Inequality functional plugged into the Shorrocks index.
enum class InequalityKind { theil, relative_gini };

enum class FieldsOkVariant { income, log_income };
enum class BarcenaCantoDirection { down, up };
enum class RayGenicotVariant { absolute, relative };

/// 1 - cov(u,v)/var(u), population moments. The caller picks the status scale
/// (the conventional usage feeds log-income). Throws DegenerateOrigin when
/// var(u) = 0.
double elasticity_mobility(const MovementProfile& p);

/// 1 - Pearson correlation of (u, v). Throws DegenerateVariance when either
/// period has zero variance.
double pearson_mobility(const MovementProfile& p);

/// Mean absolute difference of status (income variant) or of log status.
double fields_ok(const MovementProfile& p, FieldsOkVariant variant);

/// Inequality-based mobility: 1 - I(u+v) / [ (mu_u I(u) + mu_v I(v)) / (mu_u + mu_v) ].
/// Requires positive incomes; throws ZeroDenominator when both periods are
/// perfectly equal.
double shorrocks(const MovementProfile& p, InequalityKind kind);

/// Upward-mobility indices over income marginals; the relative variant adds
/// log(sum(u)/sum(v)). Requires strictly positive incomes and alpha > 0.
double ray_genicot(const MovementProfile& p, RayGenicotVariant variant, double alpha);

/// Mean of ((loss or gain)/origin)^alpha over the strict mover set
/// D = {v_i < u_i} or U = {v_i > u_i}; the immobile belong to neither.
/// At alpha = 0 this is the mover incidence. Movers need positive origins.
double barcena_canto(const MovementProfile& p, BarcenaCantoDirection direction, double alpha);

}  // namespace mobility
