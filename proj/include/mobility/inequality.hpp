#pragma once

#include "mobility/profile.hpp"

namespace mobility {

/// A single cross-section of status values (n >= 1, finite).
using Distribution = StatusVector;

enum class GiniVariant { absolute, relative };

/// Generalised entropy family: alpha = 0 is the mean logarithmic deviation,
/// alpha = 1 the Theil index. Requires strictly positive values.
double generalized_entropy(const Distribution& x, double alpha);

/// Exponential-gap family, ordinally equivalent to the Kolm class for
/// alpha > 0; at alpha = 0 it is half the variance under the chosen
/// denominator convention. Defined for all real status.
double kolm_family(const Distribution& x, double alpha,
                   VarianceConvention convention = VarianceConvention::population);

/// Absolute Gini (pairwise mean form) or its mean-relative version.
double gini(const Distribution& x, GiniVariant variant);

/// Rank-power generalisation of the absolute Gini: (1/n) sum c_j x_(j) with
/// c_j = b_j^gamma - mean(b^gamma), b_j = j/n - q - 1/(2n) over ascending x,
/// q = #{x_i <= mean}/n. gamma must be odd >= 1. At gamma = 1 equals half the
/// absolute Gini. The relative variant divides by the mean.
double extended_gini(const Distribution& x, int gamma, GiniVariant variant);

struct MeasureSpec;  // measures.hpp

/// Evaluates a mobility measure on the degenerate profile (u = x, v = mean(x))
/// — the equal destination that collapses each mobility index to its
/// inequality counterpart.
double reduce_mobility(const Distribution& x, const MeasureSpec& spec);

}  // namespace mobility
