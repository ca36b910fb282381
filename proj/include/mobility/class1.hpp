#pragma once

#include "mobility/decomposition.hpp"
#include "mobility/profile.hpp"

namespace mobility {

/// Class-1 measures aggregate per-person power evaluations u^a v^(1-a) of the
/// two status levels. `alpha` steers directional sensitivity: large positive
/// values weight downward movements, negative values upward ones.

/// Absolute form. Branches: the power form for alpha outside {0,1}; log forms
/// in the limits. At alpha = 1 with unequal period means the measure diverges
/// and +infinity is returned (a value, not an error).
double a1(const MovementProfile& p, double alpha);

/// Scale-independent form (status normalised by period means); zero iff the
/// mean-share of every person is unchanged. Requires positive status.
double s1(const MovementProfile& p, double alpha);

/// Translation-independent form; exponential in the status gaps, with
/// half-the-variance of (v - u) as the alpha = 0 limit.
double t1(const MovementProfile& p, double alpha,
          VarianceConvention convention = VarianceConvention::population);

/// Intermediate family: s1 evaluated on (u + c, v + c) and rescaled by
/// theta(c) = (1 + c^2)/(alpha_tilde^2 - alpha_tilde). At c = 0 it equals
/// s1(p, alpha_tilde); as c grows with alpha_tilde = gamma + alpha*c it
/// approaches t1(p, alpha).
double intermediate(const MovementProfile& p, double c, double alpha_tilde);

/// Affine sensitivity schedule for the intermediate family.
inline double alpha_tilde_schedule(double gamma, double alpha, double c) {
    return gamma + alpha * c;
}

/// Subgroup decomposition of s1: within components weighted by
/// p_k (mu_uk/mu_u)^alpha (mu_vk/mu_v)^(1-alpha), plus a between term built
/// from the group means alone. Exact for all alpha including the 0/1 limits.
DecompositionResult decompose_s1_subgroups(const MovementProfile& p, double alpha,
                                           const SubgroupPartition& g);

/// Subgroup decomposition of t1 with weights (n_k/n) e^(alpha gap of group means).
/// Uses the population variance convention at alpha = 0, where it is exact.
DecompositionResult decompose_t1_subgroups(const MovementProfile& p, double alpha,
                                           const SubgroupPartition& g);

/// Swaps origins and destinations; s1 on the reverse profile equals s1 with
/// alpha replaced by 1 - alpha.
MovementProfile reverse_profile(const MovementProfile& p);

/// Partition into upward (u_i <= v_i) and downward (u_i > v_i) movers;
/// group 0 is upward.
SubgroupPartition updown_partition(const MovementProfile& p);

}  // namespace mobility
