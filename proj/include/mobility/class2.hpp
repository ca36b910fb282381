#pragma once

#include "mobility/decomposition.hpp"
#include "mobility/profile.hpp"

namespace mobility {

/// Class-2 measures aggregate rank-weighted per-person status differences.

/// Per-person distance definition.
enum class DistanceConcept {
    absolute,                ///< d_i = v_i - u_i
    scale_normalised,        ///< d_i = v_i/mu_v - u_i/mu_u (needs nonzero means)
    translation_normalised,  ///< d_i = (v_i - u_i) - (mu_v - mu_u)
};

/// How the downward-mover proportion p entering the weights is counted.
enum class PMode {
    status_based,    ///< p = #{v_i < u_i} / n
    distance_based,  ///< p = #{d_i < 0} / n on the chosen distance
};

/// Positional weights: gamma = 0 is the binary scheme (-1 below the mover cut,
/// +1 above); gamma >= 1 must be odd and gives (i/n - p - 1/(2n))^gamma.
struct WeightScheme {
    int gamma = 1;
    PMode p_mode = PMode::distance_based;
};

/// Per-person distances under the chosen concept, original order preserved.
std::vector<double> distances(const MovementProfile& p, DistanceConcept c);

/// Downward-mover proportion per p-mode.
double downward_proportion(const MovementProfile& p, DistanceConcept c, PMode mode);

/// The weight vector a_1..a_n over ascending-sorted distances for a
/// population of size n with downward share p. Throws EvenGamma /
/// NegativeGamma on invalid gamma.
std::vector<double> weights(std::size_t n, double p, int gamma);

/// (1/n) sum a_i d_(i): the absolute / scale-independent /
/// translation-independent class-2 measure, by distance concept.
double gamma_measure(const MovementProfile& p, DistanceConcept c, const WeightScheme& w);

/// Absolute Gini of the per-person distances, (1/(2 n^2)) sum |d_i - d_j|.
double gini_of_differences(const MovementProfile& p, DistanceConcept c);

/// Splits the measure into a downward block (first np sorted positions) and an
/// upward block, each re-evaluated with its own group means and weighted by
/// p^(gamma+1) and (1-p)^(gamma+1); the between term compares the pooled
/// distances with the group-evaluated ones. Requires 0 < p < 1 and odd gamma.
DecompositionResult decompose_updown(const MovementProfile& p, DistanceConcept c,
                                     const WeightScheme& w);

/// Structural / exchange / growth split through the intermediate vector u'
/// with rank(u') = rank(v). Fixed at gamma = 1 with distance-based p. The
/// growth term is nonzero only for the absolute concept.
DecompositionResult decompose_seg(const MovementProfile& p, DistanceConcept c);

/// u reordered so that ranks align with v (ties in v broken by original index).
StatusVector rerank_to_destination(const MovementProfile& p);

}  // namespace mobility
