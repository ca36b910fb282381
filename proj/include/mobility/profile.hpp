#pragma once

#include <cstddef>
#include <vector>

#include "mobility/errors.hpp"

namespace mobility {

/// Status values for one period (income, log-income, or rank), one entry per person.
using StatusVector = std::vector<double>;

/// Paired status vectors: person i's history is (u[i], v[i]).
/// Index order carries no meaning beyond the pairing; every measure in this
/// library is invariant under permutations of histories. Profiles are value
/// types and never mutated in place, so they can be shared freely across threads.
struct MovementProfile {
    StatusVector u;  ///< period-0 status
    StatusVector v;  ///< period-1 status

    std::size_t size() const noexcept { return u.size(); }
};

enum class StatusTransform { identity, log_status, rank };

struct SummaryStats {
    double mu_u = 0.0;
    double mu_v = 0.0;
    std::size_t n = 0;
};

/// Builds a profile after checking the invariants: equal lengths, n >= 2,
/// all values finite. Throws LengthMismatch / TooSmall / NonFinite.
MovementProfile validate_profile(StatusVector u, StatusVector v);

/// Applies the transform to each period independently. `log_status` requires
/// strictly positive values; `rank` maps values to fractional positions i/n
/// in (0, 1], ties receiving the average of their positions.
MovementProfile transform_status(const MovementProfile& p, StatusTransform t);

/// Repeats every history r times (r >= 1). Population-size-independent
/// measures are unchanged under replication.
MovementProfile replicate(const MovementProfile& p, int r);

SummaryStats summary(const MovementProfile& p);

double mean(const StatusVector& x);

/// Variance denominator convention: n (population) or n-1 (sample).
enum class VarianceConvention { population, sample };

double variance(const StatusVector& x, VarianceConvention c = VarianceConvention::population);

/// Population covariance (divide by n).
double covariance(const StatusVector& x, const StatusVector& y);

/// Fractional tie-averaged ranks of a single vector, values in (0, 1].
StatusVector fractional_ranks(const StatusVector& x);

/// Indices of x in ascending order of value; ties keep original index order.
std::vector<std::size_t> ascending_order(const StatusVector& x);

}  // namespace mobility
