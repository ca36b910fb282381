#include "mobility/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mobility {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::TooSmall: return "TooSmall";
        case Errc::NonFinite: return "NonFinite";
        case Errc::NonPositiveForLog: return "NonPositiveForLog";
        case Errc::DegenerateOrigin: return "DegenerateOrigin";
        case Errc::DegenerateVariance: return "DegenerateVariance";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::NonPositiveIncome: return "NonPositiveIncome";
        case Errc::NonPositiveOrigin: return "NonPositiveOrigin";
        case Errc::BadAlpha: return "BadAlpha";
        case Errc::BadAlphaTilde: return "BadAlphaTilde";
        case Errc::DomainError: return "DomainError";
        case Errc::EvenGamma: return "EvenGamma";
        case Errc::NegativeGamma: return "NegativeGamma";
        case Errc::ZeroMean: return "ZeroMean";
        case Errc::DegeneratePartition: return "DegeneratePartition";
        case Errc::UnknownGroupId: return "UnknownGroupId";
        case Errc::MissingHeader: return "MissingHeader";
        case Errc::BadNumber: return "BadNumber";
        case Errc::DuplicateId: return "DuplicateId";
        case Errc::BadArguments: return "BadArguments";
    }
    return "Unknown";
}

MovementProfile validate_profile(StatusVector u, StatusVector v) {
    if (u.size() != v.size())
        fail(Errc::LengthMismatch, "period vectors have different lengths");
    if (u.size() < 2)
        fail(Errc::TooSmall, "a movement profile needs at least two histories");
    for (const StatusVector* x : {&u, &v})
        for (double value : *x)
            if (!std::isfinite(value))
                fail(Errc::NonFinite, "status values must be finite");
    return MovementProfile{std::move(u), std::move(v)};
}

std::vector<std::size_t> ascending_order(const StatusVector& x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    return idx;
}

StatusVector fractional_ranks(const StatusVector& x) {
    const std::size_t n = x.size();
    const auto order = ascending_order(x);
    StatusVector ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        // average of the fractional positions (i+1)/n ... (j+1)/n
        const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1)) /
                           static_cast<double>(n);
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

MovementProfile transform_status(const MovementProfile& p, StatusTransform t) {
    switch (t) {
        case StatusTransform::identity:
            return p;
        case StatusTransform::log_status: {
            MovementProfile out;
            out.u.reserve(p.size());
            out.v.reserve(p.size());
            for (const StatusVector* src : {&p.u, &p.v}) {
                StatusVector& dst = src == &p.u ? out.u : out.v;
                for (double value : *src) {
                    if (value <= 0.0)
                        fail(Errc::NonPositiveForLog, "log transform needs strictly positive status");
                    dst.push_back(std::log(value));
                }
            }
            return out;
        }
        case StatusTransform::rank:
            return MovementProfile{fractional_ranks(p.u), fractional_ranks(p.v)};
    }
    fail(Errc::BadArguments, "unknown status transform");
}

MovementProfile replicate(const MovementProfile& p, int r) {
    if (r < 1) fail(Errc::BadArguments, "replication factor must be >= 1");
    MovementProfile out;
    out.u.reserve(p.size() * static_cast<std::size_t>(r));
    out.v.reserve(p.size() * static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        out.u.insert(out.u.end(), p.u.begin(), p.u.end());
        out.v.insert(out.v.end(), p.v.begin(), p.v.end());
    }
    return out;
}

double mean(const StatusVector& x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

SummaryStats summary(const MovementProfile& p) {
    return SummaryStats{mean(p.u), mean(p.v), p.size()};
}

double variance(const StatusVector& x, VarianceConvention c) {
    const double mu = mean(x);
    double acc = 0.0;
    for (double value : x) acc += (value - mu) * (value - mu);
    const double denom = c == VarianceConvention::population
                             ? static_cast<double>(x.size())
                             : static_cast<double>(x.size() - 1);
    return acc / denom;
}

double covariance(const StatusVector& x, const StatusVector& y) {
    const double mx = mean(x);
    const double my = mean(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - mx) * (y[i] - my);
    return acc / static_cast<double>(x.size());
}

}  // namespace mobility
