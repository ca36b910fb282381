#include "mobility/class2.hpp"

#include <algorithm>
#include <cmath>

namespace mobility {

namespace {

double ipow(double base, int exponent) {
    double acc = 1.0;
    for (int k = 0; k < exponent; ++k) acc *= base;
    return acc;
}

void check_gamma(int gamma) {
    if (gamma < 0) fail(Errc::NegativeGamma, "gamma must be nonnegative");
    if (gamma >= 1 && gamma % 2 == 0)
        fail(Errc::EvenGamma, "gamma >= 1 must be odd (even powers lose the movement direction)");
}

std::vector<double> sorted_ascending(std::vector<double> d) {
    std::stable_sort(d.begin(), d.end());
    return d;
}

double p_of(const std::vector<double>& d) {
    std::size_t count = 0;
    for (double value : d)
        if (value < 0.0) ++count;
    return static_cast<double>(count) / static_cast<double>(d.size());
}

double measure_from(const std::vector<double>& d, double p, int gamma) {
    const auto a = weights(d.size(), p, gamma);
    const auto sorted = sorted_ascending(d);
    double acc = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) acc += a[i] * sorted[i];
    return acc / static_cast<double>(sorted.size());
}

}  // namespace

std::vector<double> distances(const MovementProfile& p, DistanceConcept c) {
    const std::size_t n = p.size();
    std::vector<double> d(n);
    switch (c) {
        case DistanceConcept::absolute:
            for (std::size_t i = 0; i < n; ++i) d[i] = p.v[i] - p.u[i];
            break;
        case DistanceConcept::scale_normalised: {
            const auto [mu_u, mu_v, count] = summary(p);
            if (mu_u == 0.0 || mu_v == 0.0)
                fail(Errc::ZeroMean, "scale-normalised distance needs nonzero period means");
            for (std::size_t i = 0; i < n; ++i) d[i] = p.v[i] / mu_v - p.u[i] / mu_u;
            break;
        }
        case DistanceConcept::translation_normalised: {
            const auto [mu_u, mu_v, count] = summary(p);
            for (std::size_t i = 0; i < n; ++i) d[i] = (p.v[i] - p.u[i]) - (mu_v - mu_u);
            break;
        }
    }
    return d;
}

double downward_proportion(const MovementProfile& p, DistanceConcept c, PMode mode) {
    if (mode == PMode::status_based) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.v[i] < p.u[i]) ++count;
        return static_cast<double>(count) / static_cast<double>(p.size());
    }
    return p_of(distances(p, c));
}

std::vector<double> weights(std::size_t n, double p, int gamma) {
    check_gamma(gamma);
    std::vector<double> a(n);
    const double dn = static_cast<double>(n);
    if (gamma == 0) {
        // p is a count over n; recover the count exactly rather than comparing
        // against p*n, whose rounding can land one ulp below the integer
        const auto cut = static_cast<std::size_t>(std::llround(p * dn));
        for (std::size_t i = 0; i < n; ++i) a[i] = i < cut ? -1.0 : 1.0;
        return a;
    }
    for (std::size_t i = 0; i < n; ++i)
        a[i] = ipow(static_cast<double>(i + 1) / dn - p - 0.5 / dn, gamma);
    return a;
}

double gamma_measure(const MovementProfile& p, DistanceConcept c, const WeightScheme& w) {
    const auto d = distances(p, c);
    const double prop = w.p_mode == PMode::status_based
                            ? downward_proportion(p, c, PMode::status_based)
                            : p_of(d);
    return measure_from(d, prop, w.gamma);
}

double gini_of_differences(const MovementProfile& p, DistanceConcept c) {
    const auto d = distances(p, c);
    const std::size_t n = d.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += std::fabs(d[i] - d[j]);
    return acc / (2.0 * static_cast<double>(n) * static_cast<double>(n));
}

DecompositionResult decompose_updown(const MovementProfile& p, DistanceConcept c,
                                     const WeightScheme& w) {
    if (w.gamma < 1) fail(Errc::BadArguments, "up/down decomposition needs gamma >= 1");
    check_gamma(w.gamma);
    const std::size_t n = p.size();
    const auto d = distances(p, c);
    const double prop = w.p_mode == PMode::status_based
                            ? downward_proportion(p, c, PMode::status_based)
                            : p_of(d);
    const auto m = static_cast<std::size_t>(std::llround(prop * static_cast<double>(n)));
    if (m == 0 || m == n)
        fail(Errc::DegeneratePartition, "up/down decomposition needs movers on both sides");

    const auto order = ascending_order(d);
    MovementProfile down, up;
    for (std::size_t i = 0; i < n; ++i) {
        auto& block = i < m ? down : up;
        block.u.push_back(p.u[order[i]]);
        block.v.push_back(p.v[order[i]]);
    }
    const auto d_down = sorted_ascending(distances(down, c));
    const auto d_up = sorted_ascending(distances(up, c));

    const auto a = weights(n, prop, w.gamma);
    const double w_down = ipow(prop, w.gamma + 1);
    const double w_up = ipow(1.0 - prop, w.gamma + 1);
    double gamma_down = 0.0, gamma_up = 0.0;
    for (std::size_t i = 0; i < m; ++i) gamma_down += a[i] * d_down[i];
    for (std::size_t i = m; i < n; ++i) gamma_up += a[i] * d_up[i - m];
    gamma_down /= static_cast<double>(n) * w_down;
    gamma_up /= static_cast<double>(n) * w_up;

    const auto pooled = sorted_ascending(d);
    double between = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double grouped = i < m ? d_down[i] : d_up[i - m];
        between += a[i] * (pooled[i] - grouped);
    }
    between /= static_cast<double>(n);

    DecompositionResult out;
    out.components.push_back({"down", w_down, gamma_down});
    out.components.push_back({"up", w_up, gamma_up});
    out.between = between;
    out.total = measure_from(d, prop, w.gamma);
    out.residual = out.total - (w_down * gamma_down + w_up * gamma_up + between);
    return out;
}

StatusVector rerank_to_destination(const MovementProfile& p) {
    StatusVector u_sorted = p.u;
    std::stable_sort(u_sorted.begin(), u_sorted.end());
    const auto v_order = ascending_order(p.v);
    StatusVector out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out[v_order[k]] = u_sorted[k];
    return out;
}

DecompositionResult decompose_seg(const MovementProfile& p, DistanceConcept c) {
    const WeightScheme scheme{1, PMode::distance_based};
    const std::size_t n = p.size();

    MovementProfile no_rerank{rerank_to_destination(p), p.v};
    const auto d = distances(p, c);
    const auto d_prime = distances(no_rerank, c);
    const double p_orig = p_of(d);
    const double p_prime = p_of(d_prime);

    const double structural = gamma_measure(no_rerank, c, scheme);
    const auto a_prime = weights(n, p_prime, 1);
    const auto pooled = sorted_ascending(d);
    const auto pooled_prime = sorted_ascending(d_prime);
    double exchange = 0.0;
    for (std::size_t i = 0; i < n; ++i) exchange += a_prime[i] * (pooled[i] - pooled_prime[i]);
    exchange /= static_cast<double>(n);

    double growth = 0.0;
    if (c == DistanceConcept::absolute) {
        const auto [mu_u, mu_v, count] = summary(p);
        growth = (p_prime - p_orig) * (mu_v - mu_u);
    }

    DecompositionResult out;
    out.components.push_back({"structural", 1.0, structural});
    out.components.push_back({"exchange", 1.0, exchange});
    out.components.push_back({"growth", 1.0, growth});
    out.total = gamma_measure(p, c, scheme);
    out.residual = out.total - (structural + exchange + growth);
    return out;
}

}  // namespace mobility
