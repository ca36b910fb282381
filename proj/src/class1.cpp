#include "mobility/class1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mobility {

namespace {

bool means_equal(double a, double b) {
    return std::fabs(a - b) <= 1e-12 * (1.0 + std::fabs(a) + std::fabs(b));
}

bool is_integer(double x) { return x == std::floor(x); }

// u^a with the domain rules of real powers: nonpositive base allowed only for
// integer exponents (and nonzero base when the exponent is negative).
double checked_pow(double base, double exponent) {
    if (base > 0.0) return std::pow(base, exponent);
    if (!is_integer(exponent))
        fail(Errc::DomainError, "fractional power of nonpositive status is undefined");
    if (base == 0.0 && exponent < 0.0)
        fail(Errc::DomainError, "negative power of zero status is undefined");
    return std::pow(base, exponent);
}

void require_positive(const MovementProfile& p, const char* what) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.u[i] <= 0.0 || p.v[i] <= 0.0) fail(Errc::DomainError, what);
}

struct GroupViews {
    std::vector<MovementProfile> profiles;
    std::vector<double> shares;  // n_k / n
};

GroupViews split(const MovementProfile& p, const SubgroupPartition& g) {
    GroupViews out;
    out.profiles.resize(g.group_count);
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto& sub = out.profiles[g.group_of[i]];
        sub.u.push_back(p.u[i]);
        sub.v.push_back(p.v[i]);
    }
    out.shares.reserve(g.group_count);
    for (const auto& sub : out.profiles) {
        if (sub.u.empty()) fail(Errc::DegeneratePartition, "every group must be nonempty");
        out.shares.push_back(static_cast<double>(sub.size()) / static_cast<double>(p.size()));
    }
    return out;
}

}  // namespace

SubgroupPartition make_partition(std::vector<std::size_t> group_of) {
    SubgroupPartition g;
    g.group_of = std::move(group_of);
    for (std::size_t label : g.group_of) g.group_count = std::max(g.group_count, label + 1);
    std::vector<std::size_t> counts(g.group_count, 0);
    for (std::size_t label : g.group_of) ++counts[label];
    for (std::size_t c : counts)
        if (c == 0) fail(Errc::DegeneratePartition, "every group must be nonempty");
    return g;
}

double a1(const MovementProfile& p, double alpha) {
    const std::size_t n = p.size();
    const auto [mu_u, mu_v, count] = summary(p);
    if (alpha == 0.0) {
        require_positive(p, "a1 log branch needs strictly positive status");
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += p.v[i] * std::log(p.u[i] / p.v[i]);
        return -acc / static_cast<double>(n);
    }
    if (alpha == 1.0) {
        if (!means_equal(mu_u, mu_v)) return std::numeric_limits<double>::infinity();
        require_positive(p, "a1 log branch needs strictly positive status");
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += p.u[i] * std::log(p.u[i] / p.v[i]);
        return acc / static_cast<double>(n);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += checked_pow(p.u[i], alpha) * checked_pow(p.v[i], 1.0 - alpha) - mu_v;
    return acc / (alpha * (alpha - 1.0) * static_cast<double>(n));
}

double s1(const MovementProfile& p, double alpha) {
    require_positive(p, "s1 needs strictly positive status");
    const std::size_t n = p.size();
    const auto [mu_u, mu_v, count] = summary(p);
    if (alpha == 0.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += (p.v[i] / mu_v) * std::log((p.u[i] / mu_u) / (p.v[i] / mu_v));
        return -acc / static_cast<double>(n);
    }
    if (alpha == 1.0) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            acc += (p.u[i] / mu_u) * std::log((p.u[i] / mu_u) / (p.v[i] / mu_v));
        return acc / static_cast<double>(n);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::pow(p.u[i] / mu_u, alpha) * std::pow(p.v[i] / mu_v, 1.0 - alpha) - 1.0;
    return acc / (alpha * (alpha - 1.0) * static_cast<double>(n));
}

double t1(const MovementProfile& p, double alpha, VarianceConvention convention) {
    const std::size_t n = p.size();
    if (alpha == 0.0) {
        StatusVector gaps(n);
        for (std::size_t i = 0; i < n; ++i) gaps[i] = p.v[i] - p.u[i];
        return 0.5 * variance(gaps, convention);
    }
    const auto [mu_u, mu_v, count] = summary(p);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += std::expm1(alpha * (p.u[i] - mu_u - p.v[i] + mu_v));
    return acc / (alpha * alpha * static_cast<double>(n));
}

double intermediate(const MovementProfile& p, double c, double alpha_tilde) {
    if (c < 0.0) fail(Errc::BadArguments, "location parameter c must be nonnegative");
    if (alpha_tilde == 0.0 || alpha_tilde == 1.0)
        fail(Errc::BadAlphaTilde, "intermediate family needs alpha_tilde outside {0, 1}");
    const std::size_t n = p.size();
    const auto [mu_u, mu_v, count] = summary(p);
    const double theta = (1.0 + c * c) / (alpha_tilde * alpha_tilde - alpha_tilde);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double su = p.u[i] + c;
        const double sv = p.v[i] + c;
        if (su <= 0.0 || sv <= 0.0 || mu_u + c <= 0.0 || mu_v + c <= 0.0)
            fail(Errc::DomainError, "shifted status must be strictly positive");
        acc += std::pow(su / (mu_u + c), alpha_tilde) *
                   std::pow(sv / (mu_v + c), 1.0 - alpha_tilde) -
               1.0;
    }
    return theta * acc / static_cast<double>(n);
}

DecompositionResult decompose_s1_subgroups(const MovementProfile& p, double alpha,
                                           const SubgroupPartition& g) {
    require_positive(p, "s1 needs strictly positive status");
    const auto groups = split(p, g);
    const auto [mu_u, mu_v, n] = summary(p);

    DecompositionResult out;
    out.total = s1(p, alpha);
    double within = 0.0;
    double weight_sum = 0.0;
    double between_limit = 0.0;
    for (std::size_t k = 0; k < groups.profiles.size(); ++k) {
        const auto& sub = groups.profiles[k];
        const auto [mu_uk, mu_vk, nk] = summary(sub);
        const double ru = mu_uk / mu_u;
        const double rv = mu_vk / mu_v;
        double w;
        if (alpha == 0.0) {
            w = groups.shares[k] * rv;
            between_limit += -w * std::log(ru / rv);
        } else if (alpha == 1.0) {
            w = groups.shares[k] * ru;
            between_limit += w * std::log(ru / rv);
        } else {
            w = groups.shares[k] * std::pow(ru, alpha) * std::pow(rv, 1.0 - alpha);
        }
        const double value = sub.size() >= 2 ? s1(sub, alpha) : 0.0;
        out.components.push_back({"group" + std::to_string(k), w, value});
        within += w * value;
        weight_sum += w;
    }
    out.between = (alpha == 0.0 || alpha == 1.0)
                      ? between_limit
                      : (weight_sum - 1.0) / (alpha * alpha - alpha);
    out.residual = out.total - within - out.between;
    return out;
}

DecompositionResult decompose_t1_subgroups(const MovementProfile& p, double alpha,
                                           const SubgroupPartition& g) {
    const auto groups = split(p, g);
    const auto [mu_u, mu_v, n] = summary(p);

    DecompositionResult out;
    out.total = t1(p, alpha, VarianceConvention::population);
    double within = 0.0;
    double weight_sum = 0.0;
    double between0 = 0.0;
    double mu_d = mu_v - mu_u;
    for (std::size_t k = 0; k < groups.profiles.size(); ++k) {
        const auto& sub = groups.profiles[k];
        const auto [mu_uk, mu_vk, nk] = summary(sub);
        const double w = alpha == 0.0
                             ? groups.shares[k]
                             : groups.shares[k] *
                                   std::exp(alpha * (mu_uk - mu_u - mu_vk + mu_v));
        double value;
        if (sub.size() >= 2) {
            value = t1(sub, alpha, VarianceConvention::population);
        } else {
            value = 0.0;  // a singleton has no within-group dispersion
        }
        out.components.push_back({"group" + std::to_string(k), w, value});
        within += w * value;
        weight_sum += w;
        const double mu_dk = mu_vk - mu_uk;
        between0 += groups.shares[k] * mu_dk * mu_dk;
    }
    out.between = alpha == 0.0 ? 0.5 * (between0 - mu_d * mu_d)
                               : (weight_sum - 1.0) / (alpha * alpha);
    out.residual = out.total - within - out.between;
    return out;
}

MovementProfile reverse_profile(const MovementProfile& p) {
    return MovementProfile{p.v, p.u};
}

SubgroupPartition updown_partition(const MovementProfile& p) {
    std::vector<std::size_t> labels(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) labels[i] = p.u[i] <= p.v[i] ? 0 : 1;
    return make_partition(std::move(labels));
}

}  // namespace mobility
