#include "mobility/inequality.hpp"

#include <algorithm>
#include <cmath>

#include "mobility/measures.hpp"

namespace mobility {

namespace {

void require_positive(const Distribution& x, const char* what) {
    for (double value : x)
        if (value <= 0.0) fail(Errc::DomainError, what);
}

double ipow(double base, int exponent) {
    double acc = 1.0;
    for (int k = 0; k < exponent; ++k) acc *= base;
    return acc;
}

}  // namespace

double generalized_entropy(const Distribution& x, double alpha) {
    require_positive(x, "generalised entropy needs strictly positive values");
    const double mu = mean(x);
    const double n = static_cast<double>(x.size());
    if (alpha == 0.0) {
        double acc = 0.0;
        for (double value : x) acc += std::log(value / mu);
        return -acc / n;
    }
    if (alpha == 1.0) {
        double acc = 0.0;
        for (double value : x) acc += (value / mu) * std::log(value / mu);
        return acc / n;
    }
    double acc = 0.0;
    for (double value : x) acc += std::pow(value / mu, alpha) - 1.0;
    return acc / (alpha * (alpha - 1.0) * n);
}

double kolm_family(const Distribution& x, double alpha, VarianceConvention convention) {
    if (alpha == 0.0) return 0.5 * variance(x, convention);
    const double mu = mean(x);
    double acc = 0.0;
    for (double value : x) acc += std::expm1(alpha * (value - mu));
    return acc / (alpha * alpha * static_cast<double>(x.size()));
}

double gini(const Distribution& x, GiniVariant variant) {
    const std::size_t n = x.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += std::fabs(x[i] - x[j]);
    const double absolute = acc / (2.0 * static_cast<double>(n) * static_cast<double>(n));
    if (variant == GiniVariant::absolute) return absolute;
    const double mu = mean(x);
    if (mu == 0.0) fail(Errc::ZeroMean, "relative gini needs a nonzero mean");
    return absolute / mu;
}

double extended_gini(const Distribution& x, int gamma, GiniVariant variant) {
    if (gamma < 1) fail(Errc::NegativeGamma, "extended gini needs gamma >= 1");
    if (gamma % 2 == 0) fail(Errc::EvenGamma, "extended gini needs odd gamma");
    const std::size_t n = x.size();
    const double dn = static_cast<double>(n);
    const double mu = mean(x);

    // share weakly below the mean; the weight cut that makes the class-2
    // reduction identity exact
    std::size_t below = 0;
    for (double value : x)
        if (value <= mu) ++below;
    const double q = static_cast<double>(below) / dn;

    std::vector<double> b_pow(n);
    double b_mean = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        b_pow[j] = ipow(static_cast<double>(j + 1) / dn - q - 0.5 / dn, gamma);
        b_mean += b_pow[j];
    }
    b_mean /= dn;

    Distribution sorted = x;
    std::stable_sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += (b_pow[j] - b_mean) * sorted[j];
    const double absolute = acc / dn;
    if (variant == GiniVariant::absolute) return absolute;
    if (mu == 0.0) fail(Errc::ZeroMean, "relative extended gini needs a nonzero mean");
    return absolute / mu;
}

double reduce_mobility(const Distribution& x, const MeasureSpec& spec) {
    const double mu = mean(x);
    MovementProfile p = validate_profile(x, StatusVector(x.size(), mu));
    return evaluate(spec, p);
}

}  // namespace mobility
