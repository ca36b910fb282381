#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "mobility/class1.hpp"

using namespace mobility;

namespace {

const MovementProfile& scenario(char label) {
    static const StatusVector base{10, 20, 40};
    static const std::map<char, MovementProfile> table = {
        {'a', validate_profile(base, {20, 40, 80})},
        {'b', validate_profile(base, {15, 25, 45})},
        {'c', validate_profile(base, {20, 40, 10})},
        {'d', validate_profile(base, {40, 80, 20})},
        {'e', validate_profile(base, {25, 45, 15})},
        {'f', validate_profile(base, {10, 30, 40})},
        {'g', validate_profile(base, {10, 40, 160})},
    };
    return table.at(label);
}

MovementProfile random_positive(std::mt19937& gen, std::size_t n, double hi = 100.0) {
    std::uniform_real_distribution<double> value(1.0, hi);
    StatusVector u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = value(gen);
        v[i] = value(gen);
    }
    return validate_profile(std::move(u), std::move(v));
}

// matched up/down histories: for every (a, b) there is a (b, a)
MovementProfile symmetric_swap_profile(std::mt19937& gen, std::size_t pairs) {
    std::uniform_real_distribution<double> value(1.0, 50.0);
    StatusVector u, v;
    for (std::size_t k = 0; k < pairs; ++k) {
        const double a = value(gen);
        const double b = a + std::uniform_real_distribution<double>(0.5, 20.0)(gen);
        u.push_back(a);
        v.push_back(b);
        u.push_back(b);
        v.push_back(a);
    }
    return validate_profile(std::move(u), std::move(v));
}

SubgroupPartition random_partition(std::mt19937& gen, std::size_t n, std::size_t groups) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = i < groups ? i : std::uniform_int_distribution<std::size_t>(0, groups - 1)(gen);
    return make_partition(std::move(labels));
}

double rel_diff(double a, double b) { return std::fabs(a - b) / (1.0 + std::fabs(b)); }

}  // namespace

TEST_CASE("absolute power measure on the reference scenarios") {
    CHECK(a1(scenario('a'), 0.0) == doctest::Approx(32.347).epsilon(1e-4));
    CHECK(a1(scenario('f'), 0.0) == doctest::Approx(4.055).epsilon(1e-4));
    CHECK(a1(scenario('d'), 0.0) == doctest::Approx(50.831).epsilon(1e-4));
    CHECK(a1(scenario('g'), 0.0) == doctest::Approx(83.178).epsilon(1e-4));

    // the alpha = 0 branch in closed form
    const auto& p = scenario('c');
    double expected = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        expected -= p.v[i] * std::log(p.u[i] / p.v[i]);
    CHECK(a1(p, 0.0) == doctest::Approx(expected / 3).epsilon(1e-14));

    const auto still = validate_profile({3, 8, 2}, {3, 8, 2});
    for (double alpha : {-1.0, 0.0, 0.5, 2.0}) CHECK(std::fabs(a1(still, alpha)) < 1e-14);
}

TEST_CASE("absolute measure diverges at alpha 1 with unequal means") {
    CHECK(std::isinf(a1(scenario('a'), 1.0)));
    const auto swap = validate_profile({1, 2}, {2, 1});
    CHECK(std::isfinite(a1(swap, 1.0)));
    CHECK(a1(swap, 1.0) == doctest::Approx(0.5 * (std::log(0.5) + 2 * std::log(2.0))));
}

TEST_CASE("power branches reject status outside their domain") {
    const auto negative = validate_profile({-1, 2}, {1, 2});
    CHECK_THROWS_AS(a1(negative, 0.5), Error);
    CHECK_THROWS_AS(a1(negative, 0.0), Error);
    CHECK_THROWS_AS(s1(negative, 0.3), Error);
    CHECK_NOTHROW(t1(negative, 0.3));
    CHECK_NOTHROW(t1(negative, 0.0));
}

TEST_CASE("scale-independent measure on the reference scenarios") {
    CHECK(std::fabs(s1(scenario('a'), 0.0)) < 1e-14);
    CHECK(s1(scenario('c'), 0.0) == doctest::Approx(0.396).epsilon(1e-3));
    CHECK(s1(scenario('d'), 0.0) == doctest::Approx(s1(scenario('c'), 0.0)).epsilon(1e-12));
    CHECK(s1(scenario('b'), 0.0) == doctest::Approx(0.005).epsilon(2e-2));
    CHECK(s1(scenario('e'), 0.0) == doctest::Approx(0.332).epsilon(1e-3));
    CHECK(s1(scenario('f'), 0.0) == doctest::Approx(0.019).epsilon(2e-2));
    CHECK(s1(scenario('g'), 0.0) == doctest::Approx(0.090).epsilon(1e-2));
}

TEST_CASE("scale independence holds exactly") {
    std::mt19937 gen(21);
    std::uniform_real_distribution<double> factor(0.2, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_positive(gen, 3 + trial % 8);
        MovementProfile q = p;
        const double l0 = factor(gen), l1 = factor(gen);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q.u[i] *= l0;
            q.v[i] *= l1;
        }
        for (double alpha : {-1.0, 0.0, 0.3, 1.0, 2.0})
            CHECK(rel_diff(s1(q, alpha), s1(p, alpha)) < 1e-12);
    }
}

TEST_CASE("translation-independent measure on the reference scenarios") {
    CHECK(std::fabs(t1(scenario('b'), 0.0, VarianceConvention::sample)) < 1e-14);
    CHECK(t1(scenario('c'), 0.0, VarianceConvention::sample) == doctest::Approx(350.0));
    CHECK(t1(scenario('e'), 0.0, VarianceConvention::sample) == doctest::Approx(350.0));
    CHECK(t1(scenario('a'), 0.0, VarianceConvention::sample) ==
          doctest::Approx(116.667).epsilon(1e-4));
    CHECK(t1(scenario('d'), 0.0, VarianceConvention::sample) ==
          doctest::Approx(816.667).epsilon(1e-4));
    CHECK(t1(scenario('g'), 0.0, VarianceConvention::sample) ==
          doctest::Approx(2066.667).epsilon(1e-4));

    // population convention is the subgroup-exact default
    CHECK(t1(scenario('c'), 0.0) == doctest::Approx(700.0 / 3).epsilon(1e-12));
}

TEST_CASE("exponential branch matches a direct summation of its formula") {
    std::mt19937 gen(22);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_positive(gen, 5, 10.0);
        for (double alpha : {0.3, -0.4, 1.0}) {
            const auto [mu_u, mu_v, n] = summary(p);
            long double acc = 0.0L;
            for (std::size_t i = 0; i < p.size(); ++i)
                acc += std::exp(alpha * (p.u[i] - mu_u - p.v[i] + mu_v)) - 1.0L;
            const double expected = static_cast<double>(
                acc / (alpha * alpha * static_cast<long double>(p.size())));
            CHECK(rel_diff(t1(p, alpha), expected) < 1e-12);
        }
    }
}

TEST_CASE("translation independence holds") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> shift(-30.0, 30.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_positive(gen, 4, 20.0);
        MovementProfile q = p;
        const double d0 = shift(gen), d1 = shift(gen);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q.u[i] += d0;
            q.v[i] += d1;
        }
        for (double alpha : {0.0, 0.2, -0.3}) CHECK(rel_diff(t1(q, alpha), t1(p, alpha)) < 1e-10);
    }
}

TEST_CASE("intermediate family bridges the scale and translation forms") {
    std::mt19937 gen(24);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_positive(gen, 4, 10.0);
        for (double alpha : {-0.5, 0.4, 2.0})
            CHECK(rel_diff(intermediate(p, 0.0, alpha), s1(p, alpha)) < 1e-10);

        CHECK(std::fabs(intermediate(validate_profile(p.u, p.u), 2.0, 0.7)) < 1e-12);

        // alpha_tilde(c) = gamma + alpha*c approaches the exponential family
        const double alpha = 0.05, gamma = 0.5;
        const double target = t1(p, alpha);
        const double near = intermediate(p, 1e3, alpha_tilde_schedule(gamma, alpha, 1e3));
        const double nearer = intermediate(p, 1e6, alpha_tilde_schedule(gamma, alpha, 1e6));
        CHECK(rel_diff(nearer, target) < 1e-4);
        CHECK(rel_diff(nearer, target) < rel_diff(near, target));
    }
    CHECK_THROWS_AS(intermediate(scenario('a'), 1.0, 0.0), Error);
    CHECK_THROWS_AS(intermediate(scenario('a'), 1.0, 1.0), Error);
}

TEST_CASE("rank status keeps the power measures defined") {
    // fractional tie-averaged ranks are strictly positive, so the log and
    // power branches always evaluate
    const auto p = validate_profile({5, 5, 9, 2}, {7, 1, 7, 7});
    const auto ranks = transform_status(p, StatusTransform::rank);
    for (double alpha : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
        CHECK(std::isfinite(s1(ranks, alpha)));
        if (alpha != 1.0) CHECK(std::isfinite(a1(ranks, alpha)));
    }
    CHECK(s1(ranks, 0.0) > 0.0);
}

TEST_CASE("replication leaves all three families unchanged") {
    std::mt19937 gen(25);
    const auto p = random_positive(gen, 5);
    for (int r : {2, 3}) {
        const auto q = replicate(p, r);
        for (double alpha : {-1.0, 0.0, 0.3, 1.0, 2.0})
            CHECK(rel_diff(s1(q, alpha), s1(p, alpha)) < 1e-12);
        CHECK(rel_diff(a1(q, 0.0), a1(p, 0.0)) < 1e-12);
        CHECK(rel_diff(t1(q, 0.2), t1(p, 0.2)) < 1e-12);
        CHECK(rel_diff(t1(q, 0.0), t1(p, 0.0)) < 1e-12);
    }
}

TEST_CASE("continuity across the special alpha values") {
    const double eps = 1e-6;
    for (char label : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
        const auto& p = scenario(label);
        CHECK(std::fabs(s1(p, eps) - s1(p, 0.0)) < 1e-4);
        CHECK(std::fabs(s1(p, 1.0 + eps) - s1(p, 1.0)) < 1e-4);
        CHECK(std::fabs(a1(p, eps) - a1(p, 0.0)) < 1e-4);
        CHECK(rel_diff(t1(p, eps), t1(p, 0.0)) < 1e-4);
    }
}

TEST_CASE("matched mean-preserving spreads raise the scale-independent measure") {
    std::mt19937 gen(26);
    for (int trial = 0; trial < 50; ++trial) {
        MovementProfile p = random_positive(gen, 6);
        std::size_t i = 0, j = 1;
        p.v[i] = p.u[i] + 5.0;   // above the origin
        p.v[j] = p.u[j] * 0.5;   // below the origin
        MovementProfile q = p;
        const double delta = 0.3 * p.v[j];
        q.v[i] += delta;
        q.v[j] -= delta;
        for (double alpha : {-1.0, 0.0, 0.3, 0.5, 1.0, 2.0})
            CHECK(s1(q, alpha) > s1(p, alpha));
    }
}

TEST_CASE("subgroup split of the scale-independent measure reassembles exactly") {
    SUBCASE("single group collapses to the measure itself") {
        const auto& p = scenario('c');
        const auto whole = decompose_s1_subgroups(
            p, 0.3, make_partition(std::vector<std::size_t>(p.size(), 0)));
        CHECK(whole.components.size() == 1);
        CHECK(whole.components[0].value == doctest::Approx(s1(p, 0.3)).epsilon(1e-14));
        CHECK(std::fabs(whole.between) < 1e-12);
        CHECK(std::fabs(whole.residual) < 1e-12);
    }

    SUBCASE("up/down split of scenario 1c at the log limit") {
        const auto& p = scenario('c');
        const auto split = decompose_s1_subgroups(p, 0.0, updown_partition(p));
        CHECK(split.total == doctest::Approx(s1(p, 0.0)).epsilon(1e-14));
        CHECK(split.total == doctest::Approx(0.396).epsilon(1e-3));
        CHECK(std::fabs(split.residual) < 1e-10);
    }

    SUBCASE("random partitions across the alpha grid") {
        std::mt19937 gen(27);
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = random_positive(gen, 12);
            const auto g = random_partition(gen, 12, 3);
            for (double alpha : {-1.0, 0.3, 2.0, 0.0, 1.0}) {
                const auto d = decompose_s1_subgroups(p, alpha, g);
                CHECK(std::fabs(d.residual) < 1e-10);
            }
        }
    }
}

TEST_CASE("subgroup split of the translation-independent measure reassembles exactly") {
    SUBCASE("single group has no between term") {
        const auto& p = scenario('g');
        const auto whole = decompose_t1_subgroups(
            p, 0.0, make_partition(std::vector<std::size_t>(p.size(), 0)));
        CHECK(std::fabs(whole.between) < 1e-12);
        CHECK(std::fabs(whole.residual) < 1e-12);
    }

    SUBCASE("two-group split of scenario 1g") {
        const auto& p = scenario('g');
        const auto d = decompose_t1_subgroups(p, 0.0,
                                              make_partition({std::size_t{0}, 0, 1}));
        CHECK(std::fabs(d.residual) < 1e-10);
    }

    SUBCASE("random three-group partitions") {
        std::mt19937 gen(28);
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = random_positive(gen, 12, 30.0);
            const auto g = random_partition(gen, 12, 3);
            for (double alpha : {0.0, 0.2, -0.3}) {
                const auto d = decompose_t1_subgroups(p, alpha, g);
                CHECK(std::fabs(d.residual) < 1e-10 * (1.0 + std::fabs(d.total)));
            }
        }
    }
}

TEST_CASE("reversing histories maps alpha to one minus alpha") {
    const auto swap = validate_profile({1, 2}, {2, 1});
    CHECK(s1(reverse_profile(swap), 0.5) == doctest::Approx(s1(swap, 0.5)).epsilon(1e-14));

    CHECK(s1(reverse_profile(scenario('c')), 0.3) ==
          doctest::Approx(s1(scenario('c'), 0.7)).epsilon(1e-12));

    std::mt19937 gen(29);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_positive(gen, 5);
        const auto r = reverse_profile(p);
        for (double alpha : {-1.0, 0.0, 0.3, 0.5, 1.0, 2.0})
            CHECK(rel_diff(s1(r, alpha), s1(p, 1.0 - alpha)) < 1e-10);
        const auto rr = reverse_profile(r);
        CHECK(rr.u == p.u);
        CHECK(rr.v == p.v);
    }
}

TEST_CASE("up and down blocks of a symmetric-swap profile weigh by direction") {
    std::mt19937 gen(30);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = symmetric_swap_profile(gen, 4);
        const auto g = updown_partition(p);

        const auto mid = decompose_s1_subgroups(p, 0.5, g);
        CHECK(mid.components[0].weight == doctest::Approx(mid.components[1].weight).epsilon(1e-12));
        CHECK(mid.components[0].value == doctest::Approx(mid.components[1].value).epsilon(1e-10));

        const auto up_heavy = decompose_s1_subgroups(p, 0.3, g);
        CHECK(up_heavy.components[0].weight > up_heavy.components[1].weight);

        const auto down_heavy = decompose_s1_subgroups(p, 0.7, g);
        CHECK(down_heavy.components[0].weight < down_heavy.components[1].weight);
    }
}
