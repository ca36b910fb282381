#include <doctest.h>

#include <cmath>
#include <random>

#include "mobility/profile.hpp"

using namespace mobility;

namespace {

// independent rank assigner: average of the 1-based positions a value spans
StatusVector brute_force_ranks(const StatusVector& x) {
    const double n = static_cast<double>(x.size());
    StatusVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (double other : x) {
            if (other < x[i]) ++less;
            if (other == x[i]) ++equal;
        }
        out[i] = (static_cast<double>(less) + 0.5 * static_cast<double>(equal + 1)) / n;
    }
    return out;
}

}  // namespace

TEST_CASE("profile validation") {
    const auto p = validate_profile({10, 20, 40}, {20, 40, 80});
    CHECK(p.size() == 3);

    CHECK_THROWS_WITH_AS(validate_profile({1, 2}, {1, 2, 3}), doctest::Contains("lengths"),
                         Error);
    CHECK_THROWS_AS(validate_profile({1}, {2}), Error);
    CHECK_THROWS_AS(validate_profile({1, std::nan("")}, {2, 3}), Error);

    const auto still = validate_profile({10, 20, 40}, {10, 20, 40});
    CHECK(still.u == still.v);
}

TEST_CASE("status transforms") {
    const auto p = validate_profile({10, 20, 40}, {20, 40, 80});

    const auto same = transform_status(p, StatusTransform::identity);
    CHECK(same.u == p.u);
    CHECK(same.v == p.v);

    const auto logs = transform_status(p, StatusTransform::log_status);
    CHECK(logs.u[0] == doctest::Approx(std::log(10.0)).epsilon(1e-15));
    CHECK(logs.u[2] == doctest::Approx(std::log(40.0)).epsilon(1e-15));
    CHECK_THROWS_AS(
        transform_status(validate_profile({0.0, 1.0}, {1.0, 2.0}), StatusTransform::log_status),
        Error);

    const auto ranks = transform_status(p, StatusTransform::rank);
    CHECK(ranks.u[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(ranks.u[1] == doctest::Approx(2.0 / 3).epsilon(1e-15));
    CHECK(ranks.u[2] == doctest::Approx(1.0).epsilon(1e-15));

    const auto tied = transform_status(validate_profile({5, 5, 9}, {1, 2, 3}),
                                       StatusTransform::rank);
    CHECK(tied.u[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tied.u[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tied.u[2] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rank transform agrees with the brute-force assigner and ignores monotone maps") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> value(1, 6);
    std::uniform_int_distribution<int> size(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        StatusVector x(static_cast<std::size_t>(size(gen)));
        for (double& xi : x) xi = static_cast<double>(value(gen));  // plenty of ties

        const auto got = fractional_ranks(x);
        const auto expected = brute_force_ranks(x);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-14));

        StatusVector mapped(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) mapped[i] = x[i] * x[i] * x[i] + 2.0 * x[i];
        const auto mapped_ranks = fractional_ranks(mapped);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(mapped_ranks[i] == doctest::Approx(got[i]).epsilon(1e-14));
    }
}

TEST_CASE("replication preserves size and means") {
    const auto p = validate_profile({10, 20, 40}, {20, 40, 80});

    const auto once = replicate(p, 1);
    CHECK(once.u == p.u);
    CHECK(once.v == p.v);

    const auto twice = replicate(p, 2);
    CHECK(twice.size() == 6);
    CHECK(summary(twice).mu_u == doctest::Approx(summary(p).mu_u).epsilon(1e-15));
    CHECK(summary(twice).mu_v == doctest::Approx(summary(p).mu_v).epsilon(1e-15));

    CHECK_THROWS_AS(replicate(p, 0), Error);
}

TEST_CASE("summary statistics") {
    CHECK(summary(validate_profile({10, 20, 40}, {20, 40, 80})).mu_u ==
          doctest::Approx(70.0 / 3).epsilon(1e-15));
    const auto flat = summary(validate_profile({5, 5}, {5, 5}));
    CHECK(flat.mu_u == 5.0);
    CHECK(flat.mu_v == 5.0);
    CHECK(summary(validate_profile({10, 20, 40}, {10, 40, 160})).mu_v == doctest::Approx(70.0));
}

TEST_CASE("ascending order is stable under ties") {
    const StatusVector x{3, 1, 3, 0};
    const auto order = ascending_order(x);
    CHECK(order == std::vector<std::size_t>{3, 1, 0, 2});
}
