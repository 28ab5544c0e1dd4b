#include "distinctseq/simulation.hpp"

#include "distinctseq/analytics.hpp"
#include "distinctseq/oracle.hpp"

#include "doctest.h"

#include <cmath>

using namespace distinctseq;
using namespace distinctseq::simulation;
namespace an = distinctseq::analytics;

namespace {

double exact(const Rational& r) { return r.convert_to<double>(); }

bool within(const ExpectationEstimate& e, double target, double k = 4) {
    return std::abs(e.mean - target) <= k * e.standard_error;
}

}  // namespace

TEST_CASE("generator reference outputs") {
    SplitMix64 sm(0);
    CHECK(sm.next() == 0xe220a8397b1dcdafULL);
    CHECK(sm.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(sm.next() == 0x06c45d188009454fULL);

    Xoshiro256StarStar x(std::array<std::uint64_t, 4>{1, 2, 3, 4});
    CHECK(x() == 11520ULL);
    CHECK(x() == 0ULL);
    CHECK(x() == 1509978240ULL);
    CHECK(x() == 1215971899390074240ULL);
}

TEST_CASE("jump gives a distinct, reproducible substream") {
    Xoshiro256StarStar a(99), b(99);
    a.jump();
    b.jump();
    CHECK(a == b);
    Xoshiro256StarStar c(99);
    CHECK_FALSE(a == c);
    CHECK(a() == b());
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(simulate({0, Algorithm::Linear, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(simulate({5, Algorithm::Linear, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(simulate_sequence({4, Algorithm::Matrix, 10, 1, 1}), std::invalid_argument);
}

TEST_CASE("n = 1 is deterministic") {
    for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket, Algorithm::Matrix}) {
        const auto r = simulate({1, alg, 1000, 3, 1});
        CHECK(r.comparisons.sample_variance == 0);
        CHECK(r.total.sample_variance == 0);
        CHECK(r.comparisons.good_fraction == 1);
    }
}

TEST_CASE("same seed, same result; thread count does not matter") {
    const SimulationConfig base{12, Algorithm::Bucket, 200'000, 1234, 1};
    const auto a = simulate(base);
    auto cfg = base;
    CHECK(simulate(cfg) == a);
    cfg.threads = 4;
    CHECK(simulate(cfg) == a);
    cfg.threads = 16;
    CHECK(simulate(cfg) == a);
    cfg.seed = 1235;
    CHECK_FALSE(simulate(cfg) == a);
}

TEST_CASE("estimate fields") {
    const auto r = simulate({7, Algorithm::Backward, 50'000, 5, 2});
    for (const auto* e : {&r.comparisons, &r.assignments, &r.total}) {
        CHECK(e->trials == 50'000);
        CHECK(e->standard_error == doctest::Approx(std::sqrt(e->sample_variance / 50'000.0)));
        CHECK(e->good_fraction >= 0);
        CHECK(e->good_fraction <= 1);
    }
    CHECK(r.total.mean == doctest::Approx(r.comparisons.mean + r.assignments.mean));
}

TEST_CASE("means match exact expectations") {
    auto r = simulate({10, Algorithm::Linear, 1'000'000, 42, 4});
    CHECK(within(r.comparisons, 4.659853));
    CHECK(within(r.comparisons, exact(an::expected_comparisons_linear(10))));
    CHECK(within(r.total, exact(an::expected_cost(10, Algorithm::Linear).expected_time.rational())));

    r = simulate({10, Algorithm::Backward, 1'000'000, 42, 4});
    CHECK(within(r.comparisons, 8.667896));

    r = simulate({9, Algorithm::Bucket, 1'000'000, 42, 4});
    CHECK(within(r.comparisons, exact(an::expected_comparisons_bucket(9))));
    CHECK(within(r.assignments, exact(an::expected_assignments_bucket(9))));
    const double p = exact(an::factorial_ratio(9));
    CHECK(std::abs(r.comparisons.good_fraction - p) <= 4 * std::sqrt(p * (1 - p) / 1e6));
}

TEST_CASE("matrix simulation") {
    const auto o = oracle::exhaustive_expectation(2, Algorithm::Matrix);
    auto r = simulate({2, Algorithm::Matrix, 1'000'000, 7, 4});
    CHECK(within(r.comparisons, exact(o.mean_comparisons)));
    CHECK(within(r.total, exact(o.mean_total)));

    r = simulate({16, Algorithm::Matrix, 100'000, 7, 4});
    const double line = 1 + exact(an::expected_time_bucket(16));
    const double slack = 4 * r.total.standard_error / r.total.mean;
    CHECK(r.total.mean >= line * (1 - 1e-2) * (1 - slack));
    CHECK(r.total.mean <= line * (1 + 1e-2) * (1 + slack));

    r = simulate({4, Algorithm::Matrix, 100'000, 7, 4});
    const double p = std::pow(exact(an::factorial_ratio(4)), 8);
    CHECK(std::abs(r.total.good_fraction - p) <= 4 * std::sqrt(p * (1 - p) / 1e5) + 1e-5);
}

TEST_CASE("slow: means within 4 SE of the oracle for >= 99 of 100 seeds") {
    for (int n = 2; n <= 5; ++n) {
        for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket}) {
            const auto o = oracle::exhaustive_expectation(n, alg);
            int hits = 0;
            for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                const auto r = simulate({n, alg, 20'000, seed, 1});
                hits += within(r.comparisons, exact(o.mean_comparisons)) ? 1 : 0;
            }
            INFO("n=" << n << " " << algorithm_name(alg));
            CHECK(hits >= 99);
        }
    }
}
