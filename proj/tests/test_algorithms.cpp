#include "distinctseq/algorithms.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace distinctseq;

namespace {

bool all_distinct(std::vector<Value> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::vector<Value> random_sequence(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<Value> d(1, static_cast<Value>(n));
    std::vector<Value> s(n);
    for (auto& v : s) v = d(rng);
    return s;
}

// Calls f on every sequence in [1,n]^n.
template <class F>
void for_each_sequence(std::size_t n, F&& f) {
    std::vector<Value> s(n, 1);
    for (;;) {
        f(s);
        std::size_t i = n;
        while (i > 0 && s[i - 1] == n) s[--i] = 1;
        if (i == 0) return;
        ++s[i - 1];
    }
}

std::uint64_t pairs(std::uint64_t k) { return k * (k - 1) / 2; }

}  // namespace

TEST_CASE("linear: hand-traced runs") {
    auto r = linear_test(Sequence(std::vector<Value>{1, 1}));
    CHECK_FALSE(r.good);
    CHECK(r.counters.comparisons() == 2);
    CHECK(r.counters.assignments() == 4);
    CHECK(r.stop_index == 2);

    r = linear_test(Sequence(std::vector<Value>{1, 2, 3}));
    CHECK(r.good);
    CHECK(r.counters.comparisons() == 3);
    CHECK(r.counters.assignments() == 7);
    CHECK(r.stop_index == 3);
}

TEST_CASE("linear: a repeat after a distinct prefix of length k costs k+1 comparisons") {
    // prefix 2 5 1 4 (k = 4), then a repeat of 5
    const auto r = linear_test(Sequence(std::vector<Value>{2, 5, 1, 4, 5, 3}));
    CHECK_FALSE(r.good);
    CHECK(r.counters.comparisons() == 5);
    CHECK(r.counters.assignments() == 1 + 6 + 4);
    CHECK(r.stop_index == 5);
}

TEST_CASE("backward: hand-traced runs") {
    auto r = backward_test(Sequence(std::vector<Value>{1, 1}));
    CHECK_FALSE(r.good);
    CHECK(r.counters.comparisons() == 1);
    CHECK(r.counters.assignments() == 2);

    r = backward_test(Sequence(std::vector<Value>{1, 2, 3, 4}));
    CHECK(r.good);
    CHECK(r.counters.comparisons() == 6);
    CHECK(r.counters.assignments() == 1);
}

TEST_CASE("backward: scans j downward from i-1") {
    // s_3 = 1 matches s_1 after first comparing with s_2
    const auto r = backward_test(Sequence(std::vector<Value>{1, 2, 1}));
    CHECK(r.counters.comparisons() == 1 + 2);
    CHECK(r.stop_index == 3);
}

TEST_CASE("bucket: hand-traced runs at n=4") {
    auto r = bucket_test(Sequence(std::vector<Value>{1, 1, 3, 4}));
    CHECK_FALSE(r.good);
    CHECK(r.counters.comparisons() == 1);
    CHECK(r.stop_index == 2);
    // g, m, c_1, c_2, then r/Q/c for s_1, r for s_2, g <- False
    CHECK(r.counters.assignments() == 2 + 2 + 3 + 1 + 1);

    r = bucket_test(Sequence(std::vector<Value>{1, 2, 3, 4}));
    CHECK(r.good);
    CHECK(r.counters.comparisons() == 2);
    CHECK(r.counters.assignments() == 2 + 2 + 3 * 4);
}

TEST_CASE("bucket: ragged last bucket for non-square n") {
    CHECK(bucket_count(1) == 1);
    CHECK(bucket_count(2) == 2);
    CHECK(bucket_count(3) == 2);
    CHECK(bucket_count(10) == 4);
    CHECK(bucket_count(16) == 4);
    const auto r = bucket_test(Sequence(std::vector<Value>{3, 1, 2}));
    CHECK(r.good);
    CHECK(r.counters.comparisons() == 1);  // 1 and 2 share bucket 1
}

TEST_CASE("matrix: small cases") {
    auto r = matrix_test(SquareMatrix(2, {1, 2, 2, 1}));
    CHECK(r.good);
    CHECK(r.lines_tested == 4);
    CHECK(r.counters.assignments() == 1 + 4 * (2 + 2 + 3 * 2));

    r = matrix_test(SquareMatrix(2, {1, 1, 2, 1}));
    CHECK_FALSE(r.good);
    CHECK(r.stop.phase == MatrixPhase::Rows);
    CHECK(r.stop.line == 1);
    CHECK(r.lines_tested == 1);

    // rows good, column 2 holds 2, 2
    r = matrix_test(SquareMatrix(2, {1, 2, 2, 2}));
    CHECK_FALSE(r.good);
    CHECK(r.stop.phase == MatrixPhase::Rows);
    CHECK(r.stop.line == 2);

    r = matrix_test(SquareMatrix(2, {1, 2, 1, 2}));
    CHECK_FALSE(r.good);
    CHECK(r.stop.phase == MatrixPhase::Columns);
    CHECK(r.stop.line == 1);
    CHECK(r.lines_tested == 3);
}

TEST_CASE("matrix: counters are the line-1 assignment plus every Bucket run") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3;
        std::vector<Value> cells = random_sequence(rng, n * n);
        for (auto& c : cells) c = (c - 1) % n + 1;
        const SquareMatrix m(n, cells);
        const auto r = matrix_test(m);
        CostCounters expect;
        expect.assign();
        bool good = true;
        std::size_t lines = 0;
        for (std::size_t k = 0; k < 2 * n && good; ++k) {
            std::vector<Value> line(n);
            for (std::size_t i = 0; i < n; ++i) line[i] = k < n ? m.at(k, i) : m.at(i, k - n);
            const auto b = bucket_test(line);
            expect += b.counters;
            good = b.good;
            ++lines;
        }
        CHECK(r.counters == expect);
        CHECK(r.good == good);
        CHECK(r.lines_tested == lines);
    }
}

TEST_CASE("matrix: streamed rows give the same outcome") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (int t = 0; t < 100; ++t) {
            std::vector<Value> cells(n * n);
            std::uniform_int_distribution<Value> d(1, static_cast<Value>(n));
            for (auto& c : cells) c = d(rng);
            if (t % 10 == 0) {  // force some good matrices
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Value>((i + j) % n + 1);
                }
            }
            const auto direct = matrix_test(SquareMatrix(n, cells));
            const auto streamed = matrix_test_streamed(n, [&](std::size_t i, std::span<Value> row) {
                std::copy_n(cells.begin() + static_cast<std::ptrdiff_t>(i * n), n, row.begin());
            });
            CHECK(direct == streamed);
        }
    }
}

TEST_CASE("input validation is a separate error channel") {
    CHECK_THROWS_AS(Sequence(3, {1, 2}), InvalidInput);
    CHECK_THROWS_AS(Sequence(3, {1, 2, 4}), InvalidInput);
    CHECK_THROWS_AS(Sequence(3, {0, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(Sequence(0, {}), InvalidInput);
    CHECK_THROWS_AS(SquareMatrix(2, {1, 2, 3}), InvalidInput);
    CHECK_THROWS_AS(SquareMatrix(2, {1, 2, 3, 1}), InvalidInput);
    const std::vector<Value> bad = {1, 5};
    CHECK_THROWS_AS(linear_test(bad), InvalidInput);
    CHECK_THROWS_AS(backward_test(bad), InvalidInput);
    CHECK_THROWS_AS(bucket_test(bad), InvalidInput);
    CHECK_THROWS_AS(run_sequence_test(Algorithm::Matrix, std::vector<Value>{1}), std::invalid_argument);
    CHECK_THROWS_AS(matrix_test_streamed(2, [](std::size_t, std::span<Value> row) { row[0] = 3; row[1] = 1; }),
                    InvalidInput);
}

TEST_CASE("algorithm names round-trip") {
    for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket, Algorithm::Matrix}) {
        CHECK(parse_algorithm(algorithm_name(alg)) == alg);
    }
    CHECK_THROWS_AS(parse_algorithm("quick"), std::invalid_argument);
}

TEST_CASE("property: verdicts agree with sort-and-scan, exhaustively for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_sequence(n, [&](const std::vector<Value>& s) {
            const bool truth = all_distinct(s);
            REQUIRE(linear_test(s).good == truth);
            REQUIRE(backward_test(s).good == truth);
            REQUIRE(bucket_test(s).good == truth);
        });
    }
}

TEST_CASE("property: verdicts agree on random inputs up to n = 256") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 3000; ++t) {
        const std::size_t n = 1 + rng() % 256;
        auto s = random_sequence(rng, n);
        if (t % 3 == 0) {
            std::iota(s.begin(), s.end(), Value{1});
            std::shuffle(s.begin(), s.end(), rng);
        }
        const bool truth = all_distinct(s);
        REQUIRE(linear_test(s).good == truth);
        REQUIRE(backward_test(s).good == truth);
        REQUIRE(bucket_test(s).good == truth);
    }
}

TEST_CASE("property: stop index marks the first repetition in scan order") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 1 + rng() % 40;
        const auto s = random_sequence(rng, n);
        for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket}) {
            const auto r = run_sequence_test(alg, s);
            if (r.good) {
                REQUIRE(r.stop_index == n);
                continue;
            }
            const std::vector<Value> prefix(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r.stop_index));
            const std::vector<Value> strict(prefix.begin(), prefix.end() - 1);
            REQUIRE_FALSE(all_distinct(prefix));
            REQUIRE(all_distinct(strict));
        }
    }
}

TEST_CASE("property: count bounds") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = m * m;
        const auto s = random_sequence(rng, n);
        CHECK(linear_test(s).counters.comparisons() <= n);
        CHECK(backward_test(s).counters.comparisons() <= pairs(n));
        CHECK(bucket_test(s).counters.comparisons() <= m * pairs(m) + 1);
    }
}

TEST_CASE("bucket worst case on square n is m B(m,2) + 1") {
    for (std::size_t n : {1u, 4u}) {
        const std::size_t m = bucket_count(n);
        std::uint64_t worst = 0;
        for_each_sequence(n, [&](const std::vector<Value>& s) {
            worst = std::max(worst, bucket_test(s).counters.comparisons());
        });
        CHECK(worst == (n == 1 ? 0 : m * pairs(m) + 1));
    }
    // the extremal input at n=4: fill buckets 1 and 2 except value 4, then repeat 2
    CHECK(bucket_test(std::vector<Value>{1, 2, 3, 2}).counters.comparisons() == 3);
}

TEST_CASE("best cases") {
    for (std::size_t n : {4u, 16u, 64u}) {
        const std::vector<Value> s(n, 1);
        CHECK(linear_test(s).counters.comparisons() == 2);
        CHECK(backward_test(s).counters.comparisons() == 1);
        const auto b = bucket_test(s);
        CHECK(b.counters.comparisons() == 1);
        CHECK(b.counters.assignments() == bucket_count(n) + 7);
    }
}

TEST_CASE("determinism: identical input, identical outcome") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 200; ++t) {
        const auto s = random_sequence(rng, 1 + rng() % 30);
        for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket}) {
            CHECK(run_sequence_test(alg, s) == run_sequence_test(alg, s));
        }
    }
}

TEST_CASE("counters only increase and total is their sum") {
    CostCounters c;
    c.assign(3);
    c.compare();
    CHECK(c.total() == 4);
    CostCounters d;
    d.compare();
    c += d;
    CHECK(c.comparisons() == 2);
    CHECK(c.assignments() == 3);
}
