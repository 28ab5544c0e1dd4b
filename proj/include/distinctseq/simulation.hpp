#pragma once

// Monte Carlo estimates of the testers' costs under i.i.d. uniform input.
//
// Generator: xoshiro256** (256-bit state) seeded by expanding the 64-bit seed
// with SplitMix64. Values in [1,n] are drawn with
// boost::random::uniform_int_distribution, which rejects instead of reducing
// modulo n. Trials are cut into fixed chunks of kChunkTrials; chunk c draws
// from the base stream advanced by c jumps of 2^128 steps. The chunking never
// depends on the thread count, and per-chunk sums are integers, so results are
// bit-identical for any number of threads.

#include "distinctseq/algorithms.hpp"

#include <array>
#include <cstdint>
#include <limits>

namespace distinctseq::simulation {

inline constexpr std::uint64_t kChunkTrials = 1u << 16;

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed);
    /// Raw state; must not be all zero.
    explicit Xoshiro256StarStar(const std::array<std::uint64_t, 4>& state) : s_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();
    /// Advances the state by 2^128 draws.
    void jump();

    const std::array<std::uint64_t, 4>& state() const { return s_; }
    bool operator==(const Xoshiro256StarStar&) const = default;

private:
    std::array<std::uint64_t, 4> s_;
};

struct SimulationConfig {
    std::int64_t n = 1;
    Algorithm algorithm = Algorithm::Linear;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// Throws std::invalid_argument for n < 1 or trials < 1.
void validate(const SimulationConfig& config);

struct ExpectationEstimate {
    double mean = 0;
    double sample_variance = 0;
    double standard_error = 0;  ///< sqrt(sample_variance / trials)
    std::uint64_t trials = 0;
    double good_fraction = 0;
    bool operator==(const ExpectationEstimate&) const = default;
};

struct SimulationResult {
    ExpectationEstimate comparisons;
    ExpectationEstimate assignments;
    ExpectationEstimate total;
    bool operator==(const SimulationResult&) const = default;
};

/// Linear, Backward or Bucket on `trials` uniform sequences of length n.
SimulationResult simulate_sequence(const SimulationConfig& config);
/// Matrix on `trials` uniform n x n matrices, cells drawn row by row as
/// Matrix reaches them.
SimulationResult simulate_matrix(const SimulationConfig& config);
/// Dispatches on config.algorithm.
SimulationResult simulate(const SimulationConfig& config);

}  // namespace distinctseq::simulation
