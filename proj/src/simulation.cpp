#include "distinctseq/simulation.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace distinctseq::simulation {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
}

Xoshiro256StarStar::result_type Xoshiro256StarStar::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

void Xoshiro256StarStar::jump() {
    static constexpr std::uint64_t kJump[] = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                              0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (std::uint64_t word : kJump) {
        for (int b = 0; b < 64; ++b) {
            if (word & (std::uint64_t{1} << b)) {
                for (std::size_t i = 0; i < 4; ++i) acc[i] ^= s_[i];
            }
            (*this)();
        }
    }
    s_ = acc;
}

void validate(const SimulationConfig& config) {
    if (config.n < 1) throw std::invalid_argument("simulation: n must be positive");
    if (config.trials < 1) throw std::invalid_argument("simulation: trials must be positive");
}

namespace {

using u128 = unsigned __int128;

struct Moments {
    std::uint64_t sum = 0;
    u128 sum_sq = 0;
    void add(std::uint64_t x) {
        sum += x;
        sum_sq += static_cast<u128>(x) * x;
    }
    void merge(const Moments& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
};

struct ChunkTally {
    Moments comparisons, assignments, total;
    std::uint64_t good = 0;
    void add(const CostCounters& c, bool is_good) {
        comparisons.add(c.comparisons());
        assignments.add(c.assignments());
        total.add(c.total());
        if (is_good) ++good;
    }
};

ExpectationEstimate estimate(const Moments& m, std::uint64_t trials, std::uint64_t good) {
    ExpectationEstimate e;
    e.trials = trials;
    const long double n = static_cast<long double>(trials);
    e.mean = static_cast<double>(static_cast<long double>(m.sum) / n);
    if (trials > 1) {
        // (N sum x^2 - (sum x)^2) / (N (N-1)), numerator exact in 128 bits
        const u128 num = static_cast<u128>(trials) * m.sum_sq - static_cast<u128>(m.sum) * m.sum;
        e.sample_variance = static_cast<double>(static_cast<long double>(num) / (n * (n - 1)));
    }
    e.standard_error = std::sqrt(e.sample_variance / static_cast<double>(trials));
    e.good_fraction = static_cast<double>(static_cast<long double>(good) / n);
    return e;
}

template <class RunTrial>
SimulationResult run_chunks(const SimulationConfig& config, RunTrial run_trial) {
    validate(config);
    const std::uint64_t chunks = (config.trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Xoshiro256StarStar> streams;
    streams.reserve(chunks);
    Xoshiro256StarStar base(config.seed);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        streams.push_back(base);
        base.jump();
    }
    std::vector<ChunkTally> tallies(chunks);
    auto work = [&](std::uint64_t c) {
        const std::uint64_t first = c * kChunkTrials;
        const std::uint64_t count = std::min(kChunkTrials, config.trials - first);
        std::vector<Value> scratch;
        for (std::uint64_t t = 0; t < count; ++t) run_trial(streams[c], tallies[c], scratch);
    };
    const unsigned threads =
        static_cast<unsigned>(std::clamp<std::uint64_t>(config.threads, 1, chunks));
    if (threads == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) work(c);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += threads) work(c);
            });
        }
        for (auto& t : pool) t.join();
    }
    ChunkTally sum;
    for (const auto& t : tallies) {
        sum.comparisons.merge(t.comparisons);
        sum.assignments.merge(t.assignments);
        sum.total.merge(t.total);
        sum.good += t.good;
    }
    return {estimate(sum.comparisons, config.trials, sum.good),
            estimate(sum.assignments, config.trials, sum.good),
            estimate(sum.total, config.trials, sum.good)};
}

}  // namespace

SimulationResult simulate_sequence(const SimulationConfig& config) {
    if (config.algorithm == Algorithm::Matrix) {
        throw std::invalid_argument("simulate_sequence: use simulate_matrix for Matrix");
    }
    validate(config);
    const auto n = static_cast<std::size_t>(config.n);
    boost::random::uniform_int_distribution<Value> uniform(1, static_cast<Value>(n));
    return run_chunks(config, [&](Xoshiro256StarStar& rng, ChunkTally& tally,
                                  std::vector<Value>& scratch) {
        scratch.resize(n);
        for (auto& v : scratch) v = uniform(rng);
        const TestOutcome r = run_sequence_test(config.algorithm, scratch);
        tally.add(r.counters, r.good);
    });
}

SimulationResult simulate_matrix(const SimulationConfig& config) {
    validate(config);
    const auto n = static_cast<std::size_t>(config.n);
    boost::random::uniform_int_distribution<Value> uniform(1, static_cast<Value>(n));
    return run_chunks(config, [&](Xoshiro256StarStar& rng, ChunkTally& tally,
                                  std::vector<Value>&) {
        const MatrixOutcome r = matrix_test_streamed(n, [&](std::size_t, std::span<Value> row) {
            for (auto& v : row) v = uniform(rng);
        });
        tally.add(r.counters, r.good);
    });
}

SimulationResult simulate(const SimulationConfig& config) {
    return config.algorithm == Algorithm::Matrix ? simulate_matrix(config)
                                                 : simulate_sequence(config);
}

}  // namespace distinctseq::simulation
