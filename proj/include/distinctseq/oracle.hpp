#pragma once

// Exhaustive ground truth: run a tester on every one of the n^n sequences
// (or n^(n*n) matrices), each with weight n^-n, and report exact means.
//
// Enumeration is lexicographic. Work can be split over threads by disjoint
// rank ranges; partial sums are integers, so the merged result does not
// depend on the thread count.

#include "distinctseq/algorithms.hpp"
#include "distinctseq/numeric.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace distinctseq::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    std::uint64_t budget = kDefaultBudget;  ///< maximum number of inputs enumerated
    unsigned threads = 1;
};

struct ExhaustiveReport {
    std::int64_t n = 0;
    Algorithm algorithm = Algorithm::Linear;
    std::uint64_t runs = 0;
    Rational mean_comparisons;
    Rational mean_assignments;
    Rational mean_total;
    /// Sequences: Pr{y = k} for the distinct-prefix length y.
    /// Matrix: Pr{lines tested = k}.
    std::map<std::int64_t, Rational> stop_distribution;
    Rational good_probability;
    std::uint64_t max_comparisons = 0;
};

/// Number of inputs the enumeration visits, or nullopt-like UINT64_MAX on overflow.
std::uint64_t input_space_size(std::int64_t n, Algorithm alg);

/// Throws BudgetExceeded when the input space exceeds options.budget.
ExhaustiveReport exhaustive_expectation(std::int64_t n, Algorithm alg,
                                        const OracleOptions& options = {});

struct StopDistributionCheck {
    bool matches = false;
    std::map<std::int64_t, Rational> enumerated;
};

/// Compares the enumerated law of y with p_k(n, .) exactly.
StopDistributionCheck stop_distribution_check(std::int64_t n, const OracleOptions& options = {});

struct UniformityCheck {
    bool uniform = false;
    /// counts[k][q-1]: sequences with y = k < n whose s_{k+1} equals s_q.
    std::map<std::int64_t, std::vector<std::uint64_t>> counts;
};

/// Given y = k < n, is the earlier index matched by s_{k+1} uniform on 1..k?
UniformityCheck first_repeat_position_uniformity(std::int64_t n,
                                                 const OracleOptions& options = {});

}  // namespace distinctseq::oracle
