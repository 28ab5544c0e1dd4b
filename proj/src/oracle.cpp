#include "distinctseq/oracle.hpp"

#include "distinctseq/analytics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <thread>

namespace distinctseq::oracle {

namespace {

constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (out > kOverflow / base) return kOverflow;
        out *= base;
    }
    return out;
}

// Visits the inputs with ranks [first, last) in lexicographic order. Each
// input is `cells` digits over 1..base.
template <class Visit>
void enumerate_range(std::size_t cells, Value base, std::uint64_t first, std::uint64_t last,
                     Visit&& visit) {
    if (first >= last) return;
    std::vector<Value> digits(cells);
    std::uint64_t rank = first;
    for (std::size_t i = cells; i-- > 0;) {
        digits[i] = static_cast<Value>(rank % base) + 1;
        rank /= base;
    }
    for (std::uint64_t r = first; r < last; ++r) {
        visit(std::span<const Value>(digits));
        for (std::size_t i = cells; i-- > 0;) {
            if (digits[i] < base) {
                ++digits[i];
                break;
            }
            digits[i] = 1;
        }
    }
}

// Splits [0, total) into `parts` contiguous ranges and runs one worker per range.
template <class Acc, class MakeVisit>
std::vector<Acc> run_partitioned(std::size_t cells, Value base, std::uint64_t total,
                                 unsigned parts, MakeVisit make_visit) {
    parts = std::max(1u, std::min<unsigned>(parts, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));
    std::vector<Acc> partial(parts);
    auto work = [&](unsigned p) {
        const std::uint64_t first = total / parts * p + std::min<std::uint64_t>(p, total % parts);
        const std::uint64_t size = total / parts + (p < total % parts ? 1 : 0);
        enumerate_range(cells, base, first, first + size, make_visit(partial[p]));
    };
    if (parts == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parts);
        for (unsigned p = 0; p < parts; ++p) pool.emplace_back(work, p);
        for (auto& t : pool) t.join();
    }
    return partial;
}

struct Tally {
    std::uint64_t runs = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t assignments = 0;
    std::uint64_t good = 0;
    std::uint64_t max_comparisons = 0;
    std::map<std::int64_t, std::uint64_t> stops;

    void add(const CostCounters& c, bool is_good, std::int64_t stop) {
        ++runs;
        comparisons += c.comparisons();
        assignments += c.assignments();
        max_comparisons = std::max(max_comparisons, c.comparisons());
        if (is_good) ++good;
        ++stops[stop];
    }

    void merge(const Tally& o) {
        runs += o.runs;
        comparisons += o.comparisons;
        assignments += o.assignments;
        good += o.good;
        max_comparisons = std::max(max_comparisons, o.max_comparisons);
        for (const auto& [k, v] : o.stops) stops[k] += v;
    }
};

void check_budget(std::int64_t n, Algorithm alg, std::uint64_t space, std::uint64_t budget) {
    if (space > budget) {
        throw BudgetExceeded("exhaustive enumeration for " + std::string(algorithm_name(alg)) +
                             " at n = " + std::to_string(n) + " needs " +
                             (space == kOverflow ? std::string("more than 2^64")
                                                 : std::to_string(space)) +
                             " runs; budget is " + std::to_string(budget));
    }
}

// Length of the longest distinct prefix, by direct pairwise scan.
std::size_t distinct_prefix(std::span<const Value> s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (s[i] == s[j]) return i;
        }
    }
    return s.size();
}

void require_positive(std::int64_t n) {
    if (n < 1) throw std::domain_error("oracle: n must be positive");
}

}  // namespace

std::uint64_t input_space_size(std::int64_t n, Algorithm alg) {
    require_positive(n);
    const auto un = static_cast<std::uint64_t>(n);
    if (alg == Algorithm::Matrix) {
        if (un > 0 && un > kOverflow / un) return kOverflow;
        return checked_power(un, un * un);
    }
    return checked_power(un, un);
}

ExhaustiveReport exhaustive_expectation(std::int64_t n, Algorithm alg,
                                        const OracleOptions& options) {
    const std::uint64_t space = input_space_size(n, alg);
    check_budget(n, alg, space, options.budget);
    const auto un = static_cast<std::size_t>(n);
    const auto base = static_cast<Value>(n);

    std::vector<Tally> partial;
    if (alg == Algorithm::Matrix) {
        partial = run_partitioned<Tally>(un * un, base, space, options.threads, [un](Tally& t) {
            return [&t, un](std::span<const Value> cells) {
                SquareMatrix m(un, std::vector<Value>(cells.begin(), cells.end()));
                const MatrixOutcome r = matrix_test(m);
                t.add(r.counters, r.good, static_cast<std::int64_t>(r.lines_tested));
            };
        });
    } else {
        partial = run_partitioned<Tally>(un, base, space, options.threads, [alg](Tally& t) {
            return [&t, alg](std::span<const Value> s) {
                const TestOutcome r = run_sequence_test(alg, s);
                const auto y = r.good ? s.size() : r.stop_index - 1;
                t.add(r.counters, r.good, static_cast<std::int64_t>(y));
            };
        });
    }
    Tally total;
    for (const auto& t : partial) total.merge(t);

    const Rational runs{Integer(total.runs)};
    ExhaustiveReport out;
    out.n = n;
    out.algorithm = alg;
    out.runs = total.runs;
    out.mean_comparisons = Rational(Integer(total.comparisons)) / runs;
    out.mean_assignments = Rational(Integer(total.assignments)) / runs;
    out.mean_total = out.mean_comparisons + out.mean_assignments;
    out.good_probability = Rational(Integer(total.good)) / runs;
    out.max_comparisons = total.max_comparisons;
    for (const auto& [k, v] : total.stops) out.stop_distribution[k] = Rational(Integer(v)) / runs;
    return out;
}

StopDistributionCheck stop_distribution_check(std::int64_t n, const OracleOptions& options) {
    const std::uint64_t space = input_space_size(n, Algorithm::Linear);
    check_budget(n, Algorithm::Linear, space, options.budget);
    using Counts = std::map<std::int64_t, std::uint64_t>;
    auto partial = run_partitioned<Counts>(static_cast<std::size_t>(n), static_cast<Value>(n),
                                           space, options.threads, [](Counts& c) {
                                               return [&c](std::span<const Value> s) {
                                                   ++c[static_cast<std::int64_t>(distinct_prefix(s))];
                                               };
                                           });
    Counts merged;
    for (const auto& c : partial) {
        for (const auto& [k, v] : c) merged[k] += v;
    }
    StopDistributionCheck out;
    out.matches = true;
    const Rational runs{Integer(space)};
    for (std::int64_t k = 1; k <= n; ++k) {
        const Rational freq = Rational(Integer(merged[k])) / runs;
        out.enumerated[k] = freq;
        if (freq != analytics::p_k(n, k)) out.matches = false;
    }
    return out;
}

UniformityCheck first_repeat_position_uniformity(std::int64_t n, const OracleOptions& options) {
    const std::uint64_t space = input_space_size(n, Algorithm::Linear);
    check_budget(n, Algorithm::Linear, space, options.budget);
    using Counts = std::map<std::int64_t, std::vector<std::uint64_t>>;
    auto partial = run_partitioned<Counts>(
        static_cast<std::size_t>(n), static_cast<Value>(n), space, options.threads,
        [](Counts& c) {
            return [&c](std::span<const Value> s) {
                const std::size_t y = distinct_prefix(s);
                if (y == s.size()) return;
                auto& row = c[static_cast<std::int64_t>(y)];
                row.resize(y);
                for (std::size_t q = 0; q < y; ++q) {
                    if (s[q] == s[y]) {
                        ++row[q];
                        break;
                    }
                }
            };
        });
    UniformityCheck out;
    for (const auto& c : partial) {
        for (const auto& [k, row] : c) {
            auto& dst = out.counts[k];
            dst.resize(row.size());
            for (std::size_t q = 0; q < row.size(); ++q) dst[q] += row[q];
        }
    }
    out.uniform = true;
    for (const auto& [k, row] : out.counts) {
        if (std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) != row.end()) {
            out.uniform = false;
        }
    }
    return out;
}

}  // namespace distinctseq::oracle
