#pragma once

// Self-check suite behind `distinctseq verify`.
//
// fast: exhaustive agreement for n <= 4, exact identities for n <= 50,
//       monotonicity and Stirling bracket to n = 100, table reproduction.
// full: adds exhaustive agreement to n = 6, ranges to n = 10^4, the Q-series
//       check and a Monte Carlo tier.

#include <cstdint>
#include <string>
#include <vector>

namespace distinctseq::verify {

enum class Level { Fast, Full };

/// Accepts "fast" and "full". Throws std::invalid_argument.
Level parse_level(const std::string& name);

struct Options {
    std::uint64_t budget = 100'000'000;
    unsigned threads = 1;
    std::uint64_t seed = 42;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  ///< why it failed; empty on success
};

struct Report {
    std::vector<Check> checks;
    bool passed() const;
    std::size_t failures() const;
};

Report run(Level level, const Options& options = {});

/// One "pass  name" or "FAIL  name: detail" line per check, then a summary.
std::string render(const Report& report);

}  // namespace distinctseq::verify
