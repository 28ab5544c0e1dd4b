#pragma once

// Reference tables rendered from the analytics and the instrumented testers.
//
//   1  C_L, u = sqrt(pi n/2) + 2/3, n!/n^n, kappa, delta, sigma
//   2  C_W, n - sqrt(pi n/8) + 2/3, t = (n!/n^n)(n+1)/2, kappa, alpha
//   3  E{b_1}, sqrt(pi/2), 1/(3 sqrt n), kappa/sqrt n, mu
//   4  growth exponents of best, worst and expected comparisons
//   5  growth exponents of best, worst and expected running time
//
// Tables 1-3 carry the published 6-decimal values for n = 1..10. A cell whose
// published value differs from the computed rounding is rendered as
// "published=X computed=Y [k]" with footnote k.

#include "distinctseq/algorithms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace distinctseq::tables {

enum class Format { Markdown, Csv, Json };

/// Accepts "markdown", "csv", "json". Throws std::invalid_argument.
Format parse_format(const std::string& name);

struct Cell {
    std::string computed;
    std::optional<std::string> published;  ///< set only when it disagrees with `computed`
    std::optional<int> footnote;

    bool flagged() const { return published.has_value(); }
    /// The text written into csv and markdown output.
    std::string text() const;
};

struct Table {
    int id = 0;
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> footnotes;  ///< footnotes[k-1] belongs to marker [k]
};

/// Tables 1-3 over n_min..n_max. Tables 4 and 5 ignore the range and use the
/// fixed grids below. Throws std::invalid_argument for a bad id or range.
Table build_table(int id, std::int64_t n_min = 1, std::int64_t n_max = 10);

std::string render(const Table& table, Format format);

/// Published 6-decimal value of a table 1-3 cell, if the n is within 1..10.
/// `column` counts value columns from 0, so it excludes the leading n.
std::optional<std::string> published_value(int table_id, std::int64_t n, std::size_t column);

// ---- growth exponents ----------------------------------------------------

/// n in {4, 16, ..., 4096}: grid for expected-cost exponents.
std::vector<std::int64_t> expected_grid();
/// n in {64, 256, 1024}: grid for best and worst cases, measured by running
/// the testers on constructed extremal inputs.
std::vector<std::int64_t> extremal_grid();

/// Least-squares slope of ln(value) against ln(n).
double loglog_slope(const std::vector<std::int64_t>& ns, const std::vector<double>& values);

enum class Case { Best, Worst, Expected };
enum class Measure { Comparisons, Time };

/// The cost of the input constructed for `which` (Best or Worst).
CostCounters extremal_cost(Algorithm alg, Case which, std::int64_t n);
/// Expected comparisons or time as a double; for Matrix the midpoint of the
/// bracket. Time for Linear is reported as T_L - n.
double expected_value(Algorithm alg, Measure measure, std::int64_t n);
/// Exponent estimate for one cell of table 4 (Comparisons) or 5 (Time).
double growth_exponent(Algorithm alg, Case which, Measure measure);

}  // namespace distinctseq::tables
