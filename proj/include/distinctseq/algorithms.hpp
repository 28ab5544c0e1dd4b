#pragma once

// Instrumented permutation testers.
//
// Each tester decides whether its input holds pairwise distinct values (for
// a length-n input over [1,n] that is the permutation test) and tallies the
// operations executed, one counter tick per executed pseudocode line:
//
//   Linear    assignments: g <- True (1), v_i <- 0 (n), v[s_i] += 1 per
//             accepted element; comparisons: v[s_i] > 0 per element examined.
//   Backward  assignments: g <- True (1), g <- False on a collision;
//             comparisons: s_i = s_j per pair examined.
//   Bucket    assignments: g <- True, m <- sqrt(n), c_j <- 1 (m), r <- ...
//             per element examined, g <- False on a collision, Q[r][c_r] and
//             c_r per accepted element; comparisons: s_i = Q[r][j].
//   Matrix    g <- True (1) plus everything its Bucket calls count.
//
// Loop bookkeeping (i <- i+1, loop tests) is never counted.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distinctseq {

using Value = std::uint32_t;

/// Malformed input: wrong length or a value outside [1,n]. Never reported as
/// a False verdict.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { Linear, Backward, Bucket, Matrix };

std::string_view algorithm_name(Algorithm alg);
/// Accepts "linear", "backward", "bucket", "matrix". Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);

/// A realization s = (s_1..s_n) with every s_i in [1,n].
class Sequence {
public:
    /// Throws InvalidInput unless values.size() == n and all values lie in [1,n].
    Sequence(std::size_t n, std::vector<Value> values);
    explicit Sequence(std::vector<Value> values);

    std::size_t size() const { return values_.size(); }
    Value operator[](std::size_t i) const { return values_[i]; }
    std::span<const Value> values() const { return values_; }

private:
    std::vector<Value> values_;
};

/// Row-major n x n matrix with cells in [1,n].
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, std::vector<Value> cells);

    /// Strided, non-owning view of one row or column.
    class LineView {
    public:
        LineView(const Value* base, std::size_t stride, std::size_t size)
            : base_(base), stride_(stride), size_(size) {}
        std::size_t size() const { return size_; }
        Value operator[](std::size_t i) const { return base_[i * stride_]; }

    private:
        const Value* base_;
        std::size_t stride_;
        std::size_t size_;
    };

    std::size_t size() const { return n_; }
    Value at(std::size_t row, std::size_t col) const { return cells_[row * n_ + col]; }
    LineView row(std::size_t i) const { return {cells_.data() + i * n_, 1, n_}; }
    LineView column(std::size_t j) const { return {cells_.data() + j, n_, n_}; }
    std::span<const Value> cells() const { return cells_; }

private:
    std::size_t n_;
    std::vector<Value> cells_;
};

class CostCounters {
public:
    std::uint64_t comparisons() const { return comparisons_; }
    std::uint64_t assignments() const { return assignments_; }
    std::uint64_t total() const { return comparisons_ + assignments_; }

    void compare() { ++comparisons_; }
    void assign(std::uint64_t count = 1) { assignments_ += count; }
    CostCounters& operator+=(const CostCounters& other) {
        comparisons_ += other.comparisons_;
        assignments_ += other.assignments_;
        return *this;
    }
    bool operator==(const CostCounters&) const = default;

private:
    std::uint64_t comparisons_ = 0;
    std::uint64_t assignments_ = 0;
};

struct TestOutcome {
    bool good = true;
    CostCounters counters;
    /// Elements consumed before returning: n for a good input, otherwise the
    /// 1-based position of the element that closed the first repetition.
    std::size_t stop_index = 0;

    bool operator==(const TestOutcome&) const = default;
};

enum class MatrixPhase { Rows, Columns };

struct MatrixStop {
    MatrixPhase phase = MatrixPhase::Columns;
    std::size_t line = 0;     ///< 1-based row or column index
    std::size_t element = 0;  ///< stop_index of the Bucket run on that line
    bool operator==(const MatrixStop&) const = default;
};

struct MatrixOutcome {
    bool good = true;
    CostCounters counters;
    MatrixStop stop;
    /// Number of lines (rows then columns) handed to Bucket.
    std::size_t lines_tested = 0;
    bool operator==(const MatrixOutcome&) const = default;
};

TestOutcome linear_test(const Sequence& s);
TestOutcome backward_test(const Sequence& s);
TestOutcome bucket_test(const Sequence& s);
MatrixOutcome matrix_test(const SquareMatrix& m);

/// Matrix over rows produced on demand. fill_row(i, row) writes row i
/// (0-based) into `row`; rows are requested in order and only once Matrix
/// reaches them, so a run that stops in row 1 never materializes the rest.
/// Throws InvalidInput if a produced value lies outside [1,n].
MatrixOutcome matrix_test_streamed(
    std::size_t n, const std::function<void(std::size_t, std::span<Value>)>& fill_row);

/// Validating overloads over raw values; throw InvalidInput like the
/// Sequence constructor. Used by the enumeration and sampling hot loops.
TestOutcome linear_test(std::span<const Value> s);
TestOutcome backward_test(std::span<const Value> s);
TestOutcome bucket_test(std::span<const Value> s);
TestOutcome run_sequence_test(Algorithm alg, std::span<const Value> s);

/// Number of buckets Bucket uses: ceil(sqrt(n)).
std::size_t bucket_count(std::size_t n);

}  // namespace distinctseq
