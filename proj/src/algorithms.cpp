#include "distinctseq/algorithms.hpp"

#include <string>

namespace distinctseq {

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::Linear: return "linear";
        case Algorithm::Backward: return "backward";
        case Algorithm::Bucket: return "bucket";
        case Algorithm::Matrix: return "matrix";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "linear") return Algorithm::Linear;
    if (name == "backward") return Algorithm::Backward;
    if (name == "bucket") return Algorithm::Bucket;
    if (name == "matrix") return Algorithm::Matrix;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

namespace {

void validate(std::size_t n, std::span<const Value> values) {
    if (n == 0) throw InvalidInput("n must be positive");
    if (values.size() != n) {
        throw InvalidInput("expected " + std::to_string(n) + " values, got " +
                           std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > n) {
            throw InvalidInput("value " + std::to_string(values[i]) + " at position " +
                               std::to_string(i + 1) + " is outside [1," +
                               std::to_string(n) + "]");
        }
    }
}

template <class Line>
TestOutcome linear_impl(const Line& s) {
    const std::size_t n = s.size();
    TestOutcome out;
    out.counters.assign();   // 1: g <- True
    std::vector<std::uint32_t> v(n + 1);
    out.counters.assign(n);  // 3: v_i <- 0
    for (std::size_t i = 0; i < n; ++i) {
        out.counters.compare();  // 5: v[s_i] > 0
        if (v[s[i]] > 0) {
            out.good = false;
            out.stop_index = i + 1;
            return out;
        }
        ++v[s[i]];
        out.counters.assign();  // 8
    }
    out.stop_index = n;
    return out;
}

template <class Line>
TestOutcome backward_impl(const Line& s) {
    const std::size_t n = s.size();
    TestOutcome out;
    out.counters.assign();  // 1: g <- True
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i; j-- > 0;) {
            out.counters.compare();  // 4: s_i = s_j
            if (s[i] == s[j]) {
                out.counters.assign();  // 5: g <- False
                out.good = false;
                out.stop_index = i + 1;
                return out;
            }
        }
    }
    out.stop_index = n;
    return out;
}

template <class Line>
TestOutcome bucket_impl(const Line& s) {
    const std::size_t n = s.size();
    const std::size_t m = bucket_count(n);
    TestOutcome out;
    out.counters.assign();   // 1: g <- True
    out.counters.assign();   // 2: m <- sqrt(n)
    // Q is m x m; c[r] - 1 is the occupancy of bucket r.
    std::vector<Value> q(m * m);
    std::vector<std::size_t> c(m, 1);
    out.counters.assign(m);  // 4: c_j <- 1
    for (std::size_t i = 0; i < n; ++i) {
        const Value x = s[i];
        const std::size_t r = (x + m - 1) / m - 1;
        out.counters.assign();  // 6: r <- ceil(s_i / m)
        Value* bucket = q.data() + r * m;
        for (std::size_t j = 0; j + 1 < c[r]; ++j) {
            out.counters.compare();  // 8: s_i = Q[r][j]
            if (x == bucket[j]) {
                out.counters.assign();  // 9: g <- False
                out.good = false;
                out.stop_index = i + 1;
                return out;
            }
        }
        bucket[c[r] - 1] = x;
        out.counters.assign();  // 11
        ++c[r];
        out.counters.assign();  // 12
    }
    out.stop_index = n;
    return out;
}

}  // namespace

std::size_t bucket_count(std::size_t n) {
    std::size_t m = 0;
    while (m * m < n) ++m;
    return m;
}

Sequence::Sequence(std::size_t n, std::vector<Value> values) : values_(std::move(values)) {
    validate(n, values_);
}

Sequence::Sequence(std::vector<Value> values) : values_(std::move(values)) {
    validate(values_.size(), values_);
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<Value> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n == 0) throw InvalidInput("n must be positive");
    if (cells_.size() != n * n) {
        throw InvalidInput("expected " + std::to_string(n * n) + " cells, got " +
                           std::to_string(cells_.size()));
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] < 1 || cells_[i] > n) {
            throw InvalidInput("cell (" + std::to_string(i / n + 1) + "," +
                               std::to_string(i % n + 1) + ") = " + std::to_string(cells_[i]) +
                               " is outside [1," + std::to_string(n) + "]");
        }
    }
}

TestOutcome linear_test(const Sequence& s) { return linear_impl(s.values()); }
TestOutcome backward_test(const Sequence& s) { return backward_impl(s.values()); }
TestOutcome bucket_test(const Sequence& s) { return bucket_impl(s.values()); }

TestOutcome linear_test(std::span<const Value> s) {
    validate(s.size(), s);
    return linear_impl(s);
}

TestOutcome backward_test(std::span<const Value> s) {
    validate(s.size(), s);
    return backward_impl(s);
}

TestOutcome bucket_test(std::span<const Value> s) {
    validate(s.size(), s);
    return bucket_impl(s);
}

TestOutcome run_sequence_test(Algorithm alg, std::span<const Value> s) {
    switch (alg) {
        case Algorithm::Linear: return linear_test(s);
        case Algorithm::Backward: return backward_test(s);
        case Algorithm::Bucket: return bucket_test(s);
        case Algorithm::Matrix: break;
    }
    throw std::invalid_argument("matrix is not a sequence algorithm");
}

namespace {

template <class LineAt>
MatrixOutcome matrix_scan(std::size_t n, LineAt&& line_at) {
    MatrixOutcome out;
    out.counters.assign();  // 1: g <- True
    auto run_line = [&](SquareMatrix::LineView line, MatrixPhase phase, std::size_t index) {
        TestOutcome r = bucket_impl(line);
        out.counters += r.counters;
        ++out.lines_tested;
        out.stop = {phase, index, r.stop_index};
        out.good = r.good;
        return r.good;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!run_line(line_at(MatrixPhase::Rows, i), MatrixPhase::Rows, i + 1)) return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!run_line(line_at(MatrixPhase::Columns, j), MatrixPhase::Columns, j + 1)) return out;
    }
    return out;
}

}  // namespace

MatrixOutcome matrix_test(const SquareMatrix& m) {
    return matrix_scan(m.size(), [&m](MatrixPhase phase, std::size_t i) {
        return phase == MatrixPhase::Rows ? m.row(i) : m.column(i);
    });
}

MatrixOutcome matrix_test_streamed(
    std::size_t n, const std::function<void(std::size_t, std::span<Value>)>& fill_row) {
    if (n == 0) throw InvalidInput("n must be positive");
    std::vector<Value> cells(n * n);
    return matrix_scan(n, [&](MatrixPhase phase, std::size_t i) {
        if (phase == MatrixPhase::Rows) {
            std::span<Value> row(cells.data() + i * n, n);
            fill_row(i, row);
            validate(n, row);
            return SquareMatrix::LineView(row.data(), 1, n);
        }
        return SquareMatrix::LineView(cells.data() + i, n, n);
    });
}

}  // namespace distinctseq
