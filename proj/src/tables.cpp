#include "distinctseq/tables.hpp"

#include "distinctseq/analytics.hpp"
#include "distinctseq/numeric.hpp"

#include "json.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace distinctseq::tables {

namespace an = analytics;

Format parse_format(const std::string& name) {
    if (name == "markdown" || name == "md") return Format::Markdown;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string Cell::text() const {
    std::string out = flagged() ? "published=" + *published + " computed=" + computed : computed;
    if (footnote) out += " [" + std::to_string(*footnote) + "]";
    return out;
}

namespace {

constexpr int kDigits = 6;

// Published values, rows n = 1..10.
using Row6 = std::array<const char*, 6>;
using Row5 = std::array<const char*, 5>;

constexpr std::array<Row6, 10> kTable1 = {{
    {"1.000000", "1.919981", "1.000000", "0.080019", "-0.919981", "0.025808"},
    {"2.000000", "2.439121", "0.500000", "0.060879", "-0.439121", "0.013931"},
    {"2.666667", "2.837470", "0.222222", "0.051418", "-0.170804", "0.009504"},
    {"3.125000", "3.173295", "0.093750", "0.045455", "-0.048295", "0.007205"},
    {"3.472000", "3.469162", "0.038400", "0.041238", "+0.002838", "0.005799"},
    {"3.759259", "3.736647", "0.015432", "0.038045", "+0.022612", "0.004852"},
    {"4.012019", "3.982624", "0.006120", "0.035515", "+0.029395", "0.004170"},
    {"4.242615", "4.211574", "0.002403", "0.033444", "+0.031040", "0.003656"},
    {"4.457379", "4.426609", "0.000937", "0.031707", "+0.030770", "0.003255"},
    {"4.659853", "4.629994", "0.000363", "0.030222", "+0.029859", "0.002933"},
}};

constexpr std::array<Row5, 10> kTable2 = {{
    {"0.000000", "1.040010", "1.000000", "0.080019", "1.040010"},
    {"1.000000", "1.780440", "0.750000", "0.060879", "0.780440"},
    {"2.111111", "2.581265", "0.444444", "0.051418", "0.470154"},
    {"3.156250", "3.413353", "0.234375", "0.045455", "0.257103"},
    {"4.129600", "4.265419", "0.115200", "0.041238", "0.135819"},
    {"5.058642", "5.131677", "0.054012", "0.038045", "0.073035"},
    {"5.966451", "6.008688", "0.024480", "0.035515", "0.042237"},
    {"6.866676", "6.894213", "0.010815", "0.033444", "0.027536"},
    {"7.766159", "7.786695", "0.004683", "0.031707", "0.020537"},
    {"8.667896", "8.685003", "0.001996", "0.030222", "0.017107"},
}};

constexpr std::array<Row5, 10> kTable3 = {{
    {"1.000000", "1.253314", "0.333333", "0.080019", "0.253314"},
    {"1.060660", "1.253314", "0.235702", "0.043048", "0.192654"},
    {"1.090055", "1.253314", "0.192450", "0.029686", "0.162764"},
    {"1.109375", "1.253314", "0.166667", "0.022727", "0.143940"},
    {"1.122685", "1.253314", "0.149071", "0.018442", "0.130629"},
    {"1.132763", "1.253314", "0.136083", "0.015532", "0.120551"},
    {"1.140740", "1.253314", "0.125988", "0.013423", "0.112565"},
    {"1.147287", "1.253314", "0.117851", "0.011824", "0.106027"},
    {"1.152772", "1.253314", "0.111111", "0.010569", "0.100542"},
    {"1.157462", "1.253314", "0.105409", "0.009557", "0.095852"},
}};

const std::vector<std::string> kColumns1 = {"n", "C_L", "u", "n!/n^n", "kappa", "delta", "sigma"};
const std::vector<std::string> kColumns2 = {"n", "C_W", "n-sqrt(pi n/8)+2/3", "t", "kappa",
                                            "alpha"};
const std::vector<std::string> kColumns3 = {"n", "E{b_1}", "sqrt(pi/2)", "1/(3 sqrt n)",
                                            "kappa/sqrt n", "mu"};
const std::vector<std::string> kGrowthColumns = {"algorithm", "best",  "best exponent",
                                                 "worst",     "worst exponent", "expected",
                                                 "expected exponent"};

Decimal dec(std::int64_t v) { return Decimal(v); }

std::string fixed(const Decimal& v) { return render_fixed(v, kDigits); }
std::string fixed(const Rational& v) { return render_fixed(v, kDigits); }

std::string signed_fixed(const Decimal& v) {
    std::string s = fixed(v);
    return s.front() == '-' ? s : "+" + s;
}

std::vector<std::string> computed_row(int id, std::int64_t n) {
    const Decimal pi = decimal_pi();
    const Decimal nd = dec(n);
    const auto terms = an::error_terms(n);
    switch (id) {
        case 1:
            return {fixed(an::expected_comparisons_linear(n)),
                    fixed(decimal_sqrt(pi * nd / Decimal(2)) + Decimal(2) / Decimal(3)),
                    fixed(an::factorial_ratio(n)),
                    fixed(terms.kappa),
                    signed_fixed(terms.delta),
                    fixed(terms.sigma)};
        case 2:
            return {fixed(an::expected_comparisons_backward(n)),
                    fixed(nd - decimal_sqrt(pi * nd / Decimal(8)) + Decimal(2) / Decimal(3)),
                    fixed(an::factorial_ratio(n) * Rational(n + 1) / Rational(2)),
                    fixed(terms.kappa),
                    fixed(terms.alpha)};
        case 3: {
            const Decimal root = decimal_sqrt(nd);
            return {fixed(an::bucket_occupancy_literal(n)),
                    fixed(decimal_sqrt(pi / Decimal(2))),
                    fixed(Decimal(1) / (Decimal(3) * root)),
                    fixed(terms.kappa / root),
                    fixed(terms.mu)};
        }
    }
    throw std::invalid_argument("no numeric table " + std::to_string(id));
}

// Exact enough for the footnote: ten decimals of the same quantity.
std::string precise(int id, std::int64_t n, std::size_t column) {
    const Decimal nd = dec(n);
    const auto terms = an::error_terms(n);
    const int d = 10;
    switch (id) {
        case 1:
            switch (column) {
                case 0: return render_fixed(an::expected_comparisons_linear(n), d);
                case 3: return render_fixed(terms.kappa, d);
                case 4: return render_fixed(terms.delta, d);
                case 5: return render_fixed(terms.sigma, d);
            }
            break;
        case 2:
            switch (column) {
                case 0: return render_fixed(an::expected_comparisons_backward(n), d);
                case 3: return render_fixed(terms.kappa, d);
                case 4: return render_fixed(terms.alpha, d);
            }
            break;
        case 3:
            switch (column) {
                case 0: return render_fixed(an::bucket_occupancy_literal(n), d);
                case 3: return render_fixed(terms.kappa / decimal_sqrt(nd), d);
                case 4: return render_fixed(terms.mu, d);
            }
            break;
    }
    return {};
}

const std::vector<std::string>& numeric_columns(int id) {
    switch (id) {
        case 1: return kColumns1;
        case 2: return kColumns2;
        default: return kColumns3;
    }
}

std::string numeric_title(int id) {
    switch (id) {
        case 1: return "Linear: C_L, u = sqrt(pi n/2) + 2/3, n!/n^n, kappa, delta = kappa - n!/n^n, sigma";
        case 2: return "Backward: C_W, n - sqrt(pi n/8) + 2/3, t = (n!/n^n)(n+1)/2, kappa, alpha = kappa/2 + t";
        default: return "Bucket: E{b_1} = R_1/sqrt(n), sqrt(pi/2), 1/(3 sqrt n), kappa/sqrt n, mu = 1/(3 sqrt n) - kappa/sqrt n";
    }
}

Table numeric_table(int id, std::int64_t n_min, std::int64_t n_max) {
    Table t;
    t.id = id;
    t.title = numeric_title(id);
    t.columns = numeric_columns(id);
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        std::vector<Cell> row;
        row.push_back({std::to_string(n), std::nullopt, std::nullopt});
        const auto values = computed_row(id, n);
        for (std::size_t c = 0; c < values.size(); ++c) {
            Cell cell{values[c], std::nullopt, std::nullopt};
            const auto pub = published_value(id, n, c);
            if (pub && *pub != values[c]) {
                cell.published = *pub;
                t.footnotes.push_back("n=" + std::to_string(n) + ", " + t.columns[c + 1] +
                                      ": published " + *pub + "; computed value " +
                                      precise(id, n, c) + " rounds to " + values[c]);
                cell.footnote = static_cast<int>(t.footnotes.size());
            }
            row.push_back(std::move(cell));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- growth tables -------------------------------------------------------

struct PublishedClass {
    const char* label;
    double exponent;
};

constexpr Algorithm kAlgorithms[] = {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket,
                                     Algorithm::Matrix};

// [algorithm][best, worst, expected]
constexpr PublishedClass kComparisonClasses[4][3] = {
    {{"Θ(1)", 0}, {"Θ(n)", 1}, {"Θ(√n)", 0.5}},
    {{"Θ(1)", 0}, {"Θ(n²)", 2}, {"Θ(n)", 1}},
    {{"Θ(1)", 0}, {"Θ(n√n)", 1.5}, {"Θ(√n)", 0.5}},
    {{"Θ(1)", 0}, {"Θ(n√n)", 1.5}, {"Θ(√n)", 0.5}},
};
constexpr PublishedClass kTimeClasses[4][3] = {
    {{"Θ(n)", 1}, {"Θ(n)", 1}, {"n + Θ(√n)", 0.5}},
    {{"Θ(1)", 0}, {"Θ(n²)", 2}, {"Θ(n)", 1}},
    {{"Θ(√n)", 0.5}, {"Θ(n√n)", 1.5}, {"Θ(√n)", 0.5}},
    {{"Θ(√n)", 0.5}, {"Θ(n√n)", 1.5}, {"Θ(√n)", 0.5}},
};

constexpr double kExponentTolerance = 0.25;

std::string exponent_text(double e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", e + 0.0);
    std::string s = buf;
    return s == "-0.000000" ? "0.000000" : s;
}

std::string capitalized(Algorithm alg) {
    std::string s(algorithm_name(alg));
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

Table growth_table(int id) {
    const Measure measure = id == 4 ? Measure::Comparisons : Measure::Time;
    const auto& classes = id == 4 ? kComparisonClasses : kTimeClasses;
    Table t;
    t.id = id;
    t.title = id == 4 ? "Growth exponents of comparisons"
                      : "Growth exponents of running time (Linear expected: T_L - n)";
    t.columns = kGrowthColumns;
    const Case cases[] = {Case::Best, Case::Worst, Case::Expected};
    for (std::size_t a = 0; a < 4; ++a) {
        const Algorithm alg = kAlgorithms[a];
        std::vector<Cell> row;
        row.push_back({capitalized(alg), std::nullopt, std::nullopt});
        for (std::size_t c = 0; c < 3; ++c) {
            const double e = growth_exponent(alg, cases[c], measure);
            row.push_back({classes[a][c].label, std::nullopt, std::nullopt});
            Cell cell{exponent_text(e), std::nullopt, std::nullopt};
            if (std::abs(e - classes[a][c].exponent) > kExponentTolerance) {
                t.footnotes.push_back(
                    capitalized(alg) + ", " + kGrowthColumns[2 * c + 1] + ": measured exponent " +
                    exponent_text(e) + " does not match the stated class " + classes[a][c].label +
                    (alg == Algorithm::Matrix && cases[c] == Case::Worst
                         ? "; all 2n lines of a Latin square are good and each costs "
                           "Θ(n√n), so the worst case is Θ(n²√n)"
                         : ""));
                cell.footnote = static_cast<int>(t.footnotes.size());
            }
            row.push_back(std::move(cell));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- extremal inputs -----------------------------------------------------

std::vector<Value> identity(std::size_t n) {
    std::vector<Value> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Value>(i + 1);
    return s;
}

// All buckets but the last full, then a repeat of the last value placed in
// bucket 1, which sits at the far end of a full bucket.
std::vector<Value> bucket_late_repeat(std::size_t n) {
    const std::size_t m = bucket_count(n);
    std::vector<Value> s = identity(n);
    s[n - 1] = static_cast<Value>(std::min(m, n - 1));
    return s;
}

std::vector<std::vector<Value>> sequence_candidates(Algorithm alg, Case which, std::size_t n) {
    if (which == Case::Best) return {std::vector<Value>(n, 1)};
    std::vector<std::vector<Value>> out = {identity(n)};
    if (n >= 2) {
        std::vector<Value> last = identity(n);
        last[n - 1] = 1;
        out.push_back(std::move(last));
        if (alg == Algorithm::Bucket) out.push_back(bucket_late_repeat(n));
    }
    return out;
}

std::vector<SquareMatrix> matrix_candidates(Case which, std::size_t n) {
    std::vector<Value> latin(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) latin[i * n + j] = static_cast<Value>((i + j) % n + 1);
    }
    if (which == Case::Best) {
        std::vector<Value> cells = latin;
        std::fill(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(n), 1);
        return {SquareMatrix(n, std::move(cells))};
    }
    std::vector<SquareMatrix> out;
    out.emplace_back(n, latin);
    if (n >= 2) {
        std::swap(latin[n * n - 1], latin[n * n - 2]);
        out.emplace_back(n, std::move(latin));
    }
    return out;
}

std::uint64_t measured(const CostCounters& c, Measure m) {
    return m == Measure::Comparisons ? c.comparisons() : c.total();
}

CostCounters extremal_for(Algorithm alg, Case which, std::int64_t n, Measure m) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<CostCounters> costs;
    if (alg == Algorithm::Matrix) {
        for (const auto& mat : matrix_candidates(which, un)) costs.push_back(matrix_test(mat).counters);
    } else {
        for (const auto& s : sequence_candidates(alg, which, un)) {
            costs.push_back(run_sequence_test(alg, s).counters);
        }
    }
    CostCounters pick = costs.front();
    for (const auto& c : costs) {
        const bool better = which == Case::Best ? measured(c, m) < measured(pick, m)
                                                : measured(c, m) > measured(pick, m);
        if (better) pick = c;
    }
    return pick;
}

}  // namespace

std::optional<std::string> published_value(int table_id, std::int64_t n, std::size_t column) {
    if (n < 1 || n > 10) return std::nullopt;
    const auto r = static_cast<std::size_t>(n - 1);
    switch (table_id) {
        case 1:
            if (column < 6) return kTable1[r][column];
            break;
        case 2:
            if (column < 5) return kTable2[r][column];
            break;
        case 3:
            if (column < 5) return kTable3[r][column];
            break;
    }
    return std::nullopt;
}

Table build_table(int id, std::int64_t n_min, std::int64_t n_max) {
    if (id == 4 || id == 5) return growth_table(id);
    if (id < 1 || id > 5) throw std::invalid_argument("table id must be 1..5");
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("invalid n range " + std::to_string(n_min) + ".." +
                                    std::to_string(n_max));
    }
    return numeric_table(id, n_min, n_max);
}

std::string render(const Table& table, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Markdown: {
            out << "Table " << table.id << ". " << table.title << "\n\n|";
            for (const auto& c : table.columns) out << ' ' << c << " |";
            out << "\n|";
            for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i == 0 ? ":--|" : "--:|");
            out << '\n';
            for (const auto& row : table.rows) {
                out << '|';
                for (const auto& cell : row) out << ' ' << cell.text() << " |";
                out << '\n';
            }
            if (!table.footnotes.empty()) out << '\n';
            for (std::size_t k = 0; k < table.footnotes.size(); ++k) {
                out << '[' << k + 1 << "] " << table.footnotes[k] << '\n';
            }
            break;
        }
        case Format::Csv: {
            for (std::size_t i = 0; i < table.columns.size(); ++i) {
                out << (i ? "," : "") << table.columns[i];
            }
            out << '\n';
            for (const auto& row : table.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text();
                out << '\n';
            }
            for (std::size_t k = 0; k < table.footnotes.size(); ++k) {
                out << "# [" << k + 1 << "] " << table.footnotes[k] << '\n';
            }
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json doc;
            doc["table"] = table.id;
            doc["title"] = table.title;
            doc["columns"] = table.columns;
            auto rows = nlohmann::ordered_json::array();
            for (const auto& row : table.rows) {
                nlohmann::ordered_json r;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    const Cell& cell = row[i];
                    if (!cell.published && !cell.footnote) {
                        r[table.columns[i]] = cell.computed;
                        continue;
                    }
                    nlohmann::ordered_json v;
                    v["computed"] = cell.computed;
                    if (cell.published) v["published"] = *cell.published;
                    if (cell.footnote) v["footnote"] = *cell.footnote;
                    r[table.columns[i]] = v;
                }
                rows.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows);
            doc["footnotes"] = table.footnotes;
            out << doc.dump(2) << '\n';
            break;
        }
    }
    return out.str();
}

// ---- growth exponents ----------------------------------------------------

std::vector<std::int64_t> expected_grid() { return {4, 16, 64, 256, 1024, 4096}; }
std::vector<std::int64_t> extremal_grid() { return {64, 256, 1024}; }

double loglog_slope(const std::vector<std::int64_t>& ns, const std::vector<double>& values) {
    if (ns.size() != values.size() || ns.size() < 2) {
        throw std::invalid_argument("loglog_slope needs at least two matching points");
    }
    const double k = static_cast<double>(ns.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

CostCounters extremal_cost(Algorithm alg, Case which, std::int64_t n) {
    if (which == Case::Expected) throw std::invalid_argument("extremal_cost: Best or Worst only");
    return extremal_for(alg, which, n, Measure::Comparisons);
}

double expected_value(Algorithm alg, Measure measure, std::int64_t n) {
    if (alg == Algorithm::Matrix) {
        const auto bracket = measure == Measure::Comparisons ? an::expected_comparisons_matrix(n)
                                                             : an::expected_time_matrix(n);
        return ((bracket.lower + bracket.upper) / Decimal(2)).convert_to<double>();
    }
    const auto report = an::expected_cost(n, alg);
    if (measure == Measure::Comparisons) {
        return report.expected_comparisons.rational().convert_to<double>();
    }
    Rational t = report.expected_time.rational();
    if (alg == Algorithm::Linear) t -= Rational(n);
    return t.convert_to<double>();
}

double growth_exponent(Algorithm alg, Case which, Measure measure) {
    std::vector<std::int64_t> ns;
    std::vector<double> values;
    if (which == Case::Expected) {
        ns = expected_grid();
        for (auto n : ns) values.push_back(expected_value(alg, measure, n));
    } else {
        ns = extremal_grid();
        for (auto n : ns) {
            values.push_back(static_cast<double>(measured(extremal_for(alg, which, n, measure), measure)));
        }
    }
    return loglog_slope(ns, values);
}

}  // namespace distinctseq::tables
