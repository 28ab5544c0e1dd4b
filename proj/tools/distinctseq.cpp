// distinctseq: permutation testers, their expected costs and reference tables.
//
//   distinctseq table 1 --n-max 10 --format csv
//   distinctseq verify --level fast
//   distinctseq run --alg linear "3: 1 2 3"
//   distinctseq run --alg matrix --file grid.txt
//   distinctseq simulate --alg bucket --n 16 --trials 100000 --seed 7

#include "distinctseq/analytics.hpp"
#include "distinctseq/input.hpp"
#include "distinctseq/oracle.hpp"
#include "distinctseq/simulation.hpp"
#include "distinctseq/tables.hpp"
#include "distinctseq/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

namespace ds = distinctseq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitBad = 1;
constexpr int kExitMalformed = 2;

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

const CLI::Validator kAlgorithmNames =
    CLI::IsMember({"linear", "backward", "bucket", "matrix"});

// ---- table -----------------------------------------------------------------

struct TableArgs {
    int id = 1;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> n_max;
    std::string format = "markdown";
};

int cmd_table(const TableArgs& a) {
    std::int64_t lo = 1, hi = 10;
    if (a.n && a.n_max) {
        lo = *a.n;
        hi = *a.n_max;
    } else if (a.n) {
        lo = hi = *a.n;
    } else if (a.n_max) {
        hi = *a.n_max;
    }
    const auto table = ds::tables::build_table(a.id, lo, hi);
    std::cout << ds::tables::render(table, ds::tables::parse_format(a.format));
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string level = "fast";
    std::uint64_t budget = ds::oracle::kDefaultBudget;
    unsigned threads = 1;
    std::uint64_t seed = 42;
};

int cmd_verify(const VerifyArgs& a) {
    const auto report = ds::verify::run(ds::verify::parse_level(a.level), {a.budget, a.threads, a.seed});
    std::cout << ds::verify::render(report);
    return report.passed() ? 0 : 1;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
    std::string algorithm = "linear";
    std::string inline_input;
    std::string file;
};

json counters_json(const ds::CostCounters& c) {
    return {{"comparisons", c.comparisons()}, {"assignments", c.assignments()}, {"total", c.total()}};
}

int cmd_run(const RunArgs& a) {
    const ds::Algorithm alg = ds::parse_algorithm(a.algorithm);
    std::string text;
    try {
        if (!a.file.empty()) {
            text = ds::input::read_file(a.file);
        } else if (!a.inline_input.empty()) {
            text = a.inline_input;
        } else {
            text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        }
        json out;
        out["algorithm"] = std::string(ds::algorithm_name(alg));
        bool good = false;
        if (alg == ds::Algorithm::Matrix) {
            const auto m = ds::input::parse_matrix(text);
            const auto r = ds::matrix_test(m);
            good = r.good;
            out["n"] = m.size();
            out["good"] = r.good;
            out.update(counters_json(r.counters));
            out["lines_tested"] = r.lines_tested;
            out["stop"] = {{"phase", r.stop.phase == ds::MatrixPhase::Rows ? "row" : "column"},
                           {"line", r.stop.line},
                           {"element", r.stop.element}};
        } else {
            const auto s = ds::input::parse_sequence(text);
            const auto r = ds::run_sequence_test(alg, s.values());
            good = r.good;
            out["n"] = s.size();
            out["good"] = r.good;
            out.update(counters_json(r.counters));
            out["stop_index"] = r.stop_index;
        }
        std::cout << out.dump(2) << '\n';
        return good ? 0 : kExitBad;
    } catch (const ds::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
    std::string algorithm = "linear";
    std::int64_t n = 10;
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    std::string format = "json";
};

struct Prediction {
    std::optional<std::string> comparisons, assignments, total;
    std::string note;
};

Prediction predict(ds::Algorithm alg, std::int64_t n) {
    namespace an = ds::analytics;
    const bool square = an::is_perfect_square(n);
    if ((alg == ds::Algorithm::Bucket || alg == ds::Algorithm::Matrix) && !square) {
        return {std::nullopt, std::nullopt, std::nullopt,
                "no analytic value: n = " + std::to_string(n) + " is not a perfect square"};
    }
    if (alg == ds::Algorithm::Matrix) {
        const auto c = an::expected_comparisons_matrix(n);
        const auto t = an::expected_time_matrix(n);
        const auto range = [](const an::CostInterval& b) {
            return "[" + ds::render_fixed(b.lower, 6) + ", " + ds::render_fixed(b.upper, 6) + "]";
        };
        return {range(c), std::nullopt, range(t), "bracket for the expected cost"};
    }
    const auto r = an::expected_cost(n, alg);
    return {r.expected_comparisons.render(6), r.expected_assignments.render(6),
            r.expected_time.render(6), "exact expectation"};
}

int cmd_simulate(const SimulateArgs& a) {
    const ds::Algorithm alg = ds::parse_algorithm(a.algorithm);
    const ds::simulation::SimulationConfig cfg{a.n, alg, a.trials, a.seed, a.threads};
    const auto result = ds::simulation::simulate(cfg);
    const Prediction p = predict(alg, a.n);
    const struct {
        const char* name;
        const ds::simulation::ExpectationEstimate& e;
        const std::optional<std::string>& analytic;
    } rows[] = {{"comparisons", result.comparisons, p.comparisons},
                {"assignments", result.assignments, p.assignments},
                {"total", result.total, p.total}};

    const auto fmt = ds::tables::parse_format(a.format);
    if (fmt == ds::tables::Format::Json) {
        json out;
        out["algorithm"] = std::string(ds::algorithm_name(alg));
        out["n"] = a.n;
        out["trials"] = a.trials;
        out["seed"] = a.seed;
        out["generator"] = "xoshiro256**";
        for (const auto& r : rows) {
            out[r.name] = {{"mean", r.e.mean},
                           {"sample_variance", r.e.sample_variance},
                           {"standard_error", r.e.standard_error},
                           {"trials", r.e.trials},
                           {"good_fraction", r.e.good_fraction},
                           {"analytic", r.analytic ? json(*r.analytic) : json(nullptr)}};
        }
        out["analytic_note"] = p.note;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    const bool csv = fmt == ds::tables::Format::Csv;
    const char* sep = csv ? "," : " | ";
    if (!csv) std::cout << "| ";
    std::cout << "measure" << sep << "mean" << sep << "sample_variance" << sep << "standard_error"
              << sep << "trials" << sep << "good_fraction" << sep << "analytic" << (csv ? "" : " |")
              << '\n';
    if (!csv) std::cout << "|:--|--:|--:|--:|--:|--:|--:|\n";
    for (const auto& r : rows) {
        if (!csv) std::cout << "| ";
        std::cout << r.name << sep << number(r.e.mean) << sep << number(r.e.sample_variance) << sep
                  << number(r.e.standard_error) << sep << r.e.trials << sep
                  << number(r.e.good_fraction) << sep
                  << (r.analytic ? (csv ? "\"" + *r.analytic + "\"" : *r.analytic) : "")
                  << (csv ? "" : " |") << '\n';
    }
    std::cout << (csv ? "# " : "\n") << p.note << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation testers: exact costs, reference tables, simulation"};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print reference table 1..5");
    table->add_option("id", table_args.id, "Table number")->required()->check(CLI::Range(1, 5));
    table->add_option("--n", table_args.n, "First n (alone: that single n)")->check(CLI::PositiveNumber);
    table->add_option("--n-max", table_args.n_max, "Last n")->check(CLI::PositiveNumber);
    table->add_option("--format", table_args.format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the self-check suite");
    verify->add_option("--level", verify_args.level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    verify->add_option("--budget", verify_args.budget, "Maximum inputs per exhaustive enumeration")
        ->capture_default_str();
    verify->add_option("--threads", verify_args.threads, "Worker threads")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "Seed for the Monte Carlo checks")
        ->envname("DISTINCTSEQ_SEED")
        ->capture_default_str();

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Test one sequence or matrix; exit 0 good, 1 bad, 2 malformed");
    run->add_option("--alg", run_args.algorithm, "linear, backward, bucket or matrix")
        ->check(kAlgorithmNames)
        ->capture_default_str();
    auto* inline_opt = run->add_option("text", run_args.inline_input,
                                       "Inline input, e.g. \"3: 1 2 3\" or \"2; 1 2; 2 1\"");
    auto* file_opt = run->add_option("-f,--file", run_args.file, "Read the input from a file");
    inline_opt->excludes(file_opt);

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of expected costs");
    simulate->add_option("--alg", sim_args.algorithm, "linear, backward, bucket or matrix")
        ->check(kAlgorithmNames)
        ->capture_default_str();
    simulate->add_option("--n", sim_args.n, "Input size")->check(CLI::PositiveNumber)->capture_default_str();
    simulate->add_option("--trials", sim_args.trials, "Number of trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", sim_args.seed, "64-bit seed")
        ->envname("DISTINCTSEQ_SEED")
        ->capture_default_str();
    simulate->add_option("--threads", sim_args.threads, "Worker threads")->capture_default_str();
    simulate->add_option("--format", sim_args.format, "json, csv or markdown")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table) return cmd_table(table_args);
        if (*verify) return cmd_verify(verify_args);
        if (*run) return cmd_run(run_args);
        if (*simulate) return cmd_simulate(sim_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMalformed;
    }
    return 0;
}
