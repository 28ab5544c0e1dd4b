#include "distinctseq/verify.hpp"

#include "distinctseq/analytics.hpp"
#include "distinctseq/oracle.hpp"
#include "distinctseq/simulation.hpp"
#include "distinctseq/tables.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace distinctseq::verify {

namespace an = analytics;

Level parse_level(const std::string& name) {
    if (name == "fast") return Level::Fast;
    if (name == "full") return Level::Full;
    throw std::invalid_argument("unknown level '" + name + "'");
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.passed ? 0 : 1;
    return k;
}

namespace {

using Failure = std::optional<std::string>;

class Suite {
public:
    void add(std::string name, const std::function<Failure()>& body) {
        Check c{std::move(name), false, {}};
        try {
            const Failure f = body();
            c.passed = !f;
            if (f) c.detail = *f;
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(c));
    }
    Report report;
};

std::string str(const Rational& r) { return render_exact(r); }

Failure mismatch(const std::string& what, std::int64_t n, const Rational& got,
                 const Rational& want) {
    return what + " at n=" + std::to_string(n) + ": " + str(got) + " != " + str(want);
}

// First n in [lo, hi] where f fails, reported by `describe`.
Failure for_range(std::int64_t lo, std::int64_t hi, const std::function<Failure(std::int64_t)>& f) {
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (auto fail = f(n)) return fail;
    }
    return std::nullopt;
}

Failure strictly_decreasing(const std::vector<std::int64_t>& ns, const std::vector<Decimal>& v,
                            const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) {
            return std::string(name) + " does not decrease from n=" + std::to_string(ns[i - 1]) +
                   " to n=" + std::to_string(ns[i]);
        }
    }
    return std::nullopt;
}

Failure table_cells(int id, std::size_t expected_flagged) {
    const auto t = tables::build_table(id, 1, 10);
    std::size_t flagged = 0, cells = 0;
    std::string first;
    for (const auto& row : t.rows) {
        for (std::size_t c = 1; c < row.size(); ++c) {
            ++cells;
            if (row[c].flagged()) {
                ++flagged;
                if (first.empty()) first = "n=" + row[0].computed + " " + t.columns[c];
            }
        }
    }
    if (flagged != expected_flagged) {
        return std::to_string(flagged) + " of " + std::to_string(cells) +
               " cells differ from the published values (expected " +
               std::to_string(expected_flagged) + ")" + (first.empty() ? "" : ", first " + first);
    }
    return std::nullopt;
}

Failure within_se(const char* what, const simulation::ExpectationEstimate& e, double target) {
    const double z = std::abs(e.mean - target) / std::max(e.standard_error, 1e-300);
    if (z > 4) {
        std::ostringstream s;
        s << what << ": mean " << e.mean << " is " << z << " standard errors from " << target;
        return s.str();
    }
    return std::nullopt;
}

void exhaustive_checks(Suite& suite, std::int64_t n_max, const oracle::OracleOptions& opt) {
    const std::string range = "n=1.." + std::to_string(n_max);
    suite.add("oracle mean comparisons == C_L(n), " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            const auto r = oracle::exhaustive_expectation(n, Algorithm::Linear, opt);
            if (r.mean_comparisons != an::expected_comparisons_linear(n)) {
                return mismatch("C_L", n, r.mean_comparisons, an::expected_comparisons_linear(n));
            }
            return std::nullopt;
        });
    });
    suite.add("oracle mean assignments == n + C_L + n!/n^n, " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            const auto r = oracle::exhaustive_expectation(n, Algorithm::Linear, opt);
            if (r.mean_assignments != an::expected_assignments_linear(n)) {
                return mismatch("A_L", n, r.mean_assignments, an::expected_assignments_linear(n));
            }
            return std::nullopt;
        });
    });
    suite.add("oracle mean comparisons == C_W(n), " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            const auto r = oracle::exhaustive_expectation(n, Algorithm::Backward, opt);
            if (r.mean_comparisons != an::expected_comparisons_backward(n)) {
                return mismatch("C_W", n, r.mean_comparisons, an::expected_comparisons_backward(n));
            }
            return std::nullopt;
        });
    });
    suite.add("oracle mean assignments == 2 - n!/n^n (Backward), " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            const auto r = oracle::exhaustive_expectation(n, Algorithm::Backward, opt);
            if (r.mean_assignments != an::expected_assignments_backward(n)) {
                return mismatch("A_W", n, r.mean_assignments, an::expected_assignments_backward(n));
            }
            return std::nullopt;
        });
    });
    suite.add("good probability == n!/n^n for every tester, " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            for (Algorithm alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket}) {
                const auto r = oracle::exhaustive_expectation(n, alg, opt);
                if (r.good_probability != an::factorial_ratio(n)) {
                    return mismatch(std::string(algorithm_name(alg)) + " good probability", n,
                                    r.good_probability, an::factorial_ratio(n));
                }
                if (r.runs != oracle::input_space_size(n, alg)) {
                    return "run count mismatch at n=" + std::to_string(n);
                }
            }
            return std::nullopt;
        });
    });
    suite.add("stop law Pr{y=k} == p_k exactly, " + range, [&] {
        return for_range(1, n_max, [&](std::int64_t n) -> Failure {
            if (!oracle::stop_distribution_check(n, opt).matches) {
                return "mismatch at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    });
    suite.add("first-repeat index uniform given y=k, n=1.." + std::to_string(std::min<std::int64_t>(n_max, 4)),
              [&] {
                  return for_range(1, std::min<std::int64_t>(n_max, 4), [&](std::int64_t n) -> Failure {
                      if (!oracle::first_repeat_position_uniformity(n, opt).uniform) {
                          return "not uniform at n=" + std::to_string(n);
                      }
                      return std::nullopt;
                  });
              });
    suite.add("verdicts agree (Linear, Backward, Bucket), " + range, [&]() -> Failure {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const auto un = static_cast<std::size_t>(n);
            std::vector<Value> s(un, 1);
            for (;;) {
                const bool l = linear_test(s).good;
                if (backward_test(s).good != l || bucket_test(s).good != l) {
                    return "disagreement at n=" + std::to_string(n);
                }
                std::size_t i = un;
                while (i > 0 && s[i - 1] == static_cast<Value>(n)) s[--i] = 1;
                if (i == 0) break;
                ++s[i - 1];
            }
        }
        return std::nullopt;
    });
}

}  // namespace

Report run(Level level, const Options& options) {
    Suite suite;
    const bool full = level == Level::Full;
    const oracle::OracleOptions opt{options.budget, options.threads};
    const std::int64_t oracle_max = full ? 6 : 4;
    const std::int64_t identity_max = 50;
    const std::int64_t sweep_max = full ? 10'000 : 100;

    // ---- exhaustive agreement ----
    exhaustive_checks(suite, oracle_max, opt);
    suite.add("C_W(3) == 19/9", [&]() -> Failure {
        const auto r = oracle::exhaustive_expectation(3, Algorithm::Backward, opt);
        if (r.mean_comparisons != Rational(19) / Rational(9)) {
            return "oracle gives " + str(r.mean_comparisons);
        }
        if (an::expected_comparisons_backward(3) != Rational(19) / Rational(9)) {
            return "analytics gives " + str(an::expected_comparisons_backward(3));
        }
        return std::nullopt;
    });
    suite.add("oracle Bucket means == C_B, A_B for n=1,4", [&]() -> Failure {
        for (std::int64_t n : {1, 4}) {
            const auto r = oracle::exhaustive_expectation(n, Algorithm::Bucket, opt);
            if (r.mean_comparisons != an::expected_comparisons_bucket(n)) {
                return mismatch("C_B", n, r.mean_comparisons, an::expected_comparisons_bucket(n));
            }
            if (r.mean_assignments != an::expected_assignments_bucket(n)) {
                return mismatch("A_B", n, r.mean_assignments, an::expected_assignments_bucket(n));
            }
        }
        return std::nullopt;
    });
    suite.add("worst cases at n=4: Backward B(n,2), Bucket m B(m,2) + 1", [&]() -> Failure {
        const auto w = oracle::exhaustive_expectation(4, Algorithm::Backward, opt);
        const auto b = oracle::exhaustive_expectation(4, Algorithm::Bucket, opt);
        if (w.max_comparisons != 6) return "Backward max " + std::to_string(w.max_comparisons);
        if (b.max_comparisons != 3) return "Bucket max " + std::to_string(b.max_comparisons);
        return std::nullopt;
    });
    suite.add("Matrix n=2: good probability 2/16", [&]() -> Failure {
        const auto r = oracle::exhaustive_expectation(2, Algorithm::Matrix, opt);
        if (r.good_probability != Rational(1) / Rational(8)) return "got " + str(r.good_probability);
        return std::nullopt;
    });

    // ---- exact identities ----
    const std::string id_range = ", n=1.." + std::to_string(identity_max);
    suite.add("sum_k p_k = 1" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            Rational s = 0;
            for (std::int64_t k = 1; k <= n; ++k) s += an::p_k(n, k);
            if (s != 1) return mismatch("sum p_k", n, s, Rational(1));
            return std::nullopt;
        });
    });
    suite.add("R_0 = 1" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            if (an::moment_R(n, 0) != 1) return mismatch("R_0", n, an::moment_R(n, 0), Rational(1));
            return std::nullopt;
        });
    });
    suite.add("R_1 + R_2 = 2n" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            const Rational s = an::moment_R(n, 1) + an::moment_R(n, 2);
            if (s != Rational(2 * n)) return mismatch("R_1 + R_2", n, s, Rational(2 * n));
            return std::nullopt;
        });
    });
    suite.add("R_1 = (n!/n^n) S_0" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            const Rational rhs = an::factorial_ratio(n) * an::power_sum_S(n, 0);
            if (an::moment_R(n, 1) != rhs) return mismatch("R_1", n, an::moment_R(n, 1), rhs);
            return std::nullopt;
        });
    });
    suite.add("C_L - 1 + n!/n^n = Q(n)" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            const Rational lhs = an::expected_comparisons_linear(n) - 1 + an::factorial_ratio(n);
            if (lhs != an::q_ramanujan(n)) return mismatch("Q", n, lhs, an::q_ramanujan(n));
            return std::nullopt;
        });
    });
    suite.add("T_L = n + 1 + 2 C_L" + id_range, [&] {
        return for_range(1, identity_max, [](std::int64_t n) -> Failure {
            const Rational rhs = Rational(n + 1) + 2 * an::expected_comparisons_linear(n);
            if (an::expected_time_linear(n) != rhs) {
                return mismatch("T_L", n, an::expected_time_linear(n), rhs);
            }
            return std::nullopt;
        });
    });
    suite.add("S_1 = n S_0 - n a_{n-1}, n=1..20", [&] {
        return for_range(1, 20, [](std::int64_t n) -> Failure {
            const Rational rhs = n * an::power_sum_S(n, 0) - n * an::a_k(n, n - 1);
            if (an::power_sum_S(n, 1) != rhs) return mismatch("S_1", n, an::power_sum_S(n, 1), rhs);
            return std::nullopt;
        });
    });
    suite.add("S_i recurrence == direct sum, i=1..4, n=1..20", [&] {
        return for_range(1, 20, [](std::int64_t n) -> Failure {
            for (std::int64_t i = 1; i <= 4; ++i) {
                if (an::power_sum_S_recurrence(n, i) != an::power_sum_S(n, i)) {
                    return mismatch("S_" + std::to_string(i), n, an::power_sum_S_recurrence(n, i),
                                    an::power_sum_S(n, i));
                }
            }
            return std::nullopt;
        });
    });
    suite.add("R_i from power sums == direct sum, i=1..4, n=1..20", [&] {
        return for_range(1, 20, [](std::int64_t n) -> Failure {
            for (std::int64_t i = 1; i <= 4; ++i) {
                if (an::moment_R_from_power_sums(n, i) != an::moment_R(n, i)) {
                    return mismatch("R_" + std::to_string(i), n, an::moment_R_from_power_sums(n, i),
                                    an::moment_R(n, i));
                }
            }
            return std::nullopt;
        });
    });
    suite.add("E{b_1} = R_1 / m for square n <= 100", [&]() -> Failure {
        for (std::int64_t m = 1; m <= 10; ++m) {
            const std::int64_t n = m * m;
            const Rational rhs = an::moment_R(n, 1) / Rational(m);
            if (an::expected_bucket_occupancy(n) != rhs) {
                return mismatch("E{b_1}", n, an::expected_bucket_occupancy(n), rhs);
            }
        }
        return std::nullopt;
    });

    // ---- decimal cross-checks ----
    const Decimal tight("1e-40");
    suite.add("kappa = kappa_1 - sigma, n=1..100", [&] {
        return for_range(1, 100, [&](std::int64_t n) -> Failure {
            if (abs(an::kappa(n) - an::kappa_from_stirling(n)) > tight) {
                return "mismatch at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    });
    suite.add("lambda = -sigma, n=1..100", [&] {
        return for_range(1, 100, [&](std::int64_t n) -> Failure {
            if (abs(an::lambda(n) + an::szego_sigma(n)) > tight) {
                return "mismatch at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    });
    suite.add("C_W closed form n - sqrt(pi n/8) + 2/3 - alpha, n=1..50", [&] {
        return for_range(1, 50, [&](std::int64_t n) -> Failure {
            const Decimal exact = to_decimal(an::expected_comparisons_backward(n));
            if (abs(exact - an::backward_comparisons_closed_form(n)) > tight) {
                return "mismatch at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    });
    suite.add("C_B closed form matches the exact rational, square n <= 100", [&]() -> Failure {
        for (std::int64_t m = 1; m <= 10; ++m) {
            const std::int64_t n = m * m;
            const Decimal exact = to_decimal(an::expected_comparisons_bucket(n));
            if (abs(exact - an::bucket_comparisons_closed_form(n)) > tight) {
                return "mismatch at n=" + std::to_string(n);
            }
        }
        return std::nullopt;
    });
    const std::string sweep = ", n=1.." + std::to_string(sweep_max);
    suite.add("Stirling bracket 1/(12n+1) < tau < 1/(12n)" + sweep, [&] {
        return for_range(1, sweep_max, [](std::int64_t n) -> Failure {
            const Decimal tau = an::stirling_tau(n);
            if (!(Decimal(1) / Decimal(12 * n + 1) < tau && tau < Decimal(1) / Decimal(12 * n))) {
                return "outside bracket at n=" + std::to_string(n);
            }
            return std::nullopt;
        });
    });

    // ---- monotonicity ----
    const auto terms = an::error_term_sweep(1, sweep_max, options.threads);
    std::vector<std::int64_t> ns;
    std::vector<Decimal> sigma, kappa, alpha, mu, delta;
    std::vector<std::int64_t> square_ns;
    std::vector<Decimal> eta;
    for (const auto& t : terms) {
        ns.push_back(t.n);
        sigma.push_back(t.sigma);
        kappa.push_back(t.kappa);
        alpha.push_back(t.alpha);
        mu.push_back(t.mu);
        delta.push_back(t.delta);
        if (t.eta) {
            square_ns.push_back(t.n);
            eta.push_back(*t.eta);
        }
    }
    suite.add("sigma strictly decreasing" + sweep, [&] { return strictly_decreasing(ns, sigma, "sigma"); });
    suite.add("kappa positive and strictly decreasing" + sweep, [&]() -> Failure {
        for (std::size_t i = 0; i < kappa.size(); ++i) {
            if (kappa[i] <= 0) return "kappa not positive at n=" + std::to_string(ns[i]);
        }
        return strictly_decreasing(ns, kappa, "kappa");
    });
    suite.add("alpha strictly decreasing" + sweep, [&] { return strictly_decreasing(ns, alpha, "alpha"); });
    suite.add("mu strictly decreasing" + sweep, [&] { return strictly_decreasing(ns, mu, "mu"); });
    suite.add("eta strictly decreasing on square n" + sweep, [&] {
        return strictly_decreasing(square_ns, eta, "eta");
    });
    suite.add("delta increases for n=1..8, decreases after" + sweep, [&]() -> Failure {
        for (std::size_t i = 1; i < delta.size(); ++i) {
            const bool up = delta[i] > delta[i - 1];
            if (up != (ns[i] <= 8)) {
                return "delta " + std::string(up ? "increases" : "decreases") + " from n=" +
                       std::to_string(ns[i - 1]) + " to n=" + std::to_string(ns[i]);
            }
        }
        return std::nullopt;
    });

    // ---- tables ----
    suite.add("table 1 reproduces all 60 published cells", [] { return table_cells(1, 0); });
    suite.add("table 2 reproduces all 50 published cells", [] { return table_cells(2, 0); });
    suite.add("table 3 reproduces 46 of 50 published cells (4 flagged with footnotes)",
              [] { return table_cells(3, 4); });

    if (full) {
        suite.add("Knuth Q-series within 1e-4 of Q(1000)", []() -> Failure {
            const Decimal diff = abs(to_decimal(an::q_ramanujan(1000)) - an::knuth_q_series(1000));
            if (diff > Decimal("1e-4")) return "difference " + render_fixed(diff, 12);
            return std::nullopt;
        });
        suite.add("simulated C_L(10), C_W(10) within 4 SE (10^6 trials)", [&]() -> Failure {
            for (Algorithm alg : {Algorithm::Linear, Algorithm::Backward}) {
                const auto r = simulation::simulate({10, alg, 1'000'000, options.seed, options.threads});
                const Rational exact = alg == Algorithm::Linear ? an::expected_comparisons_linear(10)
                                                                : an::expected_comparisons_backward(10);
                if (auto f = within_se(algorithm_name(alg).data(), r.comparisons,
                                       exact.convert_to<double>())) {
                    return f;
                }
            }
            return std::nullopt;
        });
        suite.add("simulated C_B(9) within 4 SE (10^6 trials)", [&]() -> Failure {
            const auto r = simulation::simulate({9, Algorithm::Bucket, 1'000'000, options.seed, options.threads});
            return within_se("bucket", r.comparisons,
                             an::expected_comparisons_bucket(9).convert_to<double>());
        });
        suite.add("simulated Matrix n=2 within 4 SE of the oracle (10^6 trials)", [&]() -> Failure {
            const auto o = oracle::exhaustive_expectation(2, Algorithm::Matrix, opt);
            const auto r = simulation::simulate({2, Algorithm::Matrix, 1'000'000, options.seed, options.threads});
            if (auto f = within_se("matrix comparisons", r.comparisons, o.mean_comparisons.convert_to<double>())) return f;
            return within_se("matrix total", r.total, o.mean_total.convert_to<double>());
        });
        suite.add("simulated Matrix total inside the expected bracket, n=4,16", [&]() -> Failure {
            for (std::int64_t n : {4, 16}) {
                const auto r = simulation::simulate({n, Algorithm::Matrix, 100'000, options.seed, options.threads});
                const auto b = an::expected_time_matrix(n);
                const double lo = b.lower.convert_to<double>() - 4 * r.total.standard_error;
                const double hi = b.upper.convert_to<double>() + 4 * r.total.standard_error;
                if (r.total.mean < lo || r.total.mean > hi) {
                    std::ostringstream s;
                    s << "n=" << n << ": mean " << r.total.mean << " outside [" << lo << ", " << hi << "]";
                    return s.str();
                }
            }
            return std::nullopt;
        });
    }
    return suite.report;
}

std::string render(const Report& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << (c.passed ? "pass  " : "FAIL  ") << c.name;
        if (!c.passed) out << ": " << c.detail;
        out << '\n';
    }
    out << report.checks.size() - report.failures() << '/' << report.checks.size()
        << " checks passed\n";
    return out.str();
}

}  // namespace distinctseq::verify
