#include "distinctseq/analytics.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <thread>
#include <stdexcept>
#include <string>

namespace distinctseq::analytics {

namespace {

Rational ratio(const Integer& num, const Integer& den) {
    Rational out;
    mpq_set_num(out.backend().data(), num.backend().data());
    mpq_set_den(out.backend().data(), den.backend().data());
    mpq_canonicalize(out.backend().data());
    return out;
}

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": n must be positive");
}

std::int64_t require_square(std::int64_t n, const char* what) {
    require_positive(n, what);
    if (!is_perfect_square(n)) {
        throw std::domain_error(std::string(what) + ": n = " + std::to_string(n) +
                                " is not a perfect square");
    }
    return exact_root(n);
}

// sum_{k=1}^{n} [n!/(n-k)!] k^w n^(n-k), by Horner in powers of n.
Integer falling_weighted_sum(std::int64_t n, std::int64_t w) {
    Integer acc(0);
    Integer falling(1);
    for (std::int64_t k = 1; k <= n; ++k) {
        falling *= (n - k + 1);
        acc *= n;
        acc += falling * power(k, w);
    }
    return acc;
}

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Decimal dec(std::int64_t v) { return Decimal(v); }

Decimal sqrt_pi_over(std::int64_t den) { return decimal_sqrt(decimal_pi() / dec(den)); }

// Formulas shared by the exact and decimal routes. T is Rational or Decimal.
template <class T>
T bucket_c1(const T& r1, const T& r2, std::int64_t m, std::int64_t n) {
    if (n == 1) return T(0);
    return T(m * (m - 1)) / T(2 * n * (n - 1)) * (r2 - r1);
}

template <class T>
T first_repeat_unconditioned(const T& r1, std::int64_t m) {
    return (T(2 * m + 1) + r1) / T(2 * m + 2);
}

template <class T>
T first_repeat(const T& r1, const T& p, std::int64_t m) {
    return first_repeat_unconditioned(r1, m) - p * T(m + 1) / T(2);
}

template <class T>
T bucket_comparisons(const T& r1, const T& r2, const T& p, std::int64_t m, std::int64_t n) {
    return T(m) * bucket_c1(r1, r2, m, n) + first_repeat(r1, p, m);
}

template <class T>
T bucket_assignments(const T& r1, const T& p, std::int64_t m) {
    return T(2 + m) + T(3) * r1 + T(2) * (T(1) - p);
}

template <class T>
T loop_charged_assignments(const T& r1, const T& p, std::int64_t m, std::int64_t n,
                           const T& r2) {
    return T(2 + m) + T(3) * r1 + bucket_comparisons(r1, r2, p, m, n) +
           T(3) * first_repeat(r1, p, m) - p;
}

template <class T>
T backward_comparisons(const T& r2, const T& p, std::int64_t n) {
    // sum_k p_k (B(k,2) + (k+1)/2) - p_n (n+1)/2 = R_2/2 + R_0/2 - p_n (n+1)/2
    return r2 / T(2) + T(1) / T(2) - p * T(n + 1) / T(2);
}

Decimal geometric_sum(const Decimal& p, std::int64_t terms) {
    Decimal sum(0);
    Decimal pk(1);
    for (std::int64_t k = 0; k < terms; ++k) {
        sum += pk;
        pk *= p;
    }
    return sum;
}

}  // namespace

bool is_perfect_square(std::int64_t n) {
    if (n < 0) return false;
    const auto r = isqrt(n);
    return r * r == n;
}

std::int64_t exact_root(std::int64_t n) {
    if (!is_perfect_square(n)) {
        throw std::domain_error(std::to_string(n) + " is not a perfect square");
    }
    return isqrt(n);
}

Rational factorial_ratio(std::int64_t n) {
    require_positive(n, "factorial_ratio");
    return ratio(factorial(n), power(n, n));
}

Rational a_k(std::int64_t n, std::int64_t k) {
    require_positive(n, "a_k");
    if (k < 0) throw std::domain_error("a_k: k must be nonnegative");
    return ratio(power(n, k), factorial(k));
}

Rational p_k(std::int64_t n, std::int64_t k) {
    require_positive(n, "p_k");
    if (k < 1 || k > n) {
        throw std::domain_error("p_k: k = " + std::to_string(k) + " outside [1," +
                                std::to_string(n) + "]");
    }
    return ratio(factorial(n) / factorial(n - k) * k, power(n, k + 1));
}

Rational power_sum_S(std::int64_t n, std::int64_t i) {
    require_positive(n, "power_sum_S");
    if (i < 0) throw std::domain_error("power_sum_S: i must be nonnegative");
    // sum_{k<n} n^k k^i (n-1)!/k!  over the common denominator (n-1)!
    Integer acc(0);
    Integer tail(1);  // (n-1)!/k!, built from k = n-1 downwards
    for (std::int64_t k = n - 1; k >= 0; --k) {
        if (k < n - 1) tail *= (k + 1);
        const Integer weight = (k == 0) ? Integer(i == 0 ? 1 : 0) : power(k, i);
        acc += power(n, k) * weight * tail;
    }
    return ratio(acc, factorial(n - 1));
}

Rational power_sum_S_recurrence(std::int64_t n, std::int64_t i) {
    require_positive(n, "power_sum_S_recurrence");
    if (i < 1) throw std::domain_error("power_sum_S_recurrence: i must be positive");
    Rational sum(0);
    for (std::int64_t k = 0; k < i; ++k) {
        sum += Rational(binomial(i - 1, k)) * power_sum_S(n, k);
    }
    return Rational(n) * sum - Rational(power(n, i)) * a_k(n, n - 1);
}

Rational moment_R(std::int64_t n, std::int64_t i) {
    require_positive(n, "moment_R");
    if (i < 0) throw std::domain_error("moment_R: i must be nonnegative");
    return ratio(falling_weighted_sum(n, i + 1), power(n, n + 1));
}

Rational moment_R_from_power_sums(std::int64_t n, std::int64_t i) {
    require_positive(n, "moment_R_from_power_sums");
    if (i < 1) throw std::domain_error("moment_R_from_power_sums: i must be positive");
    Rational sum(0);
    for (std::int64_t l = 0; l <= i + 1; ++l) {
        Rational term = Rational(binomial(i + 1, l) * power(n, i + 1 - l)) * power_sum_S(n, l);
        if (l % 2 == 0) sum += term; else sum -= term;
    }
    return ratio(factorial(n), power(n, n + 1)) * sum;
}

Rational q_ramanujan(std::int64_t n) {
    require_positive(n, "q_ramanujan");
    // sum_{k=0}^{n-1} [(n-1)!/(n-1-k)!] n^(n-1-k) / n^(n-1)
    Integer acc(0);
    Integer falling(1);
    for (std::int64_t k = 0; k < n; ++k) {
        if (k > 0) falling *= (n - k);
        acc *= n;
        acc += falling;
    }
    return ratio(acc, power(n, n - 1));
}

Rational expected_comparisons_linear(std::int64_t n) {
    require_positive(n, "expected_comparisons_linear");
    return Rational(1) - factorial_ratio(n) + moment_R(n, 1);
}

Rational expected_assignments_linear(std::int64_t n) {
    // line 8 runs once per comparison except on the final, colliding one
    return Rational(n) + expected_comparisons_linear(n) + factorial_ratio(n);
}

Rational expected_time_linear(std::int64_t n) {
    return Rational(n + 1) + Rational(2) * expected_comparisons_linear(n);
}

Rational expected_comparisons_backward(std::int64_t n) {
    require_positive(n, "expected_comparisons_backward");
    return backward_comparisons(moment_R(n, 2), factorial_ratio(n), n);
}

Rational expected_assignments_backward(std::int64_t n) {
    require_positive(n, "expected_assignments_backward");
    return Rational(2) - factorial_ratio(n);
}

Rational expected_time_backward(std::int64_t n) {
    return expected_comparisons_backward(n) + expected_assignments_backward(n);
}

Rational expected_bucket_occupancy(std::int64_t n) {
    const auto m = require_square(n, "expected_bucket_occupancy");
    return moment_R(n, 1) / Rational(m);
}

Rational expected_bucket_comparisons(std::int64_t n) {
    const auto m = require_square(n, "expected_bucket_comparisons");
    return bucket_c1(moment_R(n, 1), moment_R(n, 2), m, n);
}

Rational expected_first_repeat_cost_unconditioned(std::int64_t n) {
    const auto m = require_square(n, "expected_first_repeat_cost_unconditioned");
    return first_repeat_unconditioned(moment_R(n, 1), m);
}

Rational expected_first_repeat_cost(std::int64_t n) {
    const auto m = require_square(n, "expected_first_repeat_cost");
    return first_repeat(moment_R(n, 1), factorial_ratio(n), m);
}

Rational expected_comparisons_bucket(std::int64_t n) {
    const auto m = require_square(n, "expected_comparisons_bucket");
    return bucket_comparisons(moment_R(n, 1), moment_R(n, 2), factorial_ratio(n), m, n);
}

Rational expected_assignments_bucket(std::int64_t n) {
    const auto m = require_square(n, "expected_assignments_bucket");
    return bucket_assignments(moment_R(n, 1), factorial_ratio(n), m);
}

Rational expected_time_bucket(std::int64_t n) {
    return expected_comparisons_bucket(n) + expected_assignments_bucket(n);
}

Rational loop_charged_assignments_bucket(std::int64_t n) {
    const auto m = require_square(n, "loop_charged_assignments_bucket");
    return loop_charged_assignments(moment_R(n, 1), factorial_ratio(n), m, n, moment_R(n, 2));
}

namespace {

CostInterval matrix_bracket(std::int64_t n, const Decimal& per_line, const Decimal& offset) {
    const Decimal p = factorial_ratio_decimal(n);
    const Decimal rows = geometric_sum(p, n);
    Decimal pn(1);
    for (std::int64_t k = 0; k < n; ++k) pn *= p;
    const Decimal columns = pn * geometric_sum(p, n);
    return {offset + per_line, offset + per_line * (rows + columns)};
}

}  // namespace

CostInterval expected_time_matrix(std::int64_t n) {
    require_square(n, "expected_time_matrix");
    return matrix_bracket(n, to_decimal(expected_time_bucket(n)), Decimal(1));
}

CostInterval expected_comparisons_matrix(std::int64_t n) {
    require_square(n, "expected_comparisons_matrix");
    return matrix_bracket(n, to_decimal(expected_comparisons_bucket(n)), Decimal(0));
}

ExpectedCostReport expected_cost(std::int64_t n, Algorithm alg) {
    switch (alg) {
        case Algorithm::Linear: {
            Rational c = expected_comparisons_linear(n);
            Rational a = expected_assignments_linear(n);
            return {n, alg, c, a, c + a};
        }
        case Algorithm::Backward: {
            Rational c = expected_comparisons_backward(n);
            Rational a = expected_assignments_backward(n);
            return {n, alg, c, a, c + a};
        }
        case Algorithm::Bucket: {
            Rational c = expected_comparisons_bucket(n);
            Rational a = expected_assignments_bucket(n);
            return {n, alg, c, a, c + a};
        }
        case Algorithm::Matrix: break;
    }
    throw std::invalid_argument("expected_cost: Matrix has only a bracket; use expected_time_matrix");
}

// ---- decimal ---------------------------------------------------------------

Decimal factorial_ratio_decimal(std::int64_t n) {
    require_positive(n, "factorial_ratio_decimal");
    return decimal_exp(log_factorial(n) - dec(n) * decimal_log(dec(n)));
}

DecimalMoments decimal_moments(std::int64_t n) {
    require_positive(n, "decimal_moments");
    // p_{k+1} = p_k (n-k)(k+1) / (n k); terms decay like exp(-k^2 / 2n) past sqrt(n).
    const Decimal nd = dec(n);
    const Decimal cutoff("1e-75");
    Decimal p = Decimal(1) / nd;
    Decimal r1(0), r2(0);
    const std::int64_t peak = 2 * isqrt(n) + 2;
    for (std::int64_t k = 1; k <= n; ++k) {
        const Decimal pk1 = p * dec(k);
        r1 += pk1;
        r2 += pk1 * dec(k);
        if (k > peak && pk1 * dec(k) < cutoff * r2) break;
        if (k < n) p = p * dec(n - k) * dec(k + 1) / (nd * dec(k));
    }
    return {r1, r2, factorial_ratio_decimal(n)};
}

Decimal stirling_tau(std::int64_t n) {
    require_positive(n, "stirling_tau");
    const Decimal nd = dec(n);
    return log_factorial(n) - nd * decimal_log(nd) + nd -
           decimal_log(Decimal(2) * decimal_pi() * nd) / Decimal(2);
}

namespace {

// (n!/n^n) e^n = sqrt(2 pi n) e^tau, kept in log space.
Decimal scaled_exponential(std::int64_t n) {
    const Decimal nd = dec(n);
    return decimal_exp(log_factorial(n) - nd * decimal_log(nd) + nd);
}

Decimal sigma_from(std::int64_t n, const Decimal& r1) {
    return scaled_exponential(n) / Decimal(2) - r1 - Decimal(1) / Decimal(3);
}

Decimal kappa_from(std::int64_t n, const Decimal& r1) {
    return r1 - decimal_sqrt(decimal_pi() * dec(n) / Decimal(2)) + Decimal(1) / Decimal(3);
}

}  // namespace

Decimal szego_sigma(std::int64_t n) {
    if (n == 0) return Decimal(1) / Decimal(6);
    require_positive(n, "szego_sigma");
    return sigma_from(n, decimal_moments(n).r1);
}

Decimal kappa(std::int64_t n) {
    require_positive(n, "kappa");
    return kappa_from(n, decimal_moments(n).r1);
}

Decimal kappa_1(std::int64_t n) {
    const Decimal root = decimal_sqrt(decimal_pi() * dec(n) / Decimal(2));
    return root * (decimal_exp(stirling_tau(n)) - Decimal(1));
}

Decimal kappa_2(std::int64_t n) {
    const Decimal root = decimal_sqrt(decimal_pi() * dec(n) / Decimal(2));
    return root * Decimal(2) * szego_sigma(n) * decimal_exp(stirling_tau(n) - dec(n));
}

Decimal kappa_from_stirling(std::int64_t n) { return kappa_1(n) - szego_sigma(n); }

Decimal kappa_ratio(std::int64_t n) { return kappa(n + 1) / kappa(n); }

Decimal delta(std::int64_t n) {
    const auto mom = decimal_moments(n);
    return kappa_from(n, mom.r1) - mom.factorial_ratio;
}

Decimal alpha(std::int64_t n) {
    const auto mom = decimal_moments(n);
    return kappa_from(n, mom.r1) / Decimal(2) + mom.factorial_ratio * dec(n + 1) / Decimal(2);
}

Decimal bucket_occupancy_literal(std::int64_t n) {
    require_positive(n, "bucket_occupancy_literal");
    return decimal_moments(n).r1 / decimal_sqrt(dec(n));
}

Decimal mu(std::int64_t n) {
    return sqrt_pi_over(2) - bucket_occupancy_literal(n);
}

Decimal eta(std::int64_t n) {
    const auto m = require_square(n, "eta");
    const auto mom = decimal_moments(n);
    return Decimal(1) + sqrt_pi_over(8) - first_repeat(mom.r1, mom.factorial_ratio, m);
}

Decimal rho(std::int64_t n) {
    const auto m = require_square(n, "rho");
    const auto mom = decimal_moments(n);
    return bucket_comparisons(mom.r1, mom.r2, mom.factorial_ratio, m, n) - dec(m) -
           Decimal(1) / Decimal(3) + sqrt_pi_over(8);
}

Decimal phi(std::int64_t n) {
    const auto m = require_square(n, "phi");
    const auto mom = decimal_moments(n);
    const Decimal total = bucket_comparisons(mom.r1, mom.r2, mom.factorial_ratio, m, n) +
                          loop_charged_assignments(mom.r1, mom.factorial_ratio, m, n, mom.r2);
    return total - dec(m) * (Decimal(3) + Decimal(3) * sqrt_pi_over(2)) -
           decimal_sqrt(Decimal(25) * decimal_pi() / Decimal(8));
}

Decimal lambda(std::int64_t n) {
    require_positive(n, "lambda");
    const auto mom = decimal_moments(n);
    const Decimal root = decimal_sqrt(decimal_pi() * dec(n) / Decimal(2));
    return Decimal(2 * n) + Decimal(1) / Decimal(3) - root * decimal_exp(stirling_tau(n)) -
           mom.r2;
}

Decimal knuth_q_series(std::int64_t n) {
    require_positive(n, "knuth_q_series");
    const Decimal nd = dec(n);
    const Decimal pi = decimal_pi();
    return decimal_sqrt(pi * nd / Decimal(2)) - Decimal(1) / Decimal(3) +
           decimal_sqrt(pi / (Decimal(2) * nd)) / Decimal(12) - Decimal(4) / (Decimal(135) * nd) +
           decimal_sqrt(pi / (Decimal(2) * nd * nd * nd)) / Decimal(288);
}

Decimal bucket_comparisons_closed_form(std::int64_t n) {
    const auto m = require_square(n, "bucket_comparisons_closed_form");
    const Decimal k = kappa(n);
    const Decimal s8 = sqrt_pi_over(8);
    return dec(m) - s8 + (s8 + Decimal(2) / Decimal(3) - k / Decimal(2)) / dec(m + 1) -
           factorial_ratio_decimal(n) * dec(m + 1) / Decimal(2);
}

Decimal backward_comparisons_closed_form(std::int64_t n) {
    return dec(n) - decimal_sqrt(decimal_pi() * dec(n) / Decimal(8)) + Decimal(2) / Decimal(3) -
           alpha(n);
}

ErrorTermReport error_terms(std::int64_t n) {
    require_positive(n, "error_terms");
    const auto mom = decimal_moments(n);
    const Decimal k = kappa_from(n, mom.r1);
    const Decimal root_n = decimal_sqrt(dec(n));
    ErrorTermReport out{
        n,
        k,
        sigma_from(n, mom.r1),
        k - mom.factorial_ratio,
        k / Decimal(2) + mom.factorial_ratio * dec(n + 1) / Decimal(2),
        sqrt_pi_over(2) - mom.r1 / root_n,
        Decimal(2 * n) + Decimal(1) / Decimal(3) -
            decimal_sqrt(decimal_pi() * dec(n) / Decimal(2)) * decimal_exp(stirling_tau(n)) -
            mom.r2,
        std::nullopt,
        std::nullopt,
        std::nullopt,
    };
    if (is_perfect_square(n)) {
        const auto m = isqrt(n);
        const Decimal cb = bucket_comparisons(mom.r1, mom.r2, mom.factorial_ratio, m, n);
        out.eta = Decimal(1) + sqrt_pi_over(8) - first_repeat(mom.r1, mom.factorial_ratio, m);
        out.rho = cb - dec(m) - Decimal(1) / Decimal(3) + sqrt_pi_over(8);
        out.phi = cb + loop_charged_assignments(mom.r1, mom.factorial_ratio, m, n, mom.r2) -
                  dec(m) * (Decimal(3) + Decimal(3) * sqrt_pi_over(2)) -
                  decimal_sqrt(Decimal(25) * decimal_pi() / Decimal(8));
    }
    return out;
}

std::vector<ErrorTermReport> error_term_sweep(std::int64_t n_min, std::int64_t n_max,
                                              unsigned threads) {
    require_positive(n_min, "error_term_sweep");
    if (n_max < n_min) return {};
    const auto count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<std::optional<ErrorTermReport>> slots(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < count; i += workers) {
            slots[i] = error_terms(n_min + static_cast<std::int64_t>(i));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<ErrorTermReport> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace distinctseq::analytics
