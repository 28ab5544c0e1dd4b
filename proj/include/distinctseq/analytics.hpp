#pragma once

// Closed-form expectations for the four testers under i.i.d. uniform input.
//
// Notation follows the stopping-time analysis: y is the length of the
// longest distinct prefix, p_k = Pr{y = k}, R_i = sum_k p_k k^i, and
// S_i = sum_{k<n} (n^k / k!) k^i. Everything that is rational in n is
// returned as an exact Rational; error terms involving pi, e or sqrt(n) are
// 60-digit Decimals.
//
// Bucket quantities require n = m^2; they throw std::domain_error otherwise.
// All functions are pure and safe to call concurrently.

#include "distinctseq/algorithms.hpp"
#include "distinctseq/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace distinctseq::analytics {

bool is_perfect_square(std::int64_t n);
/// Integer square root of a perfect square; throws std::domain_error otherwise.
std::int64_t exact_root(std::int64_t n);

// ---- exact building blocks ----------------------------------------------

/// n! / n^n, the probability that a uniform sequence is a permutation.
Rational factorial_ratio(std::int64_t n);
/// a_k = n^k / k!
Rational a_k(std::int64_t n, std::int64_t k);
/// Pr{y = k} = n! k / ((n-k)! n^(k+1)), 1 <= k <= n.
Rational p_k(std::int64_t n, std::int64_t k);
/// Direct sum. The k = 0 term contributes a_0 = 1 to S_0 and nothing to S_i, i >= 1.
Rational power_sum_S(std::int64_t n, std::int64_t i);
/// S_i = n sum_{k<i} C(i-1,k) S_k - n^i a_{n-1}, for i >= 1.
Rational power_sum_S_recurrence(std::int64_t n, std::int64_t i);
/// Direct sum over the stopping distribution.
Rational moment_R(std::int64_t n, std::int64_t i);
/// R_i = n!/n^(n+1) sum_l (-1)^l C(i+1,l) n^(i+1-l) S_l, for i >= 1.
Rational moment_R_from_power_sums(std::int64_t n, std::int64_t i);
/// Ramanujan's Q(n) = sum_{k=0}^{n-1} prod_{j=1}^{k} (n-j)/n.
Rational q_ramanujan(std::int64_t n);

// ---- exact expected costs -----------------------------------------------

Rational expected_comparisons_linear(std::int64_t n);
/// Assignments as the counters tally them: n+1 setup plus one per accepted element.
Rational expected_assignments_linear(std::int64_t n);
/// T_L = n + 1 + 2 C_L. This accounting also charges the g <- False
/// assignment on bad inputs, so it exceeds the counted total by 1 - n!/n^n.
Rational expected_time_linear(std::int64_t n);

Rational expected_comparisons_backward(std::int64_t n);
/// 1 + Pr{bad} = 2 - n!/n^n.
Rational expected_assignments_backward(std::int64_t n);
Rational expected_time_backward(std::int64_t n);

/// E{b_1} = R_1 / m for n = m^2.
Rational expected_bucket_occupancy(std::int64_t n);
/// E{c_1}: comparisons spent inside bucket 1 before the first repeat.
Rational expected_bucket_comparisons(std::int64_t n);
/// E'{f} = (2m + 1 + R_1) / (2m + 2), the first-repeat cost before removing
/// the all-distinct case.
Rational expected_first_repeat_cost_unconditioned(std::int64_t n);
/// E{f} = E'{f} - p_n (m + 1) / 2.
Rational expected_first_repeat_cost(std::int64_t n);
Rational expected_comparisons_bucket(std::int64_t n);
/// Counted assignments: 2 + m + 3 R_1 + 2 (1 - n!/n^n).
Rational expected_assignments_bucket(std::int64_t n);
Rational expected_time_bucket(std::int64_t n);
/// The alternative assignment tally 2 + m + 3R_1 + C_B + 3E{f} - n!/n^n,
/// which also charges the inner loop counter. Only used for phi.
Rational loop_charged_assignments_bucket(std::int64_t n);

struct CostInterval {
    Decimal lower;
    Decimal upper;
};

/// Expected Matrix cost bracket for square n. Rows are tested while they
/// stay good, so row k+1 is reached with probability (n!/n^n)^k; the column
/// phase is charged T_B (n!/n^n)^(n+k). Both ends include the g <- True
/// assignment of Matrix itself.
CostInterval expected_time_matrix(std::int64_t n);
CostInterval expected_comparisons_matrix(std::int64_t n);

struct ExpectedCostReport {
    std::int64_t n;
    Algorithm algorithm;
    ExactValue expected_comparisons;
    ExactValue expected_assignments;
    ExactValue expected_time;  ///< comparisons + assignments
};

/// Linear, Backward or Bucket under the counter model. Throws
/// std::invalid_argument for Matrix (only a bracket is known).
ExpectedCostReport expected_cost(std::int64_t n, Algorithm alg);

// ---- decimal error terms -------------------------------------------------

Decimal factorial_ratio_decimal(std::int64_t n);

struct DecimalMoments {
    Decimal r1;
    Decimal r2;
    Decimal factorial_ratio;
};
/// R_1, R_2 and n!/n^n by a truncated positive series; usable for n up to 10^6.
DecimalMoments decimal_moments(std::int64_t n);

/// ln(n! (e/n)^n / sqrt(2 pi n)).
Decimal stirling_tau(std::int64_t n);
/// Szego's sigma from e^n/2 = S_0 + (1/3 + sigma) a_n, evaluated in log space.
/// sigma(0) = 1/6.
Decimal szego_sigma(std::int64_t n);
/// kappa = R_1 - sqrt(pi n / 2) + 1/3.
Decimal kappa(std::int64_t n);
/// kappa_1 = sqrt(pi n / 2) (e^tau - 1).
Decimal kappa_1(std::int64_t n);
/// kappa_2 = sqrt(pi n / 2) 2 sigma e^tau / e^n.
Decimal kappa_2(std::int64_t n);
/// kappa rebuilt from Stirling and Szego terms: kappa_1 - sigma.
Decimal kappa_from_stirling(std::int64_t n);
/// kappa(n+1) / kappa(n), diagnostic only.
Decimal kappa_ratio(std::int64_t n);
/// delta = kappa - n!/n^n.
Decimal delta(std::int64_t n);
/// alpha = kappa/2 + (n!/n^n)(n+1)/2.
Decimal alpha(std::int64_t n);
/// E{b_1} = R_1 / sqrt(n) with real sqrt(n); defined for every n >= 1.
Decimal bucket_occupancy_literal(std::int64_t n);
/// mu = sqrt(pi/2) - R_1/sqrt(n) = (1/3 - kappa)/sqrt(n).
Decimal mu(std::int64_t n);
/// eta = 1 + sqrt(pi/8) - E{f}; square n.
Decimal eta(std::int64_t n);
/// rho = C_B - sqrt(n) - 1/3 + sqrt(pi/8); square n.
Decimal rho(std::int64_t n);
/// phi = C_B + (loop-charged A_B) - sqrt(n)(3 + 3 sqrt(pi/2)) - sqrt(25 pi/8); square n.
Decimal phi(std::int64_t n);
/// lambda = 2n + 1/3 - sqrt(pi n/2) e^tau - R_2.
Decimal lambda(std::int64_t n);
/// sqrt(pi n/2) - 1/3 + (1/12) sqrt(pi/(2n)) - 4/(135 n) + (1/288) sqrt(pi/(2 n^3)).
Decimal knuth_q_series(std::int64_t n);
/// Closed decimal form of C_B for square n:
/// m - sqrt(pi/8) + (sqrt(pi/8) + 2/3 - kappa/2)/(m+1) - (n!/n^n)(m+1)/2.
Decimal bucket_comparisons_closed_form(std::int64_t n);
/// Closed decimal form of C_W: n - sqrt(pi n/8) + 2/3 - alpha.
Decimal backward_comparisons_closed_form(std::int64_t n);

struct ErrorTermReport {
    std::int64_t n;
    Decimal kappa, sigma, delta, alpha, mu, lambda;
    /// Present only for perfect-square n.
    std::optional<Decimal> eta, rho, phi;
};

/// All error terms for one n, sharing a single moment evaluation.
ErrorTermReport error_terms(std::int64_t n);
/// error_terms(n) for n_min..n_max in order, split over `threads` workers.
std::vector<ErrorTermReport> error_term_sweep(std::int64_t n_min, std::int64_t n_max,
                                              unsigned threads = 1);

}  // namespace distinctseq::analytics
