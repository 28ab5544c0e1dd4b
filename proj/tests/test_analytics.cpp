#include "distinctseq/analytics.hpp"

#include "doctest.h"

#include <cmath>

using namespace distinctseq;
namespace an = distinctseq::analytics;

namespace {

Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

double d(const Decimal& x) { return x.convert_to<double>(); }

std::string six(const Decimal& x) { return render_fixed(x, 6); }
std::string six(const Rational& x) { return render_fixed(x, 6); }

}  // namespace

TEST_CASE("factorial ratio") {
    CHECK(six(an::factorial_ratio(1)) == "1.000000");
    CHECK(six(an::factorial_ratio(4)) == "0.093750");
    CHECK(six(an::factorial_ratio(10)) == "0.000363");
    CHECK(an::factorial_ratio(4) == q(3, 32));
    CHECK(abs(an::factorial_ratio_decimal(10) - to_decimal(an::factorial_ratio(10))) < Decimal("1e-55"));
    CHECK(an::factorial_ratio_decimal(10000) > 0);
    CHECK_THROWS_AS(an::factorial_ratio(0), std::domain_error);
}

TEST_CASE("p_k") {
    CHECK(an::p_k(1, 1) == 1);
    CHECK(an::p_k(2, 1) == q(1, 2));
    CHECK(an::p_k(2, 2) == q(1, 2));
    Rational s = 0;
    for (int k = 1; k <= 5; ++k) s += an::p_k(5, k);
    CHECK(s == 1);
    CHECK_THROWS(an::p_k(3, 0));
    CHECK_THROWS(an::p_k(3, 4));
}

TEST_CASE("power sums S_i") {
    CHECK(an::power_sum_S(1, 0) == 1);
    CHECK(an::power_sum_S(2, 0) == 3);
    CHECK(an::power_sum_S(2, 1) == 2);
    for (int n = 1; n <= 20; ++n) {
        CHECK(an::power_sum_S(n, 1) == n * an::power_sum_S(n, 0) - n * an::a_k(n, n - 1));
        for (int i = 1; i <= 4; ++i) CHECK(an::power_sum_S_recurrence(n, i) == an::power_sum_S(n, i));
    }
}

TEST_CASE("moments R_i") {
    CHECK(an::moment_R(2, 1) == q(3, 2));
    CHECK(an::moment_R(4, 1) == q(71, 32));
    for (int n = 1; n <= 50; ++n) {
        CHECK(an::moment_R(n, 0) == 1);
        CHECK(an::moment_R(n, 1) + an::moment_R(n, 2) == 2 * n);
        CHECK(an::moment_R(n, 1) == an::factorial_ratio(n) * an::power_sum_S(n, 0));
    }
    for (int n = 1; n <= 12; ++n) {
        for (int i = 1; i <= 4; ++i) CHECK(an::moment_R_from_power_sums(n, i) == an::moment_R(n, i));
    }
}

TEST_CASE("decimal moments agree with exact moments") {
    for (int n : {1, 2, 7, 30, 100}) {
        const auto m = an::decimal_moments(n);
        CHECK(abs(m.r1 - to_decimal(an::moment_R(n, 1))) < Decimal("1e-50"));
        CHECK(abs(m.r2 - to_decimal(an::moment_R(n, 2))) < Decimal("1e-50"));
    }
}

TEST_CASE("Szego sigma and kappa") {
    CHECK(six(an::szego_sigma(1)) == "0.025808");
    CHECK(six(an::szego_sigma(5)) == "0.005799");
    CHECK(an::szego_sigma(0) == Decimal(1) / Decimal(6));
    CHECK(six(an::kappa(1)) == "0.080019");
    CHECK(six(an::kappa(8)) == "0.033444");
    for (int n = 1; n <= 60; ++n) {
        CHECK(abs(an::kappa(n) - an::kappa_from_stirling(n)) < Decimal("1e-45"));
        CHECK(abs(an::lambda(n) + an::szego_sigma(n)) < Decimal("1e-45"));
    }
    CHECK(an::kappa_ratio(10) < 1);
}

TEST_CASE("Stirling remainder bracket") {
    for (int n = 1; n <= 2000; ++n) {
        const Decimal tau = an::stirling_tau(n);
        REQUIRE(tau > Decimal(1) / Decimal(12 * n + 1));
        REQUIRE(tau < Decimal(1) / Decimal(12 * n));
    }
}

TEST_CASE("Ramanujan Q") {
    CHECK(an::q_ramanujan(1) == 1);
    CHECK(an::q_ramanujan(2) == q(3, 2));
    for (int n = 1; n <= 50; ++n) {
        CHECK(an::expected_comparisons_linear(n) - 1 + an::factorial_ratio(n) == an::q_ramanujan(n));
    }
    const Decimal diff = abs(to_decimal(an::q_ramanujan(1000)) - an::knuth_q_series(1000));
    CHECK(diff < Decimal("1e-4"));
    CHECK(diff < Decimal("1e-8"));
}

TEST_CASE("Linear expectations") {
    CHECK(an::expected_comparisons_linear(1) == 1);
    CHECK(an::expected_comparisons_linear(2) == 2);
    CHECK(six(an::expected_comparisons_linear(3)) == "2.666667");
    CHECK(six(an::expected_comparisons_linear(10)) == "4.659853");
    for (int n = 1; n <= 50; ++n) {
        CHECK(an::expected_time_linear(n) == n + 1 + 2 * an::expected_comparisons_linear(n));
        const auto r = an::expected_cost(n, Algorithm::Linear);
        CHECK(r.expected_time.rational() ==
              an::expected_time_linear(n) - (1 - an::factorial_ratio(n)));
    }
}

TEST_CASE("Backward expectations") {
    CHECK(an::expected_comparisons_backward(1) == 0);
    CHECK(an::expected_comparisons_backward(2) == 1);
    CHECK(an::expected_comparisons_backward(3) == q(19, 9));
    CHECK(six(an::expected_comparisons_backward(7)) == "5.966451");
    CHECK(an::expected_assignments_backward(3) == 2 - an::factorial_ratio(3));
    for (int n = 1; n <= 40; ++n) {
        const Decimal exact = to_decimal(an::expected_comparisons_backward(n));
        CHECK(abs(exact - an::backward_comparisons_closed_form(n)) < Decimal("1e-45"));
        // T_W = n - sqrt(pi n/8) + 5/3 - alpha + (1 - n!/n^n)
        const Decimal closed = Decimal(n) - decimal_sqrt(decimal_pi() * Decimal(n) / Decimal(8)) +
                               Decimal(5) / Decimal(3) - an::alpha(n) + 1 -
                               an::factorial_ratio_decimal(n);
        CHECK(abs(to_decimal(an::expected_time_backward(n)) - closed) < Decimal("1e-45"));
    }
}

TEST_CASE("Bucket expectations at n = 1 and n = 4") {
    CHECK(an::expected_first_repeat_cost_unconditioned(1) == 1);
    CHECK(an::expected_first_repeat_cost(1) == 0);
    CHECK(an::expected_comparisons_bucket(1) == 0);
    CHECK(an::expected_bucket_occupancy(1) == 1);
    CHECK(an::expected_bucket_occupancy(4) == q(71, 64));
    CHECK(six(an::expected_bucket_occupancy(4)) == "1.109375");
    CHECK(an::expected_first_repeat_cost(4) == q(17, 16));
    CHECK(an::expected_comparisons_bucket(4) == q(53, 32));
    CHECK(an::expected_assignments_bucket(4) == q(399, 32));
    CHECK(an::expected_time_bucket(4) == q(113, 8));
    CHECK_THROWS_AS(an::expected_comparisons_bucket(3), std::domain_error);
    CHECK_THROWS_AS(an::expected_time_matrix(10), std::domain_error);
}

TEST_CASE("Bucket closed forms") {
    for (int m = 1; m <= 12; ++m) {
        const int n = m * m;
        CHECK(abs(to_decimal(an::expected_comparisons_bucket(n)) -
                  an::bucket_comparisons_closed_form(n)) < Decimal("1e-45"));
        CHECK(an::expected_bucket_occupancy(n) == an::moment_R(n, 1) / Rational(m));
        const Decimal eta = an::eta(n);
        CHECK(abs(Decimal(1) + decimal_sqrt(decimal_pi() / 8) - eta -
                  to_decimal(an::expected_first_repeat_cost(n))) < Decimal("1e-45"));
    }
    const double ratio = d(to_decimal(an::expected_comparisons_bucket(10000))) / 100.0;
    CHECK(std::abs(ratio - 1) < 0.05);
}

TEST_CASE("rho tends to -1/3 and phi does not vanish") {
    const double rho = d(an::rho(10000));
    CHECK(rho == doctest::Approx(-1.0 / 3).epsilon(0.01));
    const double phi = d(an::phi(10000));
    CHECK(std::abs(phi) > 1.0);
}

TEST_CASE("error terms: monotonicity to n = 400") {
    const auto t = an::error_term_sweep(1, 400, 4);
    REQUIRE(t.size() == 400);
    for (std::size_t i = 1; i < t.size(); ++i) {
        CHECK(t[i].sigma < t[i - 1].sigma);
        CHECK(t[i].kappa < t[i - 1].kappa);
        CHECK(t[i].kappa > 0);
        CHECK(t[i].alpha < t[i - 1].alpha);
        CHECK(t[i].mu < t[i - 1].mu);
        CHECK((t[i].delta > t[i - 1].delta) == (t[i].n <= 8));
    }
    Decimal prev_eta(10);
    for (const auto& r : t) {
        CHECK(r.eta.has_value() == an::is_perfect_square(r.n));
        if (r.eta) {
            CHECK(*r.eta < prev_eta);
            prev_eta = *r.eta;
        }
    }
    const auto single = an::error_terms(37);
    CHECK(single.kappa == t[36].kappa);
    CHECK(single.sigma == t[36].sigma);
}

TEST_CASE("ratio diagnostics: constant offsets included") {
    // C_L ~ sqrt(pi n/2) + 2/3, C_W ~ n - sqrt(pi n/8) + 2/3, C_B ~ m - sqrt(pi/8)
    for (int n : {100, 10000}) {
        const double tol = n == 100 ? 0.05 : 0.005;
        const double cl = d(to_decimal(an::expected_comparisons_linear(n)));
        const double cw = d(to_decimal(an::expected_comparisons_backward(n)));
        const double cb = d(to_decimal(an::expected_comparisons_bucket(n)));
        const double m = std::sqrt(n);
        CHECK(std::abs(cl / (std::sqrt(M_PI * n / 2) + 2.0 / 3) - 1) < tol);
        CHECK(std::abs(cw / (n - std::sqrt(M_PI * n / 8) + 2.0 / 3) - 1) < tol);
        CHECK(std::abs(cb / (m - std::sqrt(M_PI / 8)) - 1) < tol);
        // the bare ratio C_W/n approaches 1 only at rate sqrt(pi/(8n))
        CHECK(std::abs(cw / n - (1 - std::sqrt(M_PI / (8.0 * n)))) < 1.0 / n);
    }
}

TEST_CASE("Matrix bracket") {
    for (int n : {4, 16, 100}) {
        const auto b = an::expected_time_matrix(n);
        const Decimal tb = to_decimal(an::expected_time_bucket(n));
        CHECK(b.lower == tb + 1);
        CHECK(b.upper > b.lower);
        const Decimal p = an::factorial_ratio_decimal(n);
        Decimal pn(1);
        for (int k = 0; k < n; ++k) pn *= p;
        CHECK(b.upper - b.lower < tb * p / (1 - p) + Decimal(n) * tb * pn + Decimal("1e-50"));
    }
    const auto b = an::expected_time_matrix(100);
    CHECK((b.upper - b.lower) / b.lower < Decimal("1e-3"));
    const auto c = an::expected_comparisons_matrix(4);
    CHECK(c.lower == to_decimal(an::expected_comparisons_bucket(4)));
}

TEST_CASE("expected_cost report is consistent") {
    for (auto alg : {Algorithm::Linear, Algorithm::Backward, Algorithm::Bucket}) {
        const auto r = an::expected_cost(16, alg);
        CHECK(r.expected_time.rational() ==
              r.expected_comparisons.rational() + r.expected_assignments.rational());
    }
    CHECK_THROWS_AS(an::expected_cost(4, Algorithm::Matrix), std::invalid_argument);
}

TEST_CASE("ExactValue rendering") {
    const ExactValue r(q(2, 3));
    CHECK(r.is_exact());
    CHECK(r.render(6) == "0.666667");
    const ExactValue x(decimal_pi());
    CHECK_FALSE(x.is_exact());
    CHECK(x.render(6) == "3.141593");
    CHECK_THROWS_AS(x.rational(), std::logic_error);
    CHECK(render_fixed(q(1, 8), 2) == "0.12");
    CHECK(render_fixed(q(3, 8), 2) == "0.38");
    CHECK(render_fixed(q(-1, 1000), 2) == "0.00");
    CHECK(render_exact(q(6, 4)) == "3/2");
    CHECK(render_exact(q(4, 2)) == "2");
}
