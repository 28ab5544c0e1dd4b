#include "distinctseq/numeric.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <stdexcept>

namespace distinctseq {

Decimal to_decimal(const Rational& value) {
    Decimal out;
    mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Decimal decimal_pi() {
    Decimal out;
    mpfr_const_pi(out.backend().data(), MPFR_RNDN);
    return out;
}

Decimal decimal_sqrt(const Decimal& value) {
    Decimal out;
    mpfr_sqrt(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Decimal decimal_exp(const Decimal& value) {
    Decimal out;
    mpfr_exp(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Decimal decimal_log(const Decimal& value) {
    Decimal out;
    mpfr_log(out.backend().data(), value.backend().data(), MPFR_RNDN);
    return out;
}

Decimal log_factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    Decimal arg(n + 1);
    Decimal out;
    mpfr_lngamma(out.backend().data(), arg.backend().data(), MPFR_RNDN);
    return out;
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer out;
    mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer out;
    mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Integer power(std::int64_t base, std::int64_t exponent) {
    if (exponent < 0) throw std::domain_error("power: negative exponent");
    Integer out;
    Integer b(base);
    mpz_pow_ui(out.backend().data(), b.backend().data(), static_cast<unsigned long>(exponent));
    return out;
}

namespace {

// Formats |scaled| / 10^digits with the given sign.
std::string format_scaled(const Integer& scaled, bool negative, int digits) {
    std::string body = scaled.str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (negative && scaled != 0) body.insert(0, 1, '-');
    return body;
}

}  // namespace

std::string render_fixed(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("render_fixed: negative digit count");
    const bool negative = value < 0;
    Rational scaled = (negative ? Rational(-value) : value) * Rational(power(10, digits));
    Integer num = boost::multiprecision::numerator(scaled);
    Integer den = boost::multiprecision::denominator(scaled);
    Integer q = num / den;
    Integer r = num % den;
    // Compare 2r against den to decide rounding; ties go to the even neighbour.
    Integer twice = r * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) q += 1;
    return format_scaled(q, negative, digits);
}

std::string render_fixed(const Decimal& value, int digits) {
    if (digits < 0) throw std::invalid_argument("render_fixed: negative digit count");
    const bool negative = value < 0;
    Decimal scaled = (negative ? Decimal(-value) : value) * Decimal(power(10, digits));
    Decimal rounded;
    // MPFR_RNDN rounds ties to even.
    mpfr_rint(rounded.backend().data(), scaled.backend().data(), MPFR_RNDN);
    Integer q;
    mpfr_get_z(q.backend().data(), rounded.backend().data(), MPFR_RNDN);
    return format_scaled(q, negative, digits);
}

std::string render_exact(const Rational& value) {
    Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

const Rational& ExactValue::rational() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw std::logic_error("ExactValue: value is not an exact rational");
}

Decimal ExactValue::decimal() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return to_decimal(*r);
    return std::get<Decimal>(value_);
}

std::string ExactValue::render(int digits) const {
    return std::visit([digits](const auto& v) { return render_fixed(v, digits); }, value_);
}

}  // namespace distinctseq
