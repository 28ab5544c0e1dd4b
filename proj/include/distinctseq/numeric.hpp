#pragma once

// Number types shared by the analytic, oracle and reporting code.
//
// Rational is an exact GMP rational. Decimal is an MPFR float carrying 60
// significant decimal digits, used for quantities involving pi, e or square
// roots. Both have expression templates disabled so `auto` is safe.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <variant>

namespace distinctseq {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Decimal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                              boost::multiprecision::et_off>;

inline constexpr int kDecimalDigits = 60;

Decimal to_decimal(const Rational& value);
Decimal decimal_pi();
Decimal decimal_sqrt(const Decimal& value);
Decimal decimal_exp(const Decimal& value);
Decimal decimal_log(const Decimal& value);
/// ln(n!) for n >= 0.
Decimal log_factorial(std::int64_t n);

Integer factorial(std::int64_t n);
Integer binomial(std::int64_t n, std::int64_t k);
Integer power(std::int64_t base, std::int64_t exponent);

/// Fixed-point rendering with `digits` decimals, rounding half to even.
/// Negative zero is printed without a sign.
std::string render_fixed(const Rational& value, int digits);
std::string render_fixed(const Decimal& value, int digits);
/// "p/q", or "p" when the denominator is 1.
std::string render_exact(const Rational& value);

/// Either an exact rational or a 60-digit decimal. Quantities that are
/// rational in n stay exact; anything touching pi, e or sqrt is a decimal.
class ExactValue {
public:
    ExactValue(Rational value) : value_(std::move(value)) {}
    ExactValue(Decimal value) : value_(std::move(value)) {}

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    /// Throws std::logic_error when the value is a decimal.
    const Rational& rational() const;
    Decimal decimal() const;
    std::string render(int digits) const;

private:
    std::variant<Rational, Decimal> value_;
};

}  // namespace distinctseq
