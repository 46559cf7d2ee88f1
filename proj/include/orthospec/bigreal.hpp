#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace orthospec {

// Minimum working precision in bits. Constructing a BigReal below this
// throws std::invalid_argument.
inline constexpr long min_precision = 64;

// Throws std::invalid_argument when precision < min_precision.
void require_precision(long precision);

// Value-semantic arbitrary-precision real backed by MPFR, round-to-nearest
// everywhere. Binary operations produce a result carrying the smaller of the
// two operand precisions, so precision never silently inflates through a
// computation; widen explicitly with rounded_to() when needed.
class BigReal {
  public:
    explicit BigReal(long precision = min_precision);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    static BigReal of(double value, long precision);
    static BigReal of_int(long value, long precision);
    static BigReal of_int(const mpz_class& value, long precision);
    static BigReal of_rational(const mpq_class& value, long precision);
    // Parses a decimal string (as produced by to_decimal, or any mpfr_set_str
    // base-10 form). Throws std::invalid_argument on malformed input.
    static BigReal of_string(const std::string& decimal, long precision);
    // pi at the given precision; results are cached per precision.
    static BigReal pi(long precision);
    // 2^exponent, exact.
    static BigReal pow2(long exponent, long precision);

    long precision() const { return mpfr_get_prec(value_); }
    BigReal rounded_to(long precision) const;

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    // Base-2 exponent of the leading bit; only meaningful for nonzero values.
    long exponent() const { return mpfr_get_exp(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    // Scientific-notation decimal string with the given significant digits,
    // e.g. "1.6449340668e0". Round-to-nearest.
    std::string to_decimal(long digits) const;

    BigReal operator-() const;
    BigReal operator+(const BigReal& rhs) const;
    BigReal operator-(const BigReal& rhs) const;
    BigReal operator*(const BigReal& rhs) const;
    BigReal operator/(const BigReal& rhs) const;
    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

    bool operator==(const BigReal& rhs) const { return mpfr_cmp(value_, rhs.value_) == 0; }
    bool operator!=(const BigReal& rhs) const { return !(*this == rhs); }
    bool operator<(const BigReal& rhs) const { return mpfr_cmp(value_, rhs.value_) < 0; }
    bool operator<=(const BigReal& rhs) const { return mpfr_cmp(value_, rhs.value_) <= 0; }
    bool operator>(const BigReal& rhs) const { return mpfr_cmp(value_, rhs.value_) > 0; }
    bool operator>=(const BigReal& rhs) const { return mpfr_cmp(value_, rhs.value_) >= 0; }

  private:
    mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);   // throws std::domain_error for x < 0
BigReal log(const BigReal& x);    // throws std::domain_error for x <= 0
BigReal log1p(const BigReal& x);  // throws std::domain_error for x <= -1
BigReal exp(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal acosh(const BigReal& x);  // throws std::domain_error for x < 1
BigReal mul_2exp(const BigReal& x, long exponent);  // x * 2^exponent, exact

}  // namespace orthospec
