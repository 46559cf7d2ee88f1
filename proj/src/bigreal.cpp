#include "orthospec/bigreal.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace orthospec {

void require_precision(long precision) {
    if (precision < min_precision) {
        throw std::invalid_argument("BigReal precision must be at least " +
                                    std::to_string(min_precision) + " bits, got " +
                                    std::to_string(precision));
    }
}

namespace {

long min_prec(const BigReal& a, const BigReal& b) {
    return a.precision() < b.precision() ? a.precision() : b.precision();
}

}  // namespace

BigReal::BigReal(long precision) {
    require_precision(precision);
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(value_, min_precision);
    mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::of(double value, long precision) {
    BigReal r(precision);
    mpfr_set_d(r.value_, value, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_int(long value, long precision) {
    BigReal r(precision);
    mpfr_set_si(r.value_, value, MPFR_RNDN);
    return r;
}

BigReal BigReal::of_int(const mpz_class& value, long precision) {
    BigReal r(precision);
    mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of_rational(const mpq_class& value, long precision) {
    BigReal r(precision);
    mpfr_set_q(r.value_, value.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of_string(const std::string& decimal, long precision) {
    BigReal r(precision);
    if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("BigReal: cannot parse decimal string '" + decimal + "'");
    }
    return r;
}

BigReal BigReal::pi(long precision) {
    require_precision(precision);
    static std::mutex cache_mutex;
    static std::map<long, BigReal> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(precision);
    if (it == cache.end()) {
        BigReal r(precision);
        mpfr_const_pi(r.value_, MPFR_RNDN);
        it = cache.emplace(precision, std::move(r)).first;
    }
    return it->second;
}

BigReal BigReal::pow2(long exponent, long precision) {
    BigReal r(precision);
    mpfr_set_si_2exp(r.value_, 1, exponent, MPFR_RNDN);
    return r;
}

BigReal BigReal::rounded_to(long precision) const {
    BigReal r(precision);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string BigReal::to_decimal(long digits) const {
    if (digits < 1) throw std::invalid_argument("BigReal::to_decimal needs digits >= 1");
    char* buf = nullptr;
    // %Re prints one digit before the point; precision field counts the rest.
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), value_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator+(const BigReal& rhs) const {
    BigReal r(min_prec(*this, rhs));
    mpfr_add(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-(const BigReal& rhs) const {
    BigReal r(min_prec(*this, rhs));
    mpfr_sub(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator*(const BigReal& rhs) const {
    BigReal r(min_prec(*this, rhs));
    mpfr_mul(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator/(const BigReal& rhs) const {
    BigReal r(min_prec(*this, rhs));
    mpfr_div(r.value_, value_, rhs.value_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

BigReal abs(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt of negative BigReal");
    BigReal r(x.precision());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("log of non-positive BigReal");
    BigReal r(x.precision());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log1p(const BigReal& x) {
    if (mpfr_cmp_si(x.raw(), -1) <= 0) throw std::domain_error("log1p argument must exceed -1");
    BigReal r(x.precision());
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal sinh(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal cosh(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal acosh(const BigReal& x) {
    if (mpfr_cmp_si(x.raw(), 1) < 0) throw std::domain_error("acosh argument must be >= 1");
    BigReal r(x.precision());
    mpfr_acosh(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal mul_2exp(const BigReal& x, long exponent) {
    BigReal r(x.precision());
    mpfr_mul_2si(r.raw(), x.raw(), exponent, MPFR_RNDN);
    return r;
}

}  // namespace orthospec
