#include "orthospec/dilog.hpp"

#include <stdexcept>

namespace orthospec {

namespace {

constexpr long guard_bits = 32;

// Direct power series, valid for |y| <= 1/2 where the ratio test guarantees
// at least one bit of progress per term. y carries the working precision.
BigReal li2_series(const BigReal& y) {
    const long work = y.precision();
    BigReal sum(work);
    BigReal power = y;
    BigReal term(work);
    // Terms shrink at least geometrically with ratio 1/2, so work+16 rounds
    // always suffice; the exponent test usually exits much earlier.
    for (unsigned long k = 1; k <= static_cast<unsigned long>(work) + 16; ++k) {
        mpfr_div_ui(term.raw(), power.raw(), k, MPFR_RNDN);
        mpfr_div_ui(term.raw(), term.raw(), k, MPFR_RNDN);
        sum += term;
        if (term.is_zero()) break;
        if (!sum.is_zero() && term.exponent() < sum.exponent() - work - 8) break;
        power *= y;
    }
    return sum;
}

// x is at working precision and lies in [-1, 1]. Dispatches between the
// series, the reflection Li2(x) = pi^2/6 - ln(x)ln(1-x) - Li2(1-x) for
// x > 1/2, and the Landen transform Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
// for x < -1/2 (which lands the series argument in (1/3, 1/2]).
BigReal li2_dispatch(const BigReal& x) {
    const long work = x.precision();
    const BigReal half = BigReal::pow2(-1, work);
    if (abs(x) <= half) return li2_series(x);
    if (x.sign() > 0) {
        const BigReal one_minus_x = BigReal::of_int(1, work) - x;
        const BigReal pi = BigReal::pi(work);
        return mul_2exp(pi * pi / BigReal::of_int(3, work), -1) -
               log(x) * log(one_minus_x) - li2_series(one_minus_x);
    }
    const BigReal transformed = x / (x - BigReal::of_int(1, work));
    const BigReal log_term = log1p(-x);
    return -li2_series(transformed) - mul_2exp(log_term * log_term, -1);
}

}  // namespace

BigReal li2(const BigReal& x) {
    const long prec = x.precision();
    if (mpfr_cmp_si(x.raw(), -1) < 0 || mpfr_cmp_si(x.raw(), 1) > 0) {
        throw std::domain_error("li2 requires -1 <= x <= 1");
    }
    const long work = prec + guard_bits;
    const BigReal pi = BigReal::pi(work);
    const BigReal pi2_over_6 = pi * pi / BigReal::of_int(6, work);
    if (x.is_zero()) return BigReal(prec);
    if (mpfr_cmp_si(x.raw(), 1) == 0) return pi2_over_6.rounded_to(prec);
    if (mpfr_cmp_si(x.raw(), -1) == 0) {
        return (-mul_2exp(pi2_over_6, -1)).rounded_to(prec);
    }
    return li2_dispatch(x.rounded_to(work)).rounded_to(prec);
}

BigReal rogers(const BigReal& x) {
    const long prec = x.precision();
    if (x.sign() < 0 || mpfr_cmp_si(x.raw(), 1) > 0) {
        throw std::domain_error("rogers requires 0 <= x <= 1");
    }
    if (x.is_zero()) return BigReal(prec);
    const long work = prec + guard_bits;
    if (mpfr_cmp_si(x.raw(), 1) == 0) {
        const BigReal pi = BigReal::pi(work);
        return (pi * pi / BigReal::of_int(6, work)).rounded_to(prec);
    }
    const BigReal xw = x.rounded_to(work);
    const BigReal log_product = log(xw) * log1p(-xw);
    return (li2_dispatch(xw) + mul_2exp(log_product, -1)).rounded_to(prec);
}

}  // namespace orthospec
