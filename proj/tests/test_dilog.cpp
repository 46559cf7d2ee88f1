#include <doctest.h>
#include <mpfr.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "orthospec/bigreal.hpp"
#include "orthospec/dilog.hpp"

using orthospec::BigReal;
using orthospec::li2;
using orthospec::rogers;

namespace {

// Independent reference: MPFR's own dilogarithm, evaluated with generous
// guard bits. The library's li2 never calls mpfr_li2, so agreement here is
// a real cross-check, not a tautology.
BigReal li2_reference(const BigReal& x, long precision) {
    BigReal wide = x.rounded_to(precision + 48);
    BigReal out(precision + 48);
    mpfr_li2(out.raw(), wide.raw(), MPFR_RNDN);
    return out.rounded_to(precision);
}

BigReal pi2_over(long divisor, long precision) {
    const BigReal pi = BigReal::pi(precision + 16);
    return (pi * pi / BigReal::of_int(divisor, precision + 16)).rounded_to(precision);
}

}  // namespace

TEST_CASE("li2 matches the MPFR reference across the domain") {
    const long prec = 256;
    const BigReal bound = BigReal::pow2(-(prec - 8), prec);
    std::vector<double> args = {-1.0, -0.999, -0.75, -0.5001, -0.5,   -0.4999,
                                -0.25, -0.01, 0.0,   0.01,    0.25,   0.4999,
                                0.5,   0.5001, 0.75, 0.9,     0.9999, 1.0};
    for (double a : args) {
        const BigReal x = BigReal::of(a, prec);
        const BigReal got = li2(x);
        const BigReal want = li2_reference(x, prec + 32);
        CHECK(abs(got - want.rounded_to(prec)) <= bound);
        CHECK(got.precision() == prec);
    }
}

TEST_CASE("li2 honors its stated error bound at several precisions") {
    for (long prec : {128L, 256L, 320L}) {
        const BigReal bound = BigReal::pow2(-(prec - 8), prec);
        std::mt19937_64 gen(2024);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int i = 0; i < 40; ++i) {
            const BigReal x = BigReal::of(dist(gen), prec);
            const BigReal err = li2(x) - li2_reference(x, prec + 64).rounded_to(prec);
            CHECK(abs(err) <= bound);
        }
    }
}

TEST_CASE("li2 closed forms") {
    const long prec = 256;
    const BigReal tol = BigReal::pow2(-(prec - 8), prec);

    CHECK(li2(BigReal(prec)).is_zero());
    CHECK(abs(li2(BigReal::of_int(1, prec)) - pi2_over(6, prec)) <= tol);
    CHECK(abs(li2(BigReal::of_int(-1, prec)) + pi2_over(12, prec)) <= tol);

    // Li2(1/2) = pi^2/12 - ln(2)^2 / 2.
    const BigReal ln2 = log(BigReal::of_int(2, prec + 16));
    const BigReal half_val = pi2_over(12, prec + 16) -
                             orthospec::mul_2exp(ln2 * ln2, -1).rounded_to(prec + 16);
    CHECK(abs(li2(BigReal::of_rational(mpq_class(1, 2), prec)) -
              half_val.rounded_to(prec)) <= tol);
}

TEST_CASE("li2 rejects arguments outside [-1, 1]") {
    CHECK_THROWS_AS((void)li2(BigReal::of(1.0000001, 128)), std::domain_error);
    CHECK_THROWS_AS((void)li2(BigReal::of(-1.0000001, 128)), std::domain_error);
    CHECK_THROWS_AS((void)li2(BigReal::of_int(2, 128)), std::domain_error);
    CHECK_THROWS_AS((void)li2(BigReal::of_int(-5, 128)), std::domain_error);
}

TEST_CASE("rogers closed forms") {
    const long prec = 256;
    const BigReal tol = BigReal::pow2(-(prec - 8), prec);

    CHECK(rogers(BigReal(prec)).is_zero());
    CHECK(abs(rogers(BigReal::of_int(1, prec)) - pi2_over(6, prec)) <= tol);
    CHECK(abs(rogers(BigReal::of_rational(mpq_class(1, 2), prec)) -
              pi2_over(12, prec)) <= tol);

    // L(1/phi) = pi^2/10 and L(1/phi^2) = pi^2/15, with
    // 1/phi = (sqrt 5 - 1)/2 and 1/phi^2 = (3 - sqrt 5)/2.
    const long wide = prec + 16;
    const BigReal root5 = sqrt(BigReal::of_int(5, wide));
    const BigReal inv_phi =
        orthospec::mul_2exp(root5 - BigReal::of_int(1, wide), -1).rounded_to(prec);
    const BigReal inv_phi2 =
        orthospec::mul_2exp(BigReal::of_int(3, wide) - root5, -1).rounded_to(prec);
    CHECK(abs(rogers(inv_phi) - pi2_over(10, prec)) <= tol);
    CHECK(abs(rogers(inv_phi2) - pi2_over(15, prec)) <= tol);
}

TEST_CASE("rogers rejects arguments outside [0, 1]") {
    CHECK_THROWS_AS((void)rogers(BigReal::of(-0.1, 128)), std::domain_error);
    CHECK_THROWS_AS((void)rogers(BigReal::of(1.0000001, 128)), std::domain_error);
    CHECK_THROWS_AS((void)rogers(BigReal::of_int(-1, 128)), std::domain_error);
}

TEST_CASE("rogers reflection L(x) + L(1-x) = pi^2/6 on random points") {
    const long prec = 256;
    const BigReal target = pi2_over(6, prec);
    const BigReal tol = BigReal::pow2(-240, prec);
    std::mt19937_64 gen(777);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double a = dist(gen);
        if (a == 0.0) a = 0.5;
        const BigReal x = BigReal::of(a, prec);
        const BigReal sum = rogers(x) + rogers(BigReal::of_int(1, prec) - x);
        CHECK(abs(sum - target) <= tol);
    }
}

TEST_CASE("rogers agrees with li2 plus the log correction") {
    const long prec = 256;
    const BigReal tol = BigReal::pow2(-(prec - 10), prec);
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        const BigReal x = BigReal::of(a, prec + 32);
        const BigReal direct =
            li2(x) + orthospec::mul_2exp(log(x) * log(BigReal::of_int(1, prec + 32) - x), -1);
        CHECK(abs(rogers(x.rounded_to(prec)) - direct.rounded_to(prec)) <= tol);
    }
}
