#include <doctest.h>

#include <optional>
#include <random>
#include <stdexcept>

#include "orthospec/bigreal.hpp"
#include "orthospec/quadnum.hpp"

using orthospec::BigReal;
using orthospec::QuadNum;

namespace {

QuadNum golden() { return QuadNum(1, 1, 2, 5); }  // (1 + sqrt 5)/2

}  // namespace

TEST_CASE("constructor canonicalizes its arguments") {
    // Common factor divided out, denominator positive, radicand squarefree.
    CHECK(QuadNum(2, 4, 6, 8) == QuadNum(1, 4, 3, 2));   // sqrt(8) = 2 sqrt(2)
    CHECK(QuadNum(0, 1, 1, 12) == QuadNum(0, 2, 1, 3));  // sqrt(12) = 2 sqrt(3)
    CHECK(QuadNum(1, 2, -3, 5) == QuadNum(-1, -2, 3, 5));
    CHECK(QuadNum(0, 3, 1, 4) == QuadNum(6));            // 3 sqrt(4) = 6
    CHECK(QuadNum(5, 0, 1, 7) == QuadNum(5));            // rationals get d = 1
    CHECK(QuadNum(0, 0, 9, 5).is_zero());
    CHECK(QuadNum(mpq_class(6, -4)) == QuadNum(-3, 0, 2, 1));

    CHECK_THROWS_AS(QuadNum(1, 1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(QuadNum(1, 1, 1, -3), std::invalid_argument);
}

TEST_CASE("sqrt_int") {
    CHECK(QuadNum::sqrt_int(0).is_zero());
    CHECK(QuadNum::sqrt_int(9) == QuadNum(3));
    CHECK(QuadNum::sqrt_int(20) == QuadNum(0, 2, 1, 5));
    CHECK(QuadNum::sqrt_int(5) * QuadNum::sqrt_int(5) == QuadNum(5));
    CHECK_THROWS_AS(QuadNum::sqrt_int(-4), std::domain_error);
}

TEST_CASE("parse accepts the documented grammar") {
    CHECK(QuadNum::parse("42") == QuadNum(42));
    CHECK(QuadNum::parse("-7") == QuadNum(-7));
    CHECK(QuadNum::parse("3/6") == QuadNum(mpq_class(1, 2)));
    CHECK(QuadNum::parse("(1+1*sqrt(5))/2") == golden());
    CHECK(QuadNum::parse("( 3 - 2 * sqrt( 2 ) ) / 1") == QuadNum(3, -2, 1, 2));
    CHECK(QuadNum::parse(" 10 / 4 ") == QuadNum(mpq_class(5, 2)));

    for (const char* bad : {"", "abc", "1/", "(1+sqrt(5))/2", "(1+2*sqrt(5)",
                            "1/0", "(1+2*sqrt(-5))/3", "5 5"}) {
        CHECK_THROWS_AS((void)QuadNum::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("to_string round-trips through parse") {
    for (const QuadNum& x : {QuadNum(0), QuadNum(-17), QuadNum(mpq_class(22, 7)),
                             golden(), QuadNum(-3, 5, 7, 2)}) {
        CHECK(QuadNum::parse(x.to_string()) == x);
    }
    CHECK(orthospec::to_string(orthospec::infinity()) == "inf");
    CHECK(orthospec::to_string(orthospec::BoundaryPoint(QuadNum(3))) == QuadNum(3).to_string());
}

TEST_CASE("field arithmetic") {
    const QuadNum phi = golden();
    // phi^2 = phi + 1 and phi * (phi - 1) = 1 pin down the golden ratio.
    CHECK(phi * phi == phi + QuadNum(1));
    CHECK(phi * (phi - QuadNum(1)) == QuadNum(1));
    CHECK(phi - phi == QuadNum(0));
    CHECK(phi / phi == QuadNum(1));

    const QuadNum x(3, -2, 7, 2);
    CHECK(x + (-x) == QuadNum(0));
    CHECK(x * QuadNum(1) == x);
    CHECK((x / x) == QuadNum(1));
    CHECK(x * QuadNum(mpq_class(2, 3)) / QuadNum(mpq_class(2, 3)) == x);

    // Rationals mix freely with any field; distinct radicands do not.
    CHECK(QuadNum(mpq_class(1, 2)) + QuadNum(0, 1, 1, 3) == QuadNum(1, 2, 2, 3));
    CHECK_THROWS_AS(QuadNum(0, 1, 1, 2) + QuadNum(0, 1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(x / QuadNum(0), std::invalid_argument);
}

TEST_CASE("quad_arith mirrors the operators") {
    using orthospec::QuadOp;
    const QuadNum x(1, 2, 3, 5);
    const QuadNum y(4, -1, 2, 5);
    CHECK(orthospec::quad_arith(x, y, QuadOp::add) == x + y);
    CHECK(orthospec::quad_arith(x, y, QuadOp::sub) == x - y);
    CHECK(orthospec::quad_arith(x, y, QuadOp::mul) == x * y);
    CHECK(orthospec::quad_arith(x, y, QuadOp::div) == x / y);
}

TEST_CASE("conjugate, norm and trace") {
    const QuadNum x(3, 2, 5, 7);
    CHECK(orthospec::galois_conjugate(x) == QuadNum(3, -2, 5, 7));
    CHECK(orthospec::galois_conjugate(QuadNum(4)) == QuadNum(4));

    // norm = (a^2 - b^2 d)/c^2, trace = 2a/c; both are rational.
    CHECK(orthospec::norm(x) == mpq_class(9 - 4 * 7, 25));
    CHECK(orthospec::trace(x) == mpq_class(6, 5));

    // Norm is multiplicative, trace is additive.
    const QuadNum y(-1, 3, 2, 7);
    CHECK(orthospec::norm(x * y) == orthospec::norm(x) * orthospec::norm(y));
    CHECK(orthospec::trace(x + y) == orthospec::trace(x) + orthospec::trace(y));

    // x * conj(x) and x + conj(x) reproduce them as field elements.
    CHECK(x * orthospec::galois_conjugate(x) == QuadNum(orthospec::norm(x)));
    CHECK(x + orthospec::galois_conjugate(x) == QuadNum(orthospec::trace(x)));
}

TEST_CASE("comparisons agree with numeric evaluation") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<long> small(-20, 20);
    std::uniform_int_distribution<long> pos(1, 20);
    const long d = 5;
    for (int i = 0; i < 200; ++i) {
        const QuadNum x(small(gen), small(gen), pos(gen), d);
        const QuadNum y(small(gen), small(gen), pos(gen), d);
        const int cmp = orthospec::compare(x, y);
        const BigReal xr = orthospec::to_real(x, 192);
        const BigReal yr = orthospec::to_real(y, 192);
        if (cmp < 0) CHECK(xr < yr);
        if (cmp > 0) CHECK(xr > yr);
        if (cmp == 0) CHECK(x == y);
        CHECK((x < y) == (cmp < 0));
        CHECK((x >= y) == (cmp >= 0));
        CHECK(x.sign() == orthospec::compare(x, QuadNum(0)));
    }
    CHECK_THROWS_AS(orthospec::compare(QuadNum(0, 1, 1, 2), QuadNum(0, 1, 1, 3)),
                    std::invalid_argument);
}

TEST_CASE("to_real tracks the exact value") {
    const BigReal phi = orthospec::to_real(golden(), 256);
    // phi^2 - phi - 1 = 0 up to rounding.
    CHECK(abs(phi * phi - phi - BigReal::of_int(1, 256)) <= BigReal::pow2(-250, 256));
    CHECK(orthospec::to_real(QuadNum(mpq_class(-3, 4)), 128).to_double() == -0.75);
    CHECK(orthospec::to_real(QuadNum(0), 128).is_zero());
}

TEST_CASE("pow") {
    const QuadNum phi = golden();
    CHECK(orthospec::pow(phi, 0) == QuadNum(1));
    CHECK(orthospec::pow(phi, 1) == phi);
    CHECK(orthospec::pow(phi, 2) == phi * phi);
    CHECK(orthospec::pow(phi, 10) == orthospec::pow(phi, 5) * orthospec::pow(phi, 5));
    CHECK(orthospec::pow(phi, -3) * orthospec::pow(phi, 3) == QuadNum(1));
    // Fibonacci closed form: phi^n = (l_n + f_n sqrt 5)/2.
    CHECK(orthospec::pow(phi, 6) == QuadNum(18, 8, 2, 5));
    CHECK_THROWS_AS(orthospec::pow(QuadNum(0), -1), std::invalid_argument);
}

TEST_CASE("exact_sqrt finds square roots inside the field") {
    using orthospec::exact_sqrt;
    CHECK(exact_sqrt(QuadNum(4)) == QuadNum(2));
    CHECK(exact_sqrt(QuadNum(mpq_class(9, 4))) == QuadNum(mpq_class(3, 2)));
    CHECK(exact_sqrt(QuadNum(2)) == QuadNum(0, 1, 1, 2));
    CHECK(exact_sqrt(QuadNum(0)) == QuadNum(0));
    // (1 + sqrt 2)^2 = 3 + 2 sqrt 2.
    CHECK(exact_sqrt(QuadNum(3, 2, 1, 2)) == QuadNum(1, 1, 1, 2));
    // phi^2 has square root phi.
    CHECK(exact_sqrt(golden() * golden()) == golden());

    // 3 + sqrt 2 is positive but has no square root in Q(sqrt 2).
    CHECK(!exact_sqrt(QuadNum(3, 1, 1, 2)).has_value());
    CHECK(!exact_sqrt(QuadNum(0, 1, 1, 5)).has_value());  // sqrt(sqrt 5)
    CHECK_THROWS_AS((void)exact_sqrt(QuadNum(-1)), std::domain_error);

    // Returned roots are the nonnegative ones and square back exactly.
    for (const QuadNum& x : {QuadNum(7, 4, 1, 3), QuadNum(mpq_class(49, 36))}) {
        auto r = exact_sqrt(x * x);
        REQUIRE(r.has_value());
        CHECK(r->sign() >= 0);
        CHECK(*r * *r == x * x);
    }
}

TEST_CASE("rational helpers") {
    CHECK(QuadNum(mpq_class(10, 15)).to_rational() == mpq_class(2, 3));
    CHECK(golden().is_rational() == false);
    CHECK_THROWS_AS((void)golden().to_rational(), std::domain_error);
    CHECK(orthospec::is_infinite(orthospec::infinity()));
    CHECK(!orthospec::is_infinite(orthospec::BoundaryPoint(QuadNum(0))));
}
