#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "orthospec/bigreal.hpp"

namespace orthospec {

// Exact element (a + b*sqrt(d))/c of a real quadratic field, or a rational
// when b = 0. Canonical form: gcd(a, b, c) = 1, c > 0, d squarefree and
// positive, and d = 1 exactly for rationals (sqrt(1) folds into a). Canonical
// tuples are unique per value, so equality is component-wise.
//
// Two values can be combined when they live in the same field or when either
// is rational; mixing two distinct irrational radicands throws.
class QuadNum {
  public:
    QuadNum() : a_(0), b_(0), c_(1), d_(1) {}
    QuadNum(long value) : a_(value), b_(0), c_(1), d_(1) {}
    QuadNum(const mpz_class& value) : a_(value), b_(0), c_(1), d_(1) {}
    QuadNum(const mpq_class& value);
    QuadNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

    // sqrt(n) for n >= 0, e.g. sqrt_int(20) = 2*sqrt(5).
    static QuadNum sqrt_int(const mpz_class& n);
    // Accepts INT, INT/INT, or (INT+INT*sqrt(INT))/INT, whitespace anywhere;
    // the middle sign may be '-'. Throws std::invalid_argument on bad input.
    static QuadNum parse(const std::string& text);

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    bool is_rational() const { return d_ == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    int sign() const;
    mpq_class to_rational() const;  // throws std::domain_error if irrational

    QuadNum operator-() const;
    QuadNum operator+(const QuadNum& rhs) const;
    QuadNum operator-(const QuadNum& rhs) const;
    QuadNum operator*(const QuadNum& rhs) const;
    QuadNum operator/(const QuadNum& rhs) const;  // throws on rhs == 0
    QuadNum& operator+=(const QuadNum& rhs) { return *this = *this + rhs; }
    QuadNum& operator-=(const QuadNum& rhs) { return *this = *this - rhs; }
    QuadNum& operator*=(const QuadNum& rhs) { return *this = *this * rhs; }
    QuadNum& operator/=(const QuadNum& rhs) { return *this = *this / rhs; }

    bool operator==(const QuadNum& rhs) const {
        return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
    }
    bool operator!=(const QuadNum& rhs) const { return !(*this == rhs); }
    bool operator<(const QuadNum& rhs) const;
    bool operator<=(const QuadNum& rhs) const;
    bool operator>(const QuadNum& rhs) const;
    bool operator>=(const QuadNum& rhs) const;

    std::string to_string() const;

  private:
    mpz_class a_, b_, c_, d_;
    void normalize();
};

enum class QuadOp { add, sub, mul, div };
QuadNum quad_arith(const QuadNum& x, const QuadNum& y, QuadOp op);

QuadNum galois_conjugate(const QuadNum& x);  // sqrt(d) -> -sqrt(d)
mpq_class norm(const QuadNum& x);            // x * conj(x)
mpq_class trace(const QuadNum& x);           // x + conj(x)

// Exact three-way comparison; throws std::invalid_argument when the two
// values live in distinct irrational fields (never needed by the catalog).
int compare(const QuadNum& x, const QuadNum& y);

BigReal to_real(const QuadNum& x, long precision);

QuadNum pow(const QuadNum& x, long n);  // negative n inverts first

// Square root within the same field (or Q(sqrt(d)) for rational input),
// when it exists there: nullopt otherwise. Requires x >= 0.
std::optional<QuadNum> exact_sqrt(const QuadNum& x);

// A point of the extended boundary line R u {infinity}; the empty optional is
// the single canonical infinity.
using BoundaryPoint = std::optional<QuadNum>;

inline BoundaryPoint infinity() { return std::nullopt; }
inline bool is_infinite(const BoundaryPoint& p) { return !p.has_value(); }
std::string to_string(const BoundaryPoint& p);

}  // namespace orthospec
