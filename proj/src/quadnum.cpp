#include "orthospec/quadnum.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace orthospec {

namespace {

// Splits n > 0 as scale^2 * core with core squarefree, by trial division.
// A remainder that is itself a perfect square (all factors above the trial
// bound) is still extracted; remainders below 10^12 are provably squarefree
// at that point. The radicands appearing here are small in practice.
void extract_square(mpz_class n, mpz_class& scale, mpz_class& core) {
    scale = 1;
    for (unsigned long p = 2; p <= 1000000; ++p) {
        mpz_class p2 = mpz_class(p) * p;
        if (p2 > n) break;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p2.get_mpz_t());
            scale *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        scale *= root;
        n = 1;
    }
    core = n;
}

mpz_class common_radicand(const QuadNum& x, const QuadNum& y) {
    if (x.d() == y.d()) return x.d();
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    throw std::invalid_argument("QuadNum: cannot combine sqrt(" + x.d().get_str() +
                                ") with sqrt(" + y.d().get_str() + ")");
}

std::optional<mpq_class> rational_sqrt(const mpq_class& r) {
    if (r < 0) return std::nullopt;
    mpq_class canon = r;
    canon.canonicalize();
    if (!mpz_perfect_square_p(canon.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(canon.get_den().get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), canon.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), canon.get_den().get_mpz_t());
    mpq_class root(num, den);
    root.canonicalize();
    return root;
}

QuadNum from_rational_pair(const mpq_class& p, const mpq_class& q, const mpz_class& d) {
    // p + q*sqrt(d) over a common denominator.
    mpq_class pc = p, qc = q;
    pc.canonicalize();
    qc.canonicalize();
    mpz_class denom;
    mpz_lcm(denom.get_mpz_t(), pc.get_den().get_mpz_t(), qc.get_den().get_mpz_t());
    mpz_class a = pc.get_num() * (denom / pc.get_den());
    mpz_class b = qc.get_num() * (denom / qc.get_den());
    return QuadNum(a, b, denom, d);
}

struct Scanner {
    std::string text;
    size_t pos = 0;

    explicit Scanner(const std::string& raw) {
        // Whitespace may surround tokens but must not split a number in two.
        bool gap = false;
        for (char ch : raw) {
            if (std::isspace(static_cast<unsigned char>(ch))) {
                gap = true;
                continue;
            }
            if (gap && !text.empty() && std::isdigit(static_cast<unsigned char>(text.back())) &&
                std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("QuadNum: whitespace splits a number in literal");
            }
            gap = false;
            text.push_back(ch);
        }
    }
    bool done() const { return pos >= text.size(); }
    bool eat(char ch) {
        if (!done() && text[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(const std::string& token) {
        if (text.compare(pos, token.size(), token) != 0) {
            throw std::invalid_argument("QuadNum: expected '" + token + "' in surd literal");
        }
        pos += token.size();
    }
    mpz_class integer() {
        size_t start = pos;
        if (!done() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("QuadNum: expected integer in literal");
        return mpz_class(text.substr(start, pos - start), 10);
    }
};

}  // namespace

QuadNum::QuadNum(const mpq_class& value)
    : a_(value.get_num()), b_(0), c_(value.get_den()), d_(1) {
    normalize();
}

QuadNum::QuadNum(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    normalize();
}

void QuadNum::normalize() {
    if (c_ == 0) throw std::invalid_argument("QuadNum: zero denominator");
    if (d_ < 0) throw std::invalid_argument("QuadNum: negative radicand");
    if (d_ == 0) {
        b_ = 0;
        d_ = 1;
    }
    if (b_ == 0) d_ = 1;
    if (d_ > 1) {
        mpz_class scale, core;
        extract_square(d_, scale, core);
        if (scale != 1) {
            b_ *= scale;
            d_ = core;
        }
    }
    if (d_ == 1 && b_ != 0) {
        a_ += b_;
        b_ = 0;
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    mpz_class g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
    }
}

QuadNum QuadNum::sqrt_int(const mpz_class& n) {
    if (n < 0) throw std::domain_error("sqrt_int of negative integer");
    return QuadNum(0, 1, 1, n);
}

int QuadNum::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    mpz_class lhs = a_ * a_;
    mpz_class rhs = b_ * b_ * d_;
    int order = cmp(lhs, rhs);
    if (order == 0) return 0;  // unreachable for squarefree d > 1
    return order > 0 ? sa : sb;
}

mpq_class QuadNum::to_rational() const {
    if (!is_rational()) {
        throw std::domain_error("QuadNum: " + to_string() + " is irrational");
    }
    mpq_class r(a_, c_);
    r.canonicalize();
    return r;
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, c_, d_); }

QuadNum QuadNum::operator+(const QuadNum& rhs) const {
    mpz_class d = common_radicand(*this, rhs);
    return QuadNum(a_ * rhs.c_ + rhs.a_ * c_, b_ * rhs.c_ + rhs.b_ * c_, c_ * rhs.c_, d);
}

QuadNum QuadNum::operator-(const QuadNum& rhs) const { return *this + (-rhs); }

QuadNum QuadNum::operator*(const QuadNum& rhs) const {
    mpz_class d = common_radicand(*this, rhs);
    return QuadNum(a_ * rhs.a_ + b_ * rhs.b_ * d, a_ * rhs.b_ + b_ * rhs.a_, c_ * rhs.c_, d);
}

QuadNum QuadNum::operator/(const QuadNum& rhs) const {
    if (rhs.is_zero()) throw std::invalid_argument("QuadNum: division by zero");
    mpz_class d = common_radicand(*this, rhs);
    // 1/((a+b sqrt d)/c) = c(a - b sqrt d)/(a^2 - b^2 d)
    QuadNum inverse(rhs.c_ * rhs.a_, -(rhs.c_ * rhs.b_), rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * d,
                    d);
    return *this * inverse;
}

bool QuadNum::operator<(const QuadNum& rhs) const { return compare(*this, rhs) < 0; }
bool QuadNum::operator<=(const QuadNum& rhs) const { return compare(*this, rhs) <= 0; }
bool QuadNum::operator>(const QuadNum& rhs) const { return compare(*this, rhs) > 0; }
bool QuadNum::operator>=(const QuadNum& rhs) const { return compare(*this, rhs) >= 0; }

std::string QuadNum::to_string() const {
    if (is_rational()) {
        if (c_ == 1) return a_.get_str();
        return a_.get_str() + "/" + c_.get_str();
    }
    std::string middle = b_ < 0 ? "-" + mpz_class(-b_).get_str() : "+" + b_.get_str();
    return "(" + a_.get_str() + middle + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
}

QuadNum QuadNum::parse(const std::string& text) {
    Scanner sc(text);
    QuadNum result;
    if (sc.eat('(')) {
        mpz_class a = sc.integer();
        int middle_sign;
        if (sc.eat('+')) {
            middle_sign = 1;
        } else if (sc.eat('-')) {
            middle_sign = -1;
        } else {
            throw std::invalid_argument("QuadNum: expected '+' or '-' in surd literal");
        }
        mpz_class b = sc.integer() * middle_sign;
        sc.expect("*sqrt(");
        mpz_class d = sc.integer();
        sc.expect("))");
        sc.expect("/");
        mpz_class c = sc.integer();
        result = QuadNum(a, b, c, d);
    } else {
        mpz_class a = sc.integer();
        mpz_class c = 1;
        if (sc.eat('/')) c = sc.integer();
        result = QuadNum(a, 0, c, 1);
    }
    if (!sc.done()) {
        throw std::invalid_argument("QuadNum: trailing characters in literal '" + text + "'");
    }
    return result;
}

QuadNum quad_arith(const QuadNum& x, const QuadNum& y, QuadOp op) {
    switch (op) {
        case QuadOp::add: return x + y;
        case QuadOp::sub: return x - y;
        case QuadOp::mul: return x * y;
        case QuadOp::div: return x / y;
    }
    throw std::invalid_argument("quad_arith: unknown operation");
}

QuadNum galois_conjugate(const QuadNum& x) {
    return QuadNum(x.a(), -x.b(), x.c(), x.d());
}

mpq_class norm(const QuadNum& x) {
    mpq_class r(x.a() * x.a() - x.b() * x.b() * x.d(), x.c() * x.c());
    r.canonicalize();
    return r;
}

mpq_class trace(const QuadNum& x) {
    mpq_class r(2 * x.a(), x.c());
    r.canonicalize();
    return r;
}

int compare(const QuadNum& x, const QuadNum& y) { return (x - y).sign(); }

BigReal to_real(const QuadNum& x, long precision) {
    const long work = precision + 8;
    BigReal value = BigReal::of_int(x.a(), work);
    if (x.b() != 0) {
        value += BigReal::of_int(x.b(), work) * sqrt(BigReal::of_int(x.d(), work));
    }
    return (value / BigReal::of_int(x.c(), work)).rounded_to(precision);
}

QuadNum pow(const QuadNum& x, long n) {
    if (n < 0) return pow(QuadNum(1) / x, -n);
    QuadNum result(1);
    QuadNum base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::optional<QuadNum> exact_sqrt(const QuadNum& x) {
    if (x.sign() < 0) throw std::domain_error("exact_sqrt of negative value");
    if (x.is_zero()) return QuadNum();
    if (x.is_rational()) {
        // sqrt(a/c) = sqrt(a*c)/c; the constructor splits off the square part.
        return QuadNum(0, 1, x.c(), x.a() * x.c());
    }
    // Seek y = P + Q sqrt(d) with rational P, Q. From y^2 = x: P^2 + Q^2 d and
    // 2PQ are the rational and surd parts of x, so P^2 and Q^2 d are roots of
    // a rational quadratic whose discriminant is norm(x); that norm must be a
    // rational square, and so must the candidate P^2.
    mpq_class rational_part(x.a(), x.c());
    mpq_class surd_part(x.b(), x.c());
    rational_part.canonicalize();
    surd_part.canonicalize();
    auto m = rational_sqrt(norm(x));
    if (!m) return std::nullopt;
    for (int pick : {1, -1}) {
        mpq_class p_squared = (rational_part + pick * *m) / 2;
        auto p = rational_sqrt(p_squared);
        if (!p || *p == 0) continue;
        mpq_class q = surd_part / (2 * *p);
        QuadNum candidate = from_rational_pair(*p, q, x.d());
        if (candidate.sign() < 0) candidate = -candidate;
        if (candidate * candidate == x) return candidate;
    }
    return std::nullopt;
}

std::string to_string(const BoundaryPoint& p) {
    return is_infinite(p) ? "inf" : p->to_string();
}

}  // namespace orthospec
