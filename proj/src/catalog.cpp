#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "orthospec/contfrac.hpp"
#include "orthospec/identities.hpp"
#include "orthospec/sequences.hpp"

namespace orthospec {

namespace {

using Params = std::map<std::string, std::string>;
using Rec = std::shared_ptr<const Recurrence2>;

// ---------------------------------------------------------------------------
// Parameter plumbing
// ---------------------------------------------------------------------------

std::string lookup(const Params& given, const ParamSpec& decl) {
    auto it = given.find(decl.name);
    return it == given.end() ? decl.default_value : it->second;
}

void reject_unknown(const Params& given, const std::vector<ParamSpec>& specs) {
    for (const auto& entry : given) {
        bool known = std::any_of(specs.begin(), specs.end(),
                                 [&](const ParamSpec& s) { return s.name == entry.first; });
        if (!known) throw std::invalid_argument("unknown parameter '" + entry.first + "'");
    }
}

long parse_long(const std::string& text, const std::string& name) {
    long value = 0;
    const char* end = text.data() + text.size();
    auto result = std::from_chars(text.data(), end, value);
    if (result.ec != std::errc() || result.ptr != end)
        throw std::invalid_argument("parameter " + name + ": '" + text + "' is not an integer");
    return value;
}

QuadNum parse_surd(const std::string& text, const std::string& name) {
    try {
        return QuadNum::parse(text);
    } catch (const std::invalid_argument& error) {
        throw std::invalid_argument("parameter " + name + ": " + error.what());
    }
}

std::vector<long> parse_long_list(const std::string& text, const std::string& name) {
    std::vector<long> out;
    std::stringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ',')) out.push_back(parse_long(piece, name));
    if (out.empty()) throw std::invalid_argument("parameter " + name + " must be a nonempty list");
    return out;
}

std::vector<QuadNum> parse_surd_list(const std::string& text, const std::string& name) {
    std::vector<QuadNum> out;
    std::stringstream pieces(text);
    std::string piece;
    while (std::getline(pieces, piece, ',')) out.push_back(parse_surd(piece, name));
    if (out.empty()) throw std::invalid_argument("parameter " + name + " must be a nonempty list");
    return out;
}

std::string canonical(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty()) out += ',';
        out += key;
        out += '=';
        out += value;
    }
    return out;
}

void require_min(long value, long bound, const std::string& name) {
    if (value < bound)
        throw std::invalid_argument("parameter " + name + " must be at least " + std::to_string(bound));
}

void require_above_two(const QuadNum& value, const std::string& name) {
    if (!(value > QuadNum(2))) throw std::invalid_argument("parameter " + name + " must exceed 2");
}

// ---------------------------------------------------------------------------
// Shared arithmetic helpers
// ---------------------------------------------------------------------------

QuadNum rat(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return QuadNum(q);
}

QuadNum sq(const QuadNum& x) { return x * x; }

QuadNum inv(const QuadNum& x) { return QuadNum(1) / x; }

QuadNum golden() { return QuadNum(1, 1, 2, 5); }

// 1/phi^m as an exact element of Q(sqrt 5).
QuadNum golden_inv_pow(long m) { return pow(golden(), -m); }

// ((t - sqrt(t^2-4))/2)^2, the square of the repelling multiplier of a
// trace-t hyperbolic element; equals 1/u^2 for the expanding eigenvalue u.
QuadNum inverse_multiplier_sq(const QuadNum& t) {
    std::optional<QuadNum> root = exact_sqrt(t * t - QuadNum(4));
    if (!root)
        throw std::invalid_argument("t^2 - 4 has no square root in the coefficient field of t");
    return sq((t - *root) / QuadNum(2));
}

Rec make_rec(const QuadNum& coeff1, const QuadNum& coeff0, const QuadNum& seed0,
             const QuadNum& seed1) {
    return std::make_shared<const Recurrence2>(coeff1, coeff0, seed0, seed1);
}

// The trace recurrence q_0 = 1, q_1 = t, q_n = t q_{n-1} - q_{n-2}.
Rec trace_rec(const QuadNum& t) { return make_rec(t, QuadNum(-1), QuadNum(1), t); }

SeriesSpec stream(std::string label, long start, std::function<QuadNum(long)> arg) {
    SeriesSpec s;
    s.label = std::move(label);
    s.start = start;
    s.arg = std::move(arg);
    return s;
}

RhsSpec rhs_pi2(long num, long den) {
    RhsSpec rhs;
    rhs.pi2_coefficient = mpq_class(num, den);
    rhs.pi2_coefficient.canonicalize();
    return rhs;
}

RhsSpec rhs_rogers(QuadNum argument) {
    RhsSpec rhs;
    rhs.rogers_terms.push_back({std::move(argument), 1});
    return rhs;
}

// ---------------------------------------------------------------------------
// Alignment tables shared between entries
// ---------------------------------------------------------------------------

// Doubled quadrilateral with vertices {1, t-1, t, oo}: the two pure streams
// both repeat the square series, the two mixed streams and the isolated term
// repeat the product series (index 1), the latter covering term 0 twice.
CrossValidationSpec cross_double_crown_i(const QuadNum& t) {
    CrossValidationSpec cv;
    cv.model = ModelKind::double_crown_i;
    cv.make_pair = [t] { return make_double_crown_i(t); };
    cv.families = {{0, 0}, {0, 0}, {1, 1}, {1, 0}};
    cv.finite = {{FiniteAlignment::series_term, 1, 0}};
    return cv;
}

// Single crown: one stream, and the waist term is the reflection 1 - x of
// the right-hand side argument x.
CrossValidationSpec cross_crown_i(const QuadNum& t) {
    CrossValidationSpec cv;
    cv.model = ModelKind::crown_i;
    cv.make_pair = [t] { return make_crown_i(t); };
    cv.families = {{0, 0}};
    cv.finite = {{FiniteAlignment::rhs_reflection, 0, 0}};
    return cv;
}

CrossValidationSpec cross_crown_ii(const Mobius& transform) {
    CrossValidationSpec cv;
    cv.model = ModelKind::crown_ii;
    cv.make_pair = [transform] { return make_crown_ii(transform); };
    cv.families = {{0, 0}};
    cv.finite = {{FiniteAlignment::rhs_reflection, 0, 0}};
    return cv;
}

// ---------------------------------------------------------------------------
// Catalog entries
// ---------------------------------------------------------------------------

IdentityTemplate entry_prop_4_1() {
    IdentityTemplate tpl;
    tpl.id = "prop-4.1";
    tpl.description =
        "doubled quadrilateral identity for the trace recurrence q: square stream from n=2 plus "
        "product stream from n=0 sum to pi^2/6";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Rec q = trace_rec(t);
        Identity ident;
        ident.id = "prop-4.1";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        ident.series.push_back(
            stream("1/q(n-1)^2", 2, [q](long n) { return inv(sq(q->term(n - 1))); }));
        ident.series.push_back(stream("(t-2)/(p(n+1)p(n-1))", 0, [q, t](long n) {
            QuadNum up = q->term(n + 1) - q->term(n);
            QuadNum down = q->term(n - 1) - q->term(n - 2);
            return (t - QuadNum(2)) / (up * down);
        }));
        ident.rhs = rhs_pi2(1, 6);
        ident.cross = cross_double_crown_i(t);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_4_7() {
    IdentityTemplate tpl;
    tpl.id = "eq-4.7";
    tpl.description = "Fibonacci form of the doubled quadrilateral identity at trace 3";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-4.7";
        ident.description = desc;
        ident.series.push_back(stream("1/f(2k+2)^2", 1, [](long k) {
            mpz_class f = fibonacci(2 * k + 2);
            return rat(1, f * f);
        }));
        ident.series.push_back(stream("1/(f(2k-3)f(2k+1))", 1, [](long k) {
            return rat(1, fibonacci(2 * k - 3) * fibonacci(2 * k + 1));
        }));
        ident.rhs = rhs_pi2(1, 6);
        ident.cross = cross_double_crown_i(QuadNum(3));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_4_8() {
    IdentityTemplate tpl;
    tpl.id = "eq-4.8";
    tpl.description = "Fibonacci/Lucas form of the doubled quadrilateral identity at trace 7";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-4.8";
        ident.description = desc;
        ident.series.push_back(stream("9/f(4k)^2", 2, [](long k) {
            mpz_class f = fibonacci(4 * k);
            return rat(9, f * f);
        }));
        ident.series.push_back(stream("45/(l(4k-2)l(4k+6))", 0, [](long k) {
            return rat(45, lucas(4 * k - 2) * lucas(4 * k + 6));
        }));
        ident.rhs = rhs_pi2(1, 6);
        ident.cross = cross_double_crown_i(QuadNum(7));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_2() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.2";
    tpl.description = "single crown identity: the square stream from n=2 sums to the Rogers value "
                      "of the squared inverse multiplier";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Rec q = trace_rec(t);
        Identity ident;
        ident.id = "eq-5.2";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        ident.series.push_back(
            stream("1/q(n-1)^2", 2, [q](long n) { return inv(sq(q->term(n - 1))); }));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(t));
        ident.cross = cross_crown_i(t);
        return ident;
    };
    return tpl;
}

// The two halves of the split crown identity, and their combination.
void add_square_stream(Identity& ident, const Rec& q) {
    ident.series.push_back(stream("1/q(n)^2", 1, [q](long n) { return inv(sq(q->term(n))); }));
}

void add_difference_stream(Identity& ident, const Rec& q, const QuadNum& t) {
    ident.series.push_back(
        stream("(t-2)/((q(n)-q(n-1))(q(n-2)-q(n-3)))", 1, [q, t](long n) {
            QuadNum up = q->term(n) - q->term(n - 1);
            QuadNum down = q->term(n - 2) - q->term(n - 3);
            return (t - QuadNum(2)) / (up * down);
        }));
}

IdentityTemplate entry_eq_5_3() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.3";
    tpl.description = "both split crown streams together, summing to pi^2/6";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Rec q = trace_rec(t);
        Identity ident;
        ident.id = "eq-5.3";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        add_square_stream(ident, q);
        add_difference_stream(ident, q, t);
        ident.rhs = rhs_pi2(1, 6);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_3a() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.3a";
    tpl.description = "square stream from n=1; the Rogers value of the squared inverse multiplier";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Identity ident;
        ident.id = "eq-5.3a";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        add_square_stream(ident, trace_rec(t));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(t));
        ident.cross = cross_crown_i(t);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_3b() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.3b";
    tpl.description = "difference-product stream from n=1; the reflected Rogers value";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Identity ident;
        ident.id = "eq-5.3b";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        add_difference_stream(ident, trace_rec(t), t);
        ident.rhs = rhs_rogers(QuadNum(1) - inverse_multiplier_sq(t));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_4() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.4";
    tpl.description = "hyperbolic-sine form of the crown identity; terms evaluated numerically, "
                      "term k equals the k-th square-stream term exactly";
    tpl.params = {{"t", "3", "trace, > 2; the waist length is 2 arccosh(t/2)"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Identity ident;
        ident.id = "eq-5.4";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        SeriesSpec s;
        s.label = "(sinh(L/2)/sinh(kL/2))^2";
        s.start = 2;
        s.arg_numeric = [t](long k, long precision) {
            const long work = precision + 16;
            BigReal half_length = acosh(to_real(t, work) / BigReal::of_int(2, work));
            BigReal ratio = sinh(half_length) / sinh(BigReal::of_int(k, work) * half_length);
            return (ratio * ratio).rounded_to(precision);
        };
        ident.series.push_back(std::move(s));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(t));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_7() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.7";
    tpl.description = "crown identity rewritten through the companion recurrence v(-1)=2, v(0)=t";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Rec v = make_rec(t, QuadNum(-1), t, t * t - QuadNum(2));
        QuadNum gap = t * t - QuadNum(4);
        Identity ident;
        ident.id = "eq-5.7";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        ident.series.push_back(stream("((t^2-4)/(v(n)-v(n-2)))^2", 2, [v, gap](long n) {
            return sq(gap / (v->term(n) - v->term(n - 2)));
        }));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(t));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_8a() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.8a";
    tpl.description = "even-index Fibonacci squares from k=2; the Rogers value of 1/phi^4";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-5.8a";
        ident.description = desc;
        ident.series.push_back(stream("1/f(2k)^2", 2, [](long k) {
            mpz_class f = fibonacci(2 * k);
            return rat(1, f * f);
        }));
        ident.rhs = rhs_rogers(golden_inv_pow(4));
        ident.cross = cross_crown_i(QuadNum(3));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_8b() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.8b";
    tpl.description = "Fibonacci products from k=1; the Rogers value of 1 - 1/phi^4";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-5.8b";
        ident.description = desc;
        ident.series.push_back(stream("1/(f(2k-3)f(2k+1))", 1, [](long k) {
            return rat(1, fibonacci(2 * k - 3) * fibonacci(2 * k + 1));
        }));
        ident.rhs = rhs_rogers(QuadNum(1) - golden_inv_pow(4));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_9a() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.9a";
    tpl.description = "Fibonacci multiples-of-four squares from k=2; the Rogers value of 1/phi^8";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-5.9a";
        ident.description = desc;
        ident.series.push_back(stream("9/f(4k)^2", 2, [](long k) {
            mpz_class f = fibonacci(4 * k);
            return rat(9, f * f);
        }));
        ident.rhs = rhs_rogers(golden_inv_pow(8));
        ident.cross = cross_crown_i(QuadNum(7));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_9b() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.9b";
    tpl.description = "Lucas products from k=0; the Rogers value of 1 - 1/phi^8";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-5.9b";
        ident.description = desc;
        ident.series.push_back(stream("45/(l(4k-2)l(4k+6))", 0, [](long k) {
            return rat(45, lucas(4 * k - 2) * lucas(4 * k + 6));
        }));
        ident.rhs = rhs_rogers(QuadNum(1) - golden_inv_pow(8));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_5_10() {
    IdentityTemplate tpl;
    tpl.id = "eq-5.10";
    tpl.description = "Fibonacci and Lucas streams for the Rogers value of 1/phi^2";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-5.10";
        ident.description = desc;
        ident.series.push_back(stream("1/(5f(2n)^2)", 1, [](long n) {
            mpz_class f = fibonacci(2 * n);
            return rat(1, 5 * f * f);
        }));
        ident.series.push_back(stream("1/l(2n-1)^2", 2, [](long n) {
            mpz_class l = lucas(2 * n - 1);
            return rat(1, l * l);
        }));
        ident.rhs = rhs_rogers(golden_inv_pow(2));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_6_2() {
    IdentityTemplate tpl;
    tpl.id = "eq-6.2";
    tpl.description = "non-integer trace t = a^2/b + 2 through the weighted convergent sums D(n)";
    tpl.params = {{"a", "2", "recurrence coefficient, integer >= 1"},
                  {"b", "3", "recurrence coefficient, integer >= 1"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long a = parse_long(lookup(given, specs[0]), "a");
        long b = parse_long(lookup(given, specs[1]), "b");
        require_min(a, 1, "a");
        require_min(b, 1, "b");
        Rec p = make_rec(QuadNum(a), QuadNum(b), QuadNum(a), QuadNum(a * a + b));
        Identity ident;
        ident.id = "eq-6.2";
        ident.description = desc;
        ident.params = canonical({{"a", std::to_string(a)}, {"b", std::to_string(b)}});
        ident.series.push_back(stream("(b^n/D(n))^2", 1, [p, b](long n) {
            QuadNum weighted_sum(0);
            mpz_class bpow = 1;
            for (long i = 0; i <= n; ++i) {
                weighted_sum += QuadNum(bpow) * p->term(2 * n - 1 - 2 * i);
                bpow *= b;
            }
            mpz_class bn;
            mpz_pow_ui(bn.get_mpz_t(), mpz_class(b).get_mpz_t(), static_cast<unsigned long>(n));
            return sq(QuadNum(bn) / weighted_sum);
        }));
        QuadNum t = rat(a * a + 2 * b, b);
        ident.rhs = rhs_rogers(inverse_multiplier_sq(t));
        ident.cross = cross_crown_i(t);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_6_4() {
    IdentityTemplate tpl;
    tpl.id = "eq-6.4";
    tpl.description = "base-9 geometric-sum squares for the Rogers value of 1/9";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-6.4";
        ident.description = desc;
        ident.series.push_back(stream("9^k/((9^(k+1)-1)/8)^2", 1, [](long k) {
            mpz_class nine_k;
            mpz_pow_ui(nine_k.get_mpz_t(), mpz_class(9).get_mpz_t(), static_cast<unsigned long>(k));
            mpz_class geo = (nine_k * 9 - 1) / 8;
            return rat(nine_k, geo * geo);
        }));
        ident.rhs = rhs_rogers(rat(1, 9));
        ident.cross = cross_crown_i(rat(10, 3));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_7_1() {
    IdentityTemplate tpl;
    tpl.id = "eq-7.1";
    tpl.description = "geometric-sum squares in base n for the Rogers value of 1/n";
    tpl.params = {{"n", "2", "base, integer >= 2"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long n = parse_long(lookup(given, specs[0]), "n");
        require_min(n, 2, "n");
        Identity ident;
        ident.id = "eq-7.1";
        ident.description = desc;
        ident.params = canonical({{"n", std::to_string(n)}});
        ident.series.push_back(stream("n^k/(n^k+...+n+1)^2", 1, [n](long k) {
            mpz_class base_k;
            mpz_pow_ui(base_k.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
            mpz_class geo = (base_k * n - 1) / (n - 1);
            return rat(base_k, geo * geo);
        }));
        ident.rhs = rhs_rogers(rat(1, n));
        // t = sqrt(n) + 1/sqrt(n) = (n+1)/sqrt(n), the trace with multiplier n.
        ident.cross = cross_crown_i(QuadNum(0, n + 1, n, n));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_7_3a() {
    IdentityTemplate tpl;
    tpl.id = "eq-7.3a";
    tpl.description = "Chebyshev-denominator squares; the Rogers value of (x - sqrt(x^2-1))^2";
    tpl.params = {{"x", "2", "half-trace, > 1; x^2-1 must have a square root in the field of x"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum x = parse_surd(lookup(given, specs[0]), "x");
        if (!(x > QuadNum(1))) throw std::invalid_argument("parameter x must exceed 1");
        Rec u = make_rec(QuadNum(2) * x, QuadNum(-1), QuadNum(1), QuadNum(2) * x);
        Identity ident;
        ident.id = "eq-7.3a";
        ident.description = desc;
        ident.params = canonical({{"x", x.to_string()}});
        ident.series.push_back(stream("1/U(n)^2", 1, [u](long n) { return inv(sq(u->term(n))); }));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(QuadNum(2) * x));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_7_3b() {
    IdentityTemplate tpl;
    tpl.id = "eq-7.3b";
    tpl.description = "Chebyshev difference products; the reflected Rogers value";
    tpl.params = {{"x", "2", "half-trace, > 1; x^2-1 must have a square root in the field of x"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum x = parse_surd(lookup(given, specs[0]), "x");
        if (!(x > QuadNum(1))) throw std::invalid_argument("parameter x must exceed 1");
        Rec u = make_rec(QuadNum(2) * x, QuadNum(-1), QuadNum(1), QuadNum(2) * x);
        QuadNum top = QuadNum(2) * x - QuadNum(2);
        Identity ident;
        ident.id = "eq-7.3b";
        ident.description = desc;
        ident.params = canonical({{"x", x.to_string()}});
        ident.series.push_back(
            stream("(2x-2)/((U(n)-U(n-1))(U(n-2)-U(n-3)))", 1, [u, top](long n) {
                QuadNum up = u->term(n) - u->term(n - 1);
                QuadNum down = u->term(n - 2) - u->term(n - 3);
                return top / (up * down);
            }));
        ident.rhs = rhs_rogers(QuadNum(1) - inverse_multiplier_sq(QuadNum(2) * x));
        return ident;
    };
    return tpl;
}

// Shared scaffolding for the positive-matrix entries: the transform has
// matrix [[a, c], [b, d]] acting by x -> (a x + c)/(b x + d), determinant
// a d - c b = 1, trace t = a + d > 2. Odd/even diagonals of the p and q
// convergent rows each satisfy the step-two trace recurrence.
struct MatrixStreams {
    long a, b, c, d;
    Rec p_odd;   // p(n) = p_{2n-1}: 1, a, ...
    Rec p_even;  // p(n) = p_{2n-2}: 0, c, ...
    Rec q_odd;   // q(n) = q_{2n-1}: 0, b, ...
    Rec q_even;  // q(n) = q_{2n-2}: 1, d, ...
};

MatrixStreams matrix_streams(const Params& given, const std::vector<ParamSpec>& specs) {
    MatrixStreams ms;
    ms.a = parse_long(lookup(given, specs[0]), "a");
    ms.b = parse_long(lookup(given, specs[1]), "b");
    ms.c = parse_long(lookup(given, specs[2]), "c");
    ms.d = parse_long(lookup(given, specs[3]), "d");
    require_min(ms.a, 1, "a");
    require_min(ms.b, 1, "b");
    require_min(ms.c, 1, "c");
    require_min(ms.d, 1, "d");
    if (ms.a * ms.d - ms.c * ms.b != 1)
        throw std::invalid_argument("the matrix must have determinant a*d - c*b = 1");
    if (ms.a + ms.d <= 2) throw std::invalid_argument("the trace a + d must exceed 2");
    QuadNum t(ms.a + ms.d);
    QuadNum minus_one(-1);
    ms.p_odd = make_rec(t, minus_one, QuadNum(1), QuadNum(ms.a));
    ms.p_even = make_rec(t, minus_one, QuadNum(0), QuadNum(ms.c));
    ms.q_odd = make_rec(t, minus_one, QuadNum(0), QuadNum(ms.b));
    ms.q_even = make_rec(t, minus_one, QuadNum(1), QuadNum(ms.d));
    return ms;
}

std::vector<ParamSpec> matrix_params() {
    return {{"a", "2", "top-left entry, integer >= 1"},
            {"b", "1", "bottom-left entry, integer >= 1"},
            {"c", "1", "top-right entry, integer >= 1"},
            {"d", "1", "bottom-right entry, integer >= 1"}};
}

std::string matrix_canonical(const MatrixStreams& ms) {
    return canonical({{"a", std::to_string(ms.a)},
                      {"b", std::to_string(ms.b)},
                      {"c", std::to_string(ms.c)},
                      {"d", std::to_string(ms.d)}});
}

SeriesSpec stream_q_odd(const MatrixStreams& ms) {
    Rec q = ms.q_odd;
    long b = ms.b;
    return stream("(b/q(2n-1))^2", 2, [q, b](long n) { return sq(QuadNum(b) / q->term(n)); });
}

SeriesSpec stream_q_even_products(const MatrixStreams& ms) {
    Rec q = ms.q_even;
    long bc = ms.b * ms.c;
    return stream("bc/(q(2n)q(2n-4))", 1,
                  [q, bc](long n) { return QuadNum(bc) / (q->term(n + 1) * q->term(n - 1)); });
}

SeriesSpec stream_p_odd_products(const MatrixStreams& ms) {
    Rec p = ms.p_odd;
    long bc = ms.b * ms.c;
    return stream("bc/(p(2n+1)p(2n-3))", 1,
                  [p, bc](long n) { return QuadNum(bc) / (p->term(n + 1) * p->term(n - 1)); });
}

IdentityTemplate entry_eq_8_4() {
    IdentityTemplate tpl;
    tpl.id = "eq-8.4";
    tpl.description = "four streams of the doubled quadrilateral with vertices {0, c/d, a/b, oo} "
                      "plus the isolated term bc/ad; sums to pi^2/3";
    tpl.params = matrix_params();
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        MatrixStreams ms = matrix_streams(given, specs);
        Identity ident;
        ident.id = "eq-8.4";
        ident.description = desc;
        ident.params = matrix_canonical(ms);
        ident.series.push_back(stream_q_odd(ms));
        Rec p = ms.p_even;
        long c = ms.c;
        ident.series.push_back(
            stream("(c/p(2n-2))^2", 2, [p, c](long n) { return sq(QuadNum(c) / p->term(n)); }));
        ident.series.push_back(stream_q_even_products(ms));
        ident.series.push_back(stream_p_odd_products(ms));
        ident.finite_terms.push_back({rat(ms.b * ms.c, ms.a * ms.d), 1});
        ident.rhs = rhs_pi2(1, 3);
        CrossValidationSpec cv;
        cv.model = ModelKind::double_crown_ii;
        cv.make_pair = [ms] {
            return make_double_crown_ii(
                Mobius(QuadNum(ms.a), QuadNum(ms.c), QuadNum(ms.b), QuadNum(ms.d)));
        };
        // Mixed streams: moving far side against {0, c/d} gives the p-odd
        // products, moving near side against {a/b, oo} gives the q-even ones.
        cv.families = {{0, 0}, {1, 0}, {3, 0}, {2, 0}};
        cv.finite = {{FiniteAlignment::finite_term, 0, 0}};
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_8_5() {
    IdentityTemplate tpl;
    tpl.id = "eq-8.5";
    tpl.description = "crown stream of the positive-matrix pairing; the Rogers value of 1/u^2";
    tpl.params = matrix_params();
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        MatrixStreams ms = matrix_streams(given, specs);
        Identity ident;
        ident.id = "eq-8.5";
        ident.description = desc;
        ident.params = matrix_canonical(ms);
        ident.series.push_back(stream_q_odd(ms));
        ident.rhs = rhs_rogers(inverse_multiplier_sq(QuadNum(ms.a + ms.d)));
        ident.cross =
            cross_crown_ii(Mobius(QuadNum(ms.a), QuadNum(ms.c), QuadNum(ms.b), QuadNum(ms.d)));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_8_6() {
    IdentityTemplate tpl;
    tpl.id = "eq-8.6";
    tpl.description = "condensed form of the four-stream identity: the q-odd stream doubled, "
                      "since b p(2n-2) = c q(2n-1)";
    tpl.params = matrix_params();
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        MatrixStreams ms = matrix_streams(given, specs);
        Identity ident;
        ident.id = "eq-8.6";
        ident.description = desc;
        ident.params = matrix_canonical(ms);
        ident.series.push_back(stream_q_odd(ms));
        ident.series.front().weight = 2;
        ident.series.push_back(stream_q_even_products(ms));
        ident.series.push_back(stream_p_odd_products(ms));
        ident.finite_terms.push_back({rat(ms.b * ms.c, ms.a * ms.d), 1});
        ident.rhs = rhs_pi2(1, 3);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_8_7() {
    IdentityTemplate tpl;
    tpl.id = "eq-8.7";
    tpl.description = "Fibonacci ratio squares from k=2; the Rogers value of 1/phi^(4n)";
    tpl.params = {{"n", "1", "index scale, integer >= 1"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long n = parse_long(lookup(given, specs[0]), "n");
        require_min(n, 1, "n");
        Identity ident;
        ident.id = "eq-8.7";
        ident.description = desc;
        ident.params = canonical({{"n", std::to_string(n)}});
        mpz_class f2n = fibonacci(2 * n);
        ident.series.push_back(stream("(f(2n)/f(2nk))^2", 2, [n, f2n](long k) {
            mpz_class f = fibonacci(2 * n * k);
            return rat(f2n * f2n, f * f);
        }));
        ident.rhs = rhs_rogers(golden_inv_pow(4 * n));
        ident.cross = cross_crown_i(QuadNum(lucas(2 * n)));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_9_2() {
    IdentityTemplate tpl;
    tpl.id = "eq-9.2";
    tpl.description = "period-two continued fraction crown stream; the Rogers value of "
                      "1/(b*alpha+1)^2";
    tpl.params = {{"a", "1", "first partial quotient, integer >= 1"},
                  {"b", "1", "second partial quotient, integer >= 1"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long a = parse_long(lookup(given, specs[0]), "a");
        long b = parse_long(lookup(given, specs[1]), "b");
        require_min(a, 1, "a");
        require_min(b, 1, "b");
        Identity ident;
        ident.id = "eq-9.2";
        ident.description = desc;
        ident.params = canonical({{"a", std::to_string(a)}, {"b", std::to_string(b)}});
        Rec q = make_rec(QuadNum(a * b + 2), QuadNum(-1), QuadNum(0), QuadNum(b));
        ident.series.push_back(
            stream("(b/q(2n-1))^2", 2, [q, b](long n) { return sq(QuadNum(b) / q->term(n)); }));
        QuadNum alpha = value(PeriodicCF({a, b}));
        ident.rhs = rhs_rogers(sq(inv(QuadNum(b) * alpha + QuadNum(1))));
        ident.cross = cross_crown_ii(
            Mobius(QuadNum(a * b + 1), QuadNum(a), QuadNum(b), QuadNum(1)));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_10_1() {
    IdentityTemplate tpl;
    tpl.id = "eq-10.1";
    tpl.description = "Lucas-square stream from n=2 and scaled Fibonacci-square stream from n=1; "
                      "the Rogers value of 1/phi^(4k+2)";
    tpl.params = {{"k", "1", "exponent index, integer >= 0; the right side uses phi^-(4k+2)"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long k = parse_long(lookup(given, specs[0]), "k");
        require_min(k, 0, "k");
        const long k0 = 2 * k + 1;
        const long step = 4 * k + 2;
        mpz_class lk0 = lucas(k0);
        mpz_class lk0_sq = lk0 * lk0;
        Identity ident;
        ident.id = "eq-10.1";
        ident.description = desc;
        ident.params = canonical({{"k", std::to_string(k)}});
        ident.series.push_back(stream("(l(k0)/l(n(4k+2)-k0))^2", 2, [step, k0, lk0_sq](long n) {
            mpz_class l = lucas(n * step - k0);
            return rat(lk0_sq, l * l);
        }));
        ident.series.push_back(stream("l(k0)^2/(5f(n(4k+2))^2)", 1, [step, lk0_sq](long n) {
            mpz_class f = fibonacci(n * step);
            return rat(lk0_sq, 5 * f * f);
        }));
        ident.rhs = rhs_rogers(golden_inv_pow(step));
        return ident;
    };
    return tpl;
}

// Shared pieces of the odd-power golden-ratio entries: k0 = 2k+1,
// t2 = t^2 = f(k0) sqrt(5) + 2, t0 = t^2 - 2, and the recurrences
// H(1) = 1, H(2) = t0 and K(0) = 1, K(1) = t0 + 1 over Q(sqrt 5).
struct OddPowerData {
    long k0 = 1;
    QuadNum t2{0};
    Rec h;
    Rec k_rec;
};

OddPowerData odd_power_data(const Params& given, const std::vector<ParamSpec>& specs) {
    long k = parse_long(lookup(given, specs[0]), "k");
    require_min(k, 0, "k");
    OddPowerData data;
    data.k0 = 2 * k + 1;
    QuadNum t0(0, fibonacci(data.k0), 1, 5);
    data.t2 = t0 + QuadNum(2);
    data.h = make_rec(t0, QuadNum(-1), QuadNum(0), QuadNum(1));
    data.k_rec = make_rec(t0, QuadNum(-1), QuadNum(1), t0 + QuadNum(1));
    return data;
}

SeriesSpec stream_h(const OddPowerData& data) {
    Rec h = data.h;
    QuadNum t2 = data.t2;
    return stream("1/(t^2 H(n)^2)", 1, [h, t2](long n) { return inv(t2 * sq(h->term(n))); });
}

SeriesSpec stream_k(const OddPowerData& data) {
    Rec k_rec = data.k_rec;
    return stream("1/K(n)^2", 1, [k_rec](long n) { return inv(sq(k_rec->term(n))); });
}

IdentityTemplate entry_eq_11_1() {
    IdentityTemplate tpl;
    tpl.id = "eq-11.1";
    tpl.description = "H and K recurrence streams over Q(sqrt 5); the Rogers value of "
                      "1/phi^(2k+1)";
    tpl.params = {{"k", "0", "exponent index, integer >= 0; the right side uses phi^-(2k+1)"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        OddPowerData data = odd_power_data(given, specs);
        Identity ident;
        ident.id = "eq-11.1";
        ident.description = desc;
        ident.params = canonical({{"k", std::to_string((data.k0 - 1) / 2)}});
        ident.series.push_back(stream_h(data));
        ident.series.push_back(stream_k(data));
        ident.rhs = rhs_rogers(golden_inv_pow(data.k0));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_11_4() {
    IdentityTemplate tpl;
    tpl.id = "eq-11.4";
    tpl.description = "the H stream split into Lucas and Fibonacci halves, plus the K stream; "
                      "the Rogers value of 1/phi^(2k+1)";
    tpl.params = {{"k", "0", "exponent index, integer >= 0"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        OddPowerData data = odd_power_data(given, specs);
        const long k0 = data.k0;
        mpz_class lk0 = lucas(k0);
        mpz_class lk0_sq = lk0 * lk0;
        QuadNum t2 = data.t2;
        Identity ident;
        ident.id = "eq-11.4";
        ident.description = desc;
        ident.params = canonical({{"k", std::to_string((k0 - 1) / 2)}});
        ident.series.push_back(
            stream("(l(k0)/(t l((2n-1)k0)))^2", 1, [k0, lk0_sq, t2](long n) {
                mpz_class l = lucas((2 * n - 1) * k0);
                return QuadNum(lk0_sq) / (t2 * QuadNum(mpz_class(l * l)));
            }));
        ident.series.push_back(
            stream("(l(k0)/(sqrt(5) t f(2nk0)))^2", 1, [k0, lk0_sq, t2](long n) {
                mpz_class f = fibonacci(2 * n * k0);
                return QuadNum(lk0_sq) / (t2 * QuadNum(mpz_class(5 * f * f)));
            }));
        ident.series.push_back(stream_k(data));
        ident.rhs = rhs_rogers(golden_inv_pow(k0));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_11_5() {
    IdentityTemplate tpl;
    tpl.id = "eq-11.5";
    tpl.description = "the K stream split into two golden-denominator halves, plus the H stream; "
                      "the Rogers value of 1/phi^(2k+1)";
    tpl.params = {{"k", "0", "exponent index, integer >= 0"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        OddPowerData data = odd_power_data(given, specs);
        const long k0 = data.k0;
        mpz_class lk0 = lucas(k0);
        Identity ident;
        ident.id = "eq-11.5";
        ident.description = desc;
        ident.params = canonical({{"k", std::to_string((k0 - 1) / 2)}});
        ident.series.push_back(stream_h(data));
        ident.series.push_back(
            stream("(l(k0)/(l((2n-1)k0)+sqrt(5)f(2nk0)))^2", 1, [k0, lk0](long n) {
                QuadNum denom(lucas((2 * n - 1) * k0), fibonacci(2 * n * k0), 1, 5);
                return sq(QuadNum(lk0) / denom);
            }));
        ident.series.push_back(
            stream("(l(k0)/(l((2n-1)k0)+sqrt(5)f(2(n-1)k0)))^2", 2, [k0, lk0](long n) {
                QuadNum denom(lucas((2 * n - 1) * k0), fibonacci(2 * (n - 1) * k0), 1, 5);
                return sq(QuadNum(lk0) / denom);
            }));
        ident.rhs = rhs_rogers(golden_inv_pow(k0));
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_12_1() {
    IdentityTemplate tpl;
    tpl.id = "eq-12.1";
    tpl.description = "third pairing with vertices {2/t, t/2, t, oo}: doubled square stream and "
                      "two p-product streams, all from n=1 (starts fixed by the golden-ratio "
                      "specialization), plus pi^2/3 on the right";
    tpl.params = {{"t", "3", "trace of the side pairing; > 2, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        QuadNum t = parse_surd(lookup(given, specs[0]), "t");
        require_above_two(t, "t");
        Rec q = trace_rec(t);
        Rec p = make_rec(t, QuadNum(-1), QuadNum(2), t);
        QuadNum gap = t * t - QuadNum(4);
        Identity ident;
        ident.id = "eq-12.1";
        ident.description = desc;
        ident.params = canonical({{"t", t.to_string()}});
        ident.series.push_back(stream("1/q(n)^2", 1, [q](long n) { return inv(sq(q->term(n))); }));
        ident.series.front().weight = 2;
        ident.series.push_back(stream("(t^2-4)/(p(n)p(n-2))", 1, [p, gap](long n) {
            return gap / (p->term(n) * p->term(n - 2));
        }));
        ident.series.push_back(stream("(t^2-4)/(p(n+1)p(n-1))", 1, [p, gap](long n) {
            return gap / (p->term(n + 1) * p->term(n - 1));
        }));
        ident.rhs = rhs_pi2(1, 3);
        CrossValidationSpec cv;
        cv.model = ModelKind::third_pair;
        cv.make_pair = [t] { return make_third_pair(t); };
        cv.families = {{0, 0}, {0, 0}, {2, 1}, {1, 0}};
        cv.finite = {{FiniteAlignment::series_term, 2, 0}};
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

mpq_class epsilon_weight(long k) { return k == 1 ? mpq_class(1, 2) : mpq_class(1); }

void add_lucas_product_stream(Identity& ident) {
    ident.series.push_back(stream("1/(l(2k-2)l(2k))", 1, [](long k) {
        return rat(1, lucas(2 * k - 2) * lucas(2 * k));
    }));
}

void add_weighted_fib_product_stream(Identity& ident) {
    SeriesSpec s = stream("eps(k)/(5f(2k-3)f(2k-1))", 1, [](long k) {
        return rat(1, 5 * fibonacci(2 * k - 3) * fibonacci(2 * k - 1));
    });
    s.weight_fn = epsilon_weight;
    ident.series.push_back(std::move(s));
}

IdentityTemplate entry_eq_12_2() {
    IdentityTemplate tpl;
    tpl.id = "eq-12.2";
    tpl.description = "golden-ratio specialization of the third pairing: four Fibonacci/Lucas "
                      "streams with the half weight on the first product term; sums to pi^2/6";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-12.2";
        ident.description = desc;
        ident.series.push_back(stream("1/(5f(2k)^2)", 1, [](long k) {
            mpz_class f = fibonacci(2 * k);
            return rat(1, 5 * f * f);
        }));
        ident.series.push_back(stream("1/l(2k+1)^2", 1, [](long k) {
            mpz_class l = lucas(2 * k + 1);
            return rat(1, l * l);
        }));
        add_lucas_product_stream(ident);
        add_weighted_fib_product_stream(ident);
        ident.rhs = rhs_pi2(1, 6);
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_12_3() {
    IdentityTemplate tpl;
    tpl.id = "eq-12.3";
    tpl.description = "rational-argument streams for the Rogers value of 1/phi, pi^2/10";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-12.3";
        ident.description = desc;
        add_lucas_product_stream(ident);
        add_weighted_fib_product_stream(ident);
        ident.rhs = rhs_rogers(golden_inv_pow(1));
        return ident;
    };
    return tpl;
}

// Stream and isolated-term generators shared by the translation entries.
// Vertices are 0 = v[0] < ... < v[m-1] = 1 and the bracket of side i moved
// by k against side j is D(i) D(j) / ((k+v[i-1]-v[j-1]) (k+v[i]-v[j])) with
// D(i) = v[i] - v[i-1] (1-based side indices).
using VertexList = std::shared_ptr<const std::vector<QuadNum>>;

std::function<QuadNum(long)> translated_bracket(const VertexList& v, long i, long j) {
    return [v, i, j](long k) {
        QuadNum di = (*v)[i] - (*v)[i - 1];
        QuadNum dj = (*v)[j] - (*v)[j - 1];
        QuadNum shift(k);
        return (di * dj) /
               ((shift + (*v)[i - 1] - (*v)[j - 1]) * (shift + (*v)[i] - (*v)[j]));
    };
}

VertexList checked_vertices(std::vector<QuadNum> verts) {
    if (verts.size() < 2) throw std::invalid_argument("at least two vertices are required");
    if (verts.front() != QuadNum(0) || verts.back() != QuadNum(1))
        throw std::invalid_argument("vertices must start at 0 and end at 1");
    for (size_t i = 1; i < verts.size(); ++i)
        if (!(verts[i - 1] < verts[i]))
            throw std::invalid_argument("vertices must be strictly increasing");
    return std::make_shared<const std::vector<QuadNum>>(std::move(verts));
}

IdentityTemplate entry_thm_13_2() {
    IdentityTemplate tpl;
    tpl.id = "thm-13.2";
    tpl.description = "translation-paired ideal polygon on vertices 0=v1<...<v(n-1)=1 and oo: "
                      "one stream per ordered side pair plus the unordered side brackets; sums "
                      "to (n-2) pi^2/3";
    tpl.params = {{"vertices", "0,1/2,1", "comma-separated finite vertices, surds allowed"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        VertexList v = checked_vertices(parse_surd_list(lookup(given, specs[0]), "vertices"));
        const long sides = static_cast<long>(v->size()) - 1;
        Identity ident;
        ident.id = "thm-13.2";
        ident.description = desc;
        std::string joined;
        for (const QuadNum& vert : *v) {
            if (!joined.empty()) joined += ',';
            joined += vert.to_string();
        }
        ident.params = canonical({{"vertices", joined}});
        for (long i = 1; i <= sides; ++i)
            for (long j = 1; j <= sides; ++j)
                ident.series.push_back(
                    stream("stream(" + std::to_string(i) + "," + std::to_string(j) + ")", 1,
                           translated_bracket(v, i, j)));
        for (long i = 1; i <= sides; ++i)
            for (long j = 1; j < i; ++j)
                ident.finite_terms.push_back(
                    {cross_ratio4((*v)[i - 1], (*v)[i], (*v)[j - 1], (*v)[j]), 1});
        ident.rhs = rhs_pi2(sides, 3);
        CrossValidationSpec cv;
        cv.model = ModelKind::parabolic;
        cv.make_pair = [v] { return make_parabolic(*v); };
        cv.families.resize(static_cast<size_t>(sides * sides));
        for (long f = 0; f < sides * sides; ++f) cv.families[f] = {static_cast<int>(f), 0};
        for (int f = 0; f < static_cast<int>(ident.finite_terms.size()); ++f)
            cv.finite.push_back({FiniteAlignment::finite_term, f, 0});
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_13_3() {
    IdentityTemplate tpl;
    tpl.id = "eq-13.3";
    tpl.description = "inverse-square stream from k=2 summing to pi^2/6";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-13.3";
        ident.description = desc;
        ident.series.push_back(
            stream("1/k^2", 2, [](long k) { return rat(1, mpz_class(k) * k); }));
        ident.rhs = rhs_pi2(1, 6);
        CrossValidationSpec cv;
        cv.model = ModelKind::parabolic;
        cv.make_pair = [] { return make_parabolic({QuadNum(0), QuadNum(1)}); };
        cv.families = {{0, -1}};  // the k=1 bracket is the cusp value 1
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

CrossValidationSpec cross_two_bottom_parabolic(std::vector<QuadNum> verts) {
    CrossValidationSpec cv;
    cv.model = ModelKind::parabolic;
    cv.make_pair = [verts = std::move(verts)] { return make_parabolic(verts); };
    // Streams (1,1), (1,2), (2,1), (2,2); the (2,1) bracket at k equals the
    // product term at k+1, and the isolated bracket repeats the k=1 term.
    cv.families = {{0, 0}, {2, 0}, {2, 1}, {1, 0}};
    cv.finite = {{FiniteAlignment::series_term, 2, 0}};
    return cv;
}

IdentityTemplate entry_eq_13_4() {
    IdentityTemplate tpl;
    tpl.id = "eq-13.4";
    tpl.description = "translation-paired square with vertices {0, 1/phi, 1, oo}; three streams, "
                      "the product stream doubled; sums to 2 pi^2/3";
    tpl.instantiate = [desc = tpl.description](const Params& given) {
        reject_unknown(given, {});
        Identity ident;
        ident.id = "eq-13.4";
        ident.description = desc;
        QuadNum phi = golden();
        QuadNum phi2 = sq(phi);
        ident.series.push_back(stream("1/(phi^2 k^2)", 1, [](long k) {
            return golden_inv_pow(2) * rat(1, mpz_class(k) * k);
        }));
        ident.series.push_back(stream("1/(phi^4 k^2)", 1, [](long k) {
            return golden_inv_pow(4) * rat(1, mpz_class(k) * k);
        }));
        SeriesSpec product = stream("1/((phi k - 1)(phi^2 k - 1))", 1, [phi, phi2](long k) {
            QuadNum kk(k);
            return inv((phi * kk - QuadNum(1)) * (phi2 * kk - QuadNum(1)));
        });
        product.weight = 2;
        ident.series.push_back(std::move(product));
        ident.rhs = rhs_pi2(2, 3);
        ident.cross = cross_two_bottom_parabolic({QuadNum(0), golden_inv_pow(1), QuadNum(1)});
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_eq_13_5() {
    IdentityTemplate tpl;
    tpl.id = "eq-13.5";
    tpl.description = "translation-paired square with rational middle vertex p/q; three streams "
                      "with r = q - p, product stream doubled; sums to 2 pi^2/3";
    tpl.params = {{"p", "2", "numerator of the middle vertex; 0 < p < q, gcd(p, q) = 1"},
                  {"q", "5", "denominator of the middle vertex"}};
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        long p = parse_long(lookup(given, specs[0]), "p");
        long q = parse_long(lookup(given, specs[1]), "q");
        if (p < 1 || q <= p) throw std::invalid_argument("need 0 < p < q");
        if (gcd(mpz_class(p), mpz_class(q)) != 1)
            throw std::invalid_argument("p and q must be coprime");
        const long r = q - p;
        Identity ident;
        ident.id = "eq-13.5";
        ident.description = desc;
        ident.params = canonical({{"p", std::to_string(p)}, {"q", std::to_string(q)}});
        ident.series.push_back(stream("p^2/(q^2 k^2)", 1, [p, q](long k) {
            return rat(mpz_class(p) * p, mpz_class(q) * q * k * k);
        }));
        ident.series.push_back(stream("r^2/(q^2 k^2)", 1, [r, q](long k) {
            return rat(mpz_class(r) * r, mpz_class(q) * q * k * k);
        }));
        SeriesSpec product = stream("pr/((qk-p)(qk-r))", 1, [p, q, r](long k) {
            return rat(mpz_class(p) * r, mpz_class(q * k - p) * (q * k - r));
        });
        product.weight = 2;
        ident.series.push_back(std::move(product));
        ident.rhs = rhs_pi2(2, 3);
        ident.cross = cross_two_bottom_parabolic({QuadNum(0), rat(p, q), QuadNum(1)});
        return ident;
    };
    return tpl;
}

// Shared scaffolding for the even-period continued fraction entries.
struct CfData {
    std::vector<long> given_quotients;
    std::shared_ptr<const PeriodicCF> even_cf;
    long period = 0;  // even period l
    std::string canonical_value;
};

CfData cf_data(const Params& given, const std::vector<ParamSpec>& specs) {
    CfData data;
    data.given_quotients = parse_long_list(lookup(given, specs[0]), "cf");
    for (long quotient : data.given_quotients)
        if (quotient < 1)
            throw std::invalid_argument("parameter cf: partial quotients must be positive");
    PeriodicCF raw(data.given_quotients);
    data.even_cf = std::make_shared<const PeriodicCF>(raw.even_quotients());
    data.period = data.even_cf->period();
    for (long quotient : data.given_quotients) {
        if (!data.canonical_value.empty()) data.canonical_value += ',';
        data.canonical_value += std::to_string(quotient);
    }
    return data;
}

std::vector<ParamSpec> cf_params() {
    return {{"cf", "1,2,3",
             "comma-separated partial quotients of the purely periodic continued fraction; an "
             "odd period is doubled"}};
}

IdentityTemplate entry_prop_15_1() {
    IdentityTemplate tpl;
    tpl.id = "prop-15.1";
    tpl.description = "even-period continued fraction crown, geometric route: streams and "
                      "isolated terms are cross ratios of translated odd-convergent sides; sums "
                      "to pi^2 l/6";
    tpl.params = cf_params();
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        CfData data = cf_data(given, specs);
        const long half = data.period / 2;
        auto pair = std::make_shared<const FeasiblePair>(make_even_period_cf(*data.even_cf));
        auto side_of = [pair, half](long i) -> const Geodesic& {
            return pair->sides[static_cast<size_t>(half - i)];
        };
        Identity ident;
        ident.id = "prop-15.1";
        ident.description = desc;
        ident.params = canonical({{"cf", data.canonical_value}});
        for (long i = 0; i < half; ++i)
            for (long j = 0; j < half; ++j)
                ident.series.push_back(
                    stream("stream(" + std::to_string(i) + "," + std::to_string(j) + ")", 1,
                           [pair, side_of, i, j](long k) {
                               return geodesic_cross_ratio(
                                   apply(pair->transform.power(k), side_of(i)), side_of(j));
                           }));
        for (long i = 0; i < half; ++i)
            for (long j = 0; j < i; ++j)
                ident.finite_terms.push_back({geodesic_cross_ratio(side_of(i), side_of(j)), 1});
        for (long m = 0; m < half; ++m)
            ident.finite_terms.push_back({geodesic_cross_ratio(*pair->waist, side_of(m)), 1});
        ident.rhs = rhs_pi2(data.period, 6);
        CrossValidationSpec cv;
        cv.model = ModelKind::even_period_cf;
        cv.make_pair = [cf = data.even_cf] { return make_even_period_cf(*cf); };
        cv.families.resize(static_cast<size_t>(half * half));
        for (long f = 0; f < half * half; ++f) cv.families[f] = {static_cast<int>(f), 0};
        for (int f = 0; f < static_cast<int>(ident.finite_terms.size()); ++f)
            cv.finite.push_back({FiniteAlignment::finite_term, f, 0});
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

IdentityTemplate entry_thm_15_3() {
    IdentityTemplate tpl;
    tpl.id = "thm-15.3";
    tpl.description = "even-period continued fraction crown, arithmetic route: the same terms "
                      "written through convergent numerators of the cyclic permutations; sums to "
                      "pi^2 l/6";
    tpl.params = cf_params();
    tpl.instantiate = [specs = tpl.params, desc = tpl.description](const Params& given) {
        reject_unknown(given, specs);
        CfData data = cf_data(given, specs);
        const long half = data.period / 2;
        const long period = data.period;
        auto cf = data.even_cf;
        auto permuted_term = [cf](long i, long j, long s) {
            mpz_class d1 = permuted_numerator(*cf, 2 * j + 1, s);
            mpz_class d2 = permuted_numerator(*cf, 2 * j + 3, s);
            mpz_class num = mpz_class(cf->quotient(2 * i + 1)) * cf->quotient(2 * j + 1);
            return rat(num, d1 * d2);
        };
        Identity ident;
        ident.id = "thm-15.3";
        ident.description = desc;
        ident.params = canonical({{"cf", data.canonical_value}});
        for (long i = 0; i < half; ++i)
            for (long j = 0; j < half; ++j)
                ident.series.push_back(
                    stream("stream(" + std::to_string(i) + "," + std::to_string(j) + ")", 1,
                           [permuted_term, period, i, j](long k) {
                               return permuted_term(i, j, k * period + 2 * i - 2 * j - 2);
                           }));
        for (long i = 0; i < half; ++i)
            for (long j = 0; j < i; ++j)
                ident.finite_terms.push_back({permuted_term(i, j, 2 * i - 2 * j - 2), 1});
        QuadNum alpha = value(*cf);
        QuadNum alpha_bar = galois_conjugate(alpha);
        for (long m = 0; m < half; ++m) {
            auto [p_hi, q_hi] = cf->convergent(2 * m + 1);
            BoundaryPoint lower =
                m == 0 ? BoundaryPoint(std::nullopt) : BoundaryPoint([&] {
                    auto [p_lo, q_lo] = cf->convergent(2 * m - 1);
                    return rat(p_lo, q_lo);
                }());
            ident.finite_terms.push_back(
                {cross_ratio4(alpha_bar, alpha, rat(p_hi, q_hi), lower), 1});
        }
        ident.rhs = rhs_pi2(period, 6);
        CrossValidationSpec cv;
        cv.model = ModelKind::even_period_cf;
        cv.make_pair = [cf] { return make_even_period_cf(*cf); };
        cv.families.resize(static_cast<size_t>(half * half));
        for (long f = 0; f < half * half; ++f) cv.families[f] = {static_cast<int>(f), 0};
        for (int f = 0; f < static_cast<int>(ident.finite_terms.size()); ++f)
            cv.finite.push_back({FiniteAlignment::finite_term, f, 0});
        ident.cross = cv;
        return ident;
    };
    return tpl;
}

std::vector<IdentityTemplate> build_catalog() {
    std::vector<IdentityTemplate> entries;
    entries.push_back(entry_prop_4_1());
    entries.push_back(entry_eq_4_7());
    entries.push_back(entry_eq_4_8());
    entries.push_back(entry_eq_5_2());
    entries.push_back(entry_eq_5_3());
    entries.push_back(entry_eq_5_3a());
    entries.push_back(entry_eq_5_3b());
    entries.push_back(entry_eq_5_4());
    entries.push_back(entry_eq_5_7());
    entries.push_back(entry_eq_5_8a());
    entries.push_back(entry_eq_5_8b());
    entries.push_back(entry_eq_5_9a());
    entries.push_back(entry_eq_5_9b());
    entries.push_back(entry_eq_5_10());
    entries.push_back(entry_eq_6_2());
    entries.push_back(entry_eq_6_4());
    entries.push_back(entry_eq_7_1());
    entries.push_back(entry_eq_7_3a());
    entries.push_back(entry_eq_7_3b());
    entries.push_back(entry_eq_8_4());
    entries.push_back(entry_eq_8_5());
    entries.push_back(entry_eq_8_6());
    entries.push_back(entry_eq_8_7());
    entries.push_back(entry_eq_9_2());
    entries.push_back(entry_eq_10_1());
    entries.push_back(entry_eq_11_1());
    entries.push_back(entry_eq_11_4());
    entries.push_back(entry_eq_11_5());
    entries.push_back(entry_eq_12_1());
    entries.push_back(entry_eq_12_2());
    entries.push_back(entry_eq_12_3());
    entries.push_back(entry_thm_13_2());
    entries.push_back(entry_eq_13_3());
    entries.push_back(entry_eq_13_4());
    entries.push_back(entry_eq_13_5());
    entries.push_back(entry_prop_15_1());
    entries.push_back(entry_thm_15_3());
    return entries;
}

}  // namespace

const std::vector<IdentityTemplate>& catalog() {
    static const std::vector<IdentityTemplate> entries = build_catalog();
    return entries;
}

const IdentityTemplate& find_identity(const std::string& id) {
    for (const IdentityTemplate& entry : catalog())
        if (entry.id == id) return entry;
    throw std::invalid_argument("unknown identity id '" + id + "'");
}

Identity instantiate(const std::string& id, const std::map<std::string, std::string>& params) {
    return find_identity(id).instantiate(params);
}

}  // namespace orthospec
