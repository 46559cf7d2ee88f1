#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orthospec/dilog.hpp"
#include "orthospec/identities.hpp"

namespace orthospec {

namespace {

// Conservative bound on the remaining sum after `used` terms, from the last
// two term values. Steady ratios r <= 0.9 get twice the geometric tail;
// slowly decaying series (the 1/k^2 families) get twice the integral bound
// N (2 + ln N)/(1 + ln N) * t_N >= sum_{k>N} t_k for t_k of order (ln k)/k^2.
BigReal tail_bound(const BigReal& prev, const BigReal& last, long used, long precision) {
    if (last.is_zero()) return BigReal(precision);
    double ratio = 1.0;
    if (used >= 2 && !prev.is_zero()) {
        ratio = (last / prev).to_double();
        if (!(ratio > 0.0)) ratio = 0.0;
    }
    if (ratio <= 0.9) return last * BigReal::of(2.0 * ratio / (1.0 - ratio), precision);
    const double n = static_cast<double>(used);
    return last * BigReal::of(2.0 * n * (2.0 + std::log(n)) / (1.0 + std::log(n)), precision);
}

void check_exact_arg(const QuadNum& x, const std::string& label) {
    if (x.sign() <= 0 || compare(x, QuadNum(1)) > 0)
        throw std::logic_error("argument of " + label + " left the interval (0,1]");
}

}  // namespace

VerificationReport verify(const Identity& identity, long precision, const BigReal& tolerance,
                          long max_terms) {
    require_precision(precision);
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (max_terms < 8) throw std::invalid_argument("max_terms must be at least 8");
    if (identity.series.empty()) throw std::invalid_argument("identity has no series to sum");
    const auto clock_start = std::chrono::steady_clock::now();

    const long nseries = static_cast<long>(identity.series.size());
    const BigReal term_floor = tolerance / BigReal::of_int(10 * nseries, precision);
    const BigReal tail_floor = tolerance / BigReal::of_int(2 * nseries, precision);
    const BigReal one = BigReal::of_int(1, precision);

    BigReal partial(precision);
    BigReal total_tail(precision);
    BigReal halving_moved(precision);
    BigReal halving_allowance(precision);
    std::vector<long> used_counts;

    for (const SeriesSpec& series : identity.series) {
        if (static_cast<bool>(series.arg) == static_cast<bool>(series.arg_numeric))
            throw std::logic_error("series needs exactly one argument generator");
        BigReal sum(precision);
        BigReal last_term(precision);
        BigReal prev_term(precision);
        long used = 0;
        std::vector<BigReal> sums_at_pow2;   // after 1, 2, 4, ... terms
        std::vector<BigReal> tails_at_pow2;

        while (used < max_terms) {
            const long n = series.start + used;
            BigReal x(precision);
            if (series.arg) {
                QuadNum exact = series.arg(n);
                check_exact_arg(exact, series.label);
                x = to_real(exact, precision);
            } else {
                x = series.arg_numeric(n, precision);
                if (x.sign() <= 0 || one < x)
                    throw std::logic_error("argument of " + series.label + " left the interval (0,1]");
            }
            mpq_class w = series.weight;
            if (series.weight_fn) w *= series.weight_fn(n);
            BigReal term = BigReal::of_rational(w, precision) * rogers(x);
            // The summands of every catalogued identity strictly decrease;
            // tolerate a short settling prefix, then treat anything else as a
            // generator bug.
            if (used >= 8 && !(term < last_term))
                throw std::logic_error("terms of " + series.label + " stopped decreasing");
            prev_term = last_term;
            last_term = term;
            sum += term;
            ++used;
            if ((used & (used - 1)) == 0) {
                sums_at_pow2.push_back(sum);
                tails_at_pow2.push_back(tail_bound(prev_term, last_term, used, precision));
            }
            if (term < term_floor && tail_bound(prev_term, last_term, used, precision) <= tail_floor)
                break;
        }

        partial += sum;
        total_tail += tail_bound(prev_term, last_term, used, precision);
        used_counts.push_back(used);
        if (used >= 4) {
            size_t top = sums_at_pow2.size() - 1;  // largest power of two <= used
            halving_moved += abs(sums_at_pow2[top] - sums_at_pow2[top - 1]);
            halving_allowance += tails_at_pow2[top - 1];
        }
    }

    for (const FiniteTermSpec& finite : identity.finite_terms) {
        check_exact_arg(finite.argument, "an isolated term");
        partial += BigReal::of_rational(finite.weight, precision) * rogers(to_real(finite.argument, precision));
    }

    const long rhs_precision = precision + 32;
    BigReal rhs(rhs_precision);
    if (identity.rhs.pi2_coefficient != 0) {
        BigReal pi = BigReal::pi(rhs_precision);
        rhs += BigReal::of_rational(identity.rhs.pi2_coefficient, rhs_precision) * pi * pi;
    }
    for (const FiniteTermSpec& term : identity.rhs.rogers_terms) {
        check_exact_arg(term.argument, "a right-hand side term");
        rhs += BigReal::of_rational(term.weight, rhs_precision) * rogers(to_real(term.argument, rhs_precision));
    }

    VerificationReport report;
    report.id = identity.id;
    report.params = identity.params;
    report.precision_bits = precision;
    report.terms_used = std::move(used_counts);
    report.partial_sum = partial;
    report.rhs_value = rhs.rounded_to(precision);
    report.abs_error = abs(report.partial_sum - report.rhs_value);
    report.tail_estimate = total_tail;
    const bool close_enough = report.abs_error <= tolerance + report.tail_estimate;
    const bool settled = halving_moved <= tolerance / BigReal::of_int(10, precision) + halving_allowance;
    report.converged = close_enough && settled;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - clock_start).count();
    return report;
}

namespace {

std::string describe(const QuadNum& got, const QuadNum& want) {
    return "geometric " + got.to_string() + " vs arithmetic " + want.to_string();
}

}  // namespace

std::optional<std::string> cross_validate_detail(const Identity& identity, const FeasiblePair& fp,
                                                 long prefix) {
    if (!identity.cross) throw std::invalid_argument("identity " + identity.id + " has no model pair");
    if (prefix < 1) throw std::invalid_argument("cross-validation needs a positive prefix length");
    const CrossValidationSpec& cv = *identity.cross;
    ModelTerms terms = enumerate_terms(fp, cv.model, prefix);

    if (terms.families.size() != cv.families.size())
        return "model produced " + std::to_string(terms.families.size()) + " families, alignment lists " +
               std::to_string(cv.families.size());
    for (size_t f = 0; f < terms.families.size(); ++f) {
        const FamilyAlignment& align = cv.families[f];
        if (align.series < 0 || align.series >= static_cast<int>(identity.series.size()))
            return "family " + std::to_string(f) + " aligned to a missing series";
        const SeriesSpec& series = identity.series[static_cast<size_t>(align.series)];
        if (!series.arg) return "series " + series.label + " has no exact terms to compare";
        const long pad = align.offset < 0 ? -align.offset : 0;
        for (size_t i = 0; i < terms.families[f].size(); ++i) {
            const QuadNum& got = terms.families[f][i];
            if (static_cast<long>(i) < pad) {
                if (!(got == QuadNum(1)))
                    return "family " + std::to_string(f) + " term " + std::to_string(i) +
                           ": expected the cusp value 1, found " + got.to_string();
                continue;
            }
            const long term_index = static_cast<long>(i) + (align.offset < 0 ? -pad : align.offset);
            QuadNum want = series.arg(series.start + term_index);
            if (!(got == want))
                return "family " + std::to_string(f) + " term " + std::to_string(i) + ": " +
                       describe(got, want);
        }
    }

    if (terms.finite.size() != cv.finite.size())
        return "model produced " + std::to_string(terms.finite.size()) + " isolated terms, alignment lists " +
               std::to_string(cv.finite.size());
    for (size_t k = 0; k < terms.finite.size(); ++k) {
        const FiniteAlignment& align = cv.finite[k];
        QuadNum want(0);
        switch (align.kind) {
            case FiniteAlignment::series_term: {
                const SeriesSpec& series = identity.series.at(static_cast<size_t>(align.index));
                want = series.arg(series.start + align.term);
                break;
            }
            case FiniteAlignment::finite_term:
                want = identity.finite_terms.at(static_cast<size_t>(align.index)).argument;
                break;
            case FiniteAlignment::rhs_reflection:
                want = QuadNum(1) - identity.rhs.rogers_terms.at(static_cast<size_t>(align.index)).argument;
                break;
        }
        if (!(terms.finite[k] == want))
            return "isolated term " + std::to_string(k) + ": " + describe(terms.finite[k], want);
    }
    return std::nullopt;
}

std::optional<std::string> cross_validate_detail(const Identity& identity, long prefix) {
    if (!identity.cross) throw std::invalid_argument("identity " + identity.id + " has no model pair");
    return cross_validate_detail(identity, identity.cross->make_pair(), prefix);
}

bool cross_validate(const Identity& identity, long prefix) {
    return !cross_validate_detail(identity, prefix).has_value();
}

bool cross_validate(const Identity& identity, const FeasiblePair& fp, long prefix) {
    return !cross_validate_detail(identity, fp, prefix).has_value();
}

}  // namespace orthospec
