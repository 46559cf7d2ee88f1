#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "orthospec/bigreal.hpp"
#include "orthospec/models.hpp"
#include "orthospec/quadnum.hpp"

namespace orthospec {

// One infinite summand stream of an identity. Exactly one of `arg` (exact
// argument) and `arg_numeric` (argument evaluated at a precision) is set.
// Term n carries weight `weight`, additionally multiplied by `weight_fn(n)`
// when the latter is present; n runs over display indices start, start+1, ...
struct SeriesSpec {
    std::string label;
    long start = 1;
    mpq_class weight = 1;
    std::function<mpq_class(long)> weight_fn;
    std::function<QuadNum(long)> arg;
    std::function<BigReal(long, long)> arg_numeric;  // (display index, precision)
};

struct FiniteTermSpec {
    QuadNum argument;
    mpq_class weight = 1;
};

// Right-hand side: pi2_coefficient * pi^2 plus the listed Rogers values.
struct RhsSpec {
    mpq_class pi2_coefficient = 0;
    std::vector<FiniteTermSpec> rogers_terms;
};

// Alignment of one geometric orbit family against the arithmetic series.
// Geometric term i matches series term i + offset. A negative offset -k
// instead demands that the first k geometric terms equal 1 exactly (cusp
// terms absent from the arithmetic display), after which geometric term i
// matches series term i - k.
struct FamilyAlignment {
    int series = 0;
    long offset = 0;
};

// Alignment of one isolated geometric term.
struct FiniteAlignment {
    enum Kind { series_term, finite_term, rhs_reflection } kind = series_term;
    int index = 0;  // series index / arithmetic finite-term index / rhs Rogers-term index
    long term = 0;  // term offset within the series (series_term only)
};

struct CrossValidationSpec {
    ModelKind model;
    std::function<FeasiblePair()> make_pair;
    std::vector<FamilyAlignment> families;  // one entry per geometric family
    std::vector<FiniteAlignment> finite;    // one entry per geometric isolated term
};

struct Identity {
    std::string id;
    std::string description;
    std::string params;  // canonical "name=value,..." of the resolved parameters
    std::vector<SeriesSpec> series;
    std::vector<FiniteTermSpec> finite_terms;
    RhsSpec rhs;
    std::optional<CrossValidationSpec> cross;
};

struct ParamSpec {
    std::string name;
    std::string default_value;
    std::string doc;
};

struct IdentityTemplate {
    std::string id;
    std::string description;
    std::vector<ParamSpec> params;
    std::function<Identity(const std::map<std::string, std::string>&)> instantiate;
};

// The identity catalog, in presentation order. Stable across runs.
const std::vector<IdentityTemplate>& catalog();

// Lookup by id; throws std::invalid_argument for unknown ids.
const IdentityTemplate& find_identity(const std::string& id);

// Instantiates an identity with the given parameter overrides (unset
// parameters take their defaults; unknown names and invalid values throw
// std::invalid_argument).
Identity instantiate(const std::string& id, const std::map<std::string, std::string>& params);

struct VerificationReport {
    std::string id;
    std::string params;
    long precision_bits = 0;
    std::vector<long> terms_used;  // per series
    BigReal partial_sum;
    BigReal rhs_value;
    BigReal abs_error;
    BigReal tail_estimate;
    bool converged = false;
    double elapsed_ms = 0.0;
};

// Sums every series of the identity at the given precision until its terms
// fall below tolerance/(10 * #series) with a comparably small tail estimate,
// or until max_terms per series. The report's converged flag requires
// abs_error <= tolerance + tail_estimate together with a halving check: the
// sum moved since half the terms by no more than tolerance/10 plus the tail
// estimate recorded at the halfway checkpoint.
VerificationReport verify(const Identity& identity, long precision, const BigReal& tolerance,
                          long max_terms);

// Compares the identity's arithmetic term arguments against the geometric
// enumeration of a model pair over the first `prefix` stream terms, using
// the identity's alignment table; every comparison is exact. Returns a
// description of the first mismatch, or nothing when all terms agree.
// Throws std::invalid_argument when the identity has no model attached.
// The two-argument forms build the identity's own pair; the three-argument
// forms check a caller-supplied pair against the same model.
std::optional<std::string> cross_validate_detail(const Identity& identity, long prefix);
std::optional<std::string> cross_validate_detail(const Identity& identity, const FeasiblePair& fp,
                                                 long prefix);
bool cross_validate(const Identity& identity, long prefix);
bool cross_validate(const Identity& identity, const FeasiblePair& fp, long prefix);

// Number of decimal digits that make decimal round trips of a binary value
// at this precision lossless.
long decimal_digits_for(long precision_bits);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

}  // namespace orthospec
