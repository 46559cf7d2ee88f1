#pragma once

#include "orthospec/bigreal.hpp"

namespace orthospec {

// Real dilogarithm Li2(x) = sum_{n>=1} x^n / n^2 for x in [-1, 1].
// Absolute error <= 2^-(precision-8) at the argument's precision.
// Throws std::domain_error outside [-1, 1].
BigReal li2(const BigReal& x);

// Rogers dilogarithm L(x) = Li2(x) + (1/2) ln(x) ln(1-x) on [0, 1], with the
// endpoint limits L(0) = 0 and L(1) = pi^2/6 returned directly (no 0*inf
// evaluation). Absolute error <= 2^-(precision-8).
// Throws std::domain_error outside [0, 1].
BigReal rogers(const BigReal& x);

}  // namespace orthospec
