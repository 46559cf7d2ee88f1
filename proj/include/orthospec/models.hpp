#pragma once

#include <vector>

#include <gmpxx.h>

#include "orthospec/contfrac.hpp"
#include "orthospec/geometry.hpp"
#include "orthospec/quadnum.hpp"

namespace orthospec {

// The stock of polygon/transformation pairs whose quotient surfaces carry
// the summation identities.
enum class ModelKind {
    double_crown_i,   // T = [[t,-1],[1,0]] on the ideal quadrilateral {1, t-1, t, inf}
    crown_i,          // same T, polygon truncated along the axis
    double_crown_ii,  // positive unimodular A on {0, c/d, a/b, inf}
    crown_ii,         // same A, truncated along the axis
    third_pair,       // T = [[t,-1],[1,0]] on {2/t, t/2, t, inf}
    parabolic,        // z -> z+1 on {0, ..., 1, inf}
    even_period_cf,   // holonomy of an even-period continued fraction, crown with l/2 tines
};

// Topological data of the quotient surface. The identity's right-hand side
// is -(pi^2/12) (6 chi + N) when geodesic boundary faces are counted with the
// standard convention and -(pi^2/12) (6 chi - N) with the enlarged one (cusped
// crown tines).
struct SurfaceDescriptor {
    mpq_class euler_characteristic;
    long boundary_cusps = 0;
    bool enlarged = false;
};

// Coefficient c with RHS = c * pi^2.
mpq_class rhs_pi2_coefficient(const SurfaceDescriptor& surface);

struct ModelTerms {
    SurfaceDescriptor surface;
    // Orbit stream families in a fixed documented order; entry f holds the
    // first `count` cross-ratio arguments of family f.
    std::vector<std::vector<QuadNum>> families;
    // Isolated terms: finite side pairs first, then axis terms for crowns.
    std::vector<QuadNum> finite;
};

// Pair builders. Every builder returns a pair that passes validate().
FeasiblePair make_double_crown_i(const QuadNum& t);                      // t > 2
FeasiblePair make_crown_i(const QuadNum& t);                             // t > 2
FeasiblePair make_double_crown_ii(const Mobius& transform);              // positive entries, det 1, trace > 2
FeasiblePair make_crown_ii(const Mobius& transform);                     // same input as above
FeasiblePair make_third_pair(const QuadNum& t);                          // t > 2
FeasiblePair make_parabolic(const std::vector<QuadNum>& vertices);       // 0 = v_1 < ... < v_{n-1} = 1
FeasiblePair make_even_period_cf(const PeriodicCF& cf);                  // odd periods are doubled

// Checks that `fp` is exactly the pair the named model would build (throws
// std::invalid_argument otherwise, as well as on feasibility violations),
// then lists the first `count` terms of every orbit family together with all
// isolated terms, each term the cross-ratio argument of a geodesic pair on
// the quotient surface.
ModelTerms enumerate_terms(const FeasiblePair& fp, ModelKind model, long count);

}  // namespace orthospec
