#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orthospec/bigreal.hpp"
#include "orthospec/quadnum.hpp"

namespace orthospec {

// Exact Moebius transformation x -> (a x + b)/(c x + d) on the extended
// boundary line, with nonzero determinant. Entries live in one quadratic
// field (or Q). The action is scale-invariant, so products and inverses are
// kept unnormalized (no division by the determinant).
class Mobius {
  public:
    Mobius(QuadNum a, QuadNum b, QuadNum c, QuadNum d);

    static Mobius identity();
    // x -> x + shift
    static Mobius translation(const QuadNum& shift);

    const QuadNum& a() const { return a_; }
    const QuadNum& b() const { return b_; }
    const QuadNum& c() const { return c_; }
    const QuadNum& d() const { return d_; }

    QuadNum det() const { return a_ * d_ - b_ * c_; }
    QuadNum tr() const { return a_ + d_; }

    Mobius operator*(const Mobius& rhs) const;  // composition of actions
    Mobius inverse() const;
    Mobius power(long n) const;  // negative n powers the inverse

    bool operator==(const Mobius& rhs) const {
        return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_;
    }

  private:
    QuadNum a_, b_, c_, d_;
};

BoundaryPoint apply(const Mobius& m, const BoundaryPoint& p);

// The cross ratio [z1,z2,z3,z4] = (z1-z2)(z4-z3) / ((z1-z3)(z4-z2)), with
// infinity handled by cancelling the two factors it appears in. At least
// three of the four points must be distinct; configurations that make the
// denominator vanish (z1 = z3 or z2 = z4) are rejected.
QuadNum cross_ratio4(const BoundaryPoint& z1, const BoundaryPoint& z2, const BoundaryPoint& z3,
                     const BoundaryPoint& z4);

// Complete geodesic given by its two distinct ideal endpoints; unordered.
class Geodesic {
  public:
    Geodesic(BoundaryPoint e1, BoundaryPoint e2);
    const BoundaryPoint& first() const { return first_; }
    const BoundaryPoint& second() const { return second_; }
    bool operator==(const Geodesic& rhs) const;
    // Whether p is one of the two endpoints.
    bool has_endpoint(const BoundaryPoint& p) const;

  private:
    BoundaryPoint first_, second_;
};

Geodesic apply(const Mobius& m, const Geodesic& g);

// Cross ratio of two disjoint geodesics, with the four endpoints rearranged
// into boundary cyclic order first; always lands in (0,1]. Geodesics sharing
// exactly one endpoint give exactly 1. Crossing geodesics (alternating
// endpoints on the circle) throw std::domain_error.
QuadNum geodesic_cross_ratio(const Geodesic& g1, const Geodesic& g2);

// Distance between disjoint geodesics: l = 2*arccosh(1/sqrt(cross ratio)).
BigReal geodesic_distance(const Geodesic& g1, const Geodesic& g2, long precision);

// Real fixed points of a hyperbolic transformation, (larger, smaller).
// Throws std::domain_error for parabolic or elliptic input, for c = 0 (one
// fixed point would be infinity), and when the fixed points do not lie in
// the entry field.
std::pair<QuadNum, QuadNum> fixed_points(const Mobius& m);

// A transform T pairing two sides of a polygon P and mapping P's interior to
// its exterior. `vertices` are P's ideal vertices in boundary cyclic order
// (finite on-axis vertices of crown polygons are not listed; the complete
// geodesic through each such side is). `sides` holds the carrier geodesic of
// every geodesic side of P, cyclically, and transform maps sides[source_side]
// onto sides[target_side] endpoint-for-endpoint. Crown polygons additionally
// carry the axis side in `waist`.
struct FeasiblePair {
    Mobius transform;
    std::vector<BoundaryPoint> vertices;
    std::vector<Geodesic> sides;
    int source_side = 0;
    int target_side = 0;
    std::optional<Geodesic> waist;

    FeasiblePair(Mobius t, std::vector<BoundaryPoint> v, std::vector<Geodesic> s, int source,
                 int target, std::optional<Geodesic> w = std::nullopt)
        : transform(std::move(t)),
          vertices(std::move(v)),
          sides(std::move(s)),
          source_side(source),
          target_side(target),
          waist(std::move(w)) {}
};

// Checks the feasibility invariants exactly and throws std::invalid_argument
// on violation:
//  - the paired side's endpoint set maps exactly onto the target side's;
//  - every vertex image lies in the closed boundary arc subtended by the
//    target side (the arc free of other vertices), i.e. T throws P entirely
//    across that side, so interior maps to exterior;
//  - for crown polygons, the waist endpoints are the transform's fixed points
//    and the waist crosses both paired side carriers.
void validate(const FeasiblePair& fp);

}  // namespace orthospec
