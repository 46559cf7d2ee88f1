#include <doctest.h>

#include <stdexcept>
#include <utility>

#include "orthospec/bigreal.hpp"
#include "orthospec/geometry.hpp"
#include "orthospec/models.hpp"
#include "orthospec/quadnum.hpp"

using orthospec::BigReal;
using orthospec::BoundaryPoint;
using orthospec::cross_ratio4;
using orthospec::Geodesic;
using orthospec::geodesic_cross_ratio;
using orthospec::infinity;
using orthospec::Mobius;
using orthospec::QuadNum;

namespace {

BoundaryPoint pt(long v) { return QuadNum(v); }
BoundaryPoint pt(const mpq_class& v) { return QuadNum(v); }

}  // namespace

TEST_CASE("Mobius action on boundary points") {
    const Mobius m(QuadNum(2), QuadNum(1), QuadNum(1), QuadNum(1));  // x -> (2x+1)/(x+1)
    CHECK(orthospec::apply(m, pt(0)) == BoundaryPoint(QuadNum(1)));
    CHECK(orthospec::apply(m, pt(1)) == BoundaryPoint(QuadNum(mpq_class(3, 2))));
    CHECK(orthospec::apply(m, infinity()) == BoundaryPoint(QuadNum(2)));
    CHECK(orthospec::apply(m, pt(-1)) == infinity());  // pole of the map

    CHECK(orthospec::apply(Mobius::identity(), pt(7)) == pt(7));
    CHECK(orthospec::apply(Mobius::identity(), infinity()) == infinity());
    CHECK(orthospec::apply(Mobius::translation(QuadNum(3)), pt(4)) == pt(7));
    CHECK(orthospec::apply(Mobius::translation(QuadNum(3)), infinity()) == infinity());

    CHECK_THROWS_AS(Mobius(QuadNum(1), QuadNum(2), QuadNum(2), QuadNum(4)),
                    std::invalid_argument);  // determinant zero
}

TEST_CASE("Mobius composition, inverse, and powers") {
    const Mobius m(QuadNum(2), QuadNum(1), QuadNum(1), QuadNum(1));
    const Mobius n(QuadNum(1), QuadNum(3), QuadNum(0), QuadNum(1));

    for (long v : {-3L, 0L, 2L, 10L}) {
        CHECK(orthospec::apply(m * n, pt(v)) == orthospec::apply(m, orthospec::apply(n, pt(v))));
    }

    // inverse() undoes the action even though entries stay unnormalized.
    const Mobius inv = m.inverse();
    for (long v : {-5L, 0L, 1L, 9L}) {
        CHECK(orthospec::apply(inv, orthospec::apply(m, pt(v))) == pt(v));
    }
    CHECK(orthospec::apply(m * inv, pt(5)) == pt(5));

    CHECK(m.power(0) == Mobius::identity());
    CHECK(m.power(1) == m);
    CHECK(m.power(4) == m * m * m * m);
    for (long v : {0L, 1L, 4L}) {
        CHECK(orthospec::apply(m.power(-3), orthospec::apply(m.power(3), pt(v))) == pt(v));
    }

    CHECK(m.det() == QuadNum(1));
    CHECK(m.tr() == QuadNum(3));
}

TEST_CASE("fixed points of hyperbolic transformations") {
    // x -> (2x+1)/(x+1) fixes the golden ratio pair (1 +- sqrt 5)/2.
    const Mobius m(QuadNum(2), QuadNum(1), QuadNum(1), QuadNum(1));
    const auto [big, small] = orthospec::fixed_points(m);
    CHECK(big == QuadNum(1, 1, 2, 5));
    CHECK(small == QuadNum(1, -1, 2, 5));
    CHECK(big > small);
    CHECK(orthospec::apply(m, BoundaryPoint(big)) == BoundaryPoint(big));
    CHECK(orthospec::apply(m, BoundaryPoint(small)) == BoundaryPoint(small));

    // Parabolic, elliptic, and c = 0 are all rejected.
    CHECK_THROWS_AS(orthospec::fixed_points(Mobius::translation(QuadNum(1))),
                    std::domain_error);
    CHECK_THROWS_AS(
        orthospec::fixed_points(Mobius(QuadNum(0), QuadNum(-1), QuadNum(1), QuadNum(0))),
        std::domain_error);
    CHECK_THROWS_AS(
        orthospec::fixed_points(Mobius(QuadNum(4), QuadNum(0), QuadNum(0), QuadNum(1))),
        std::domain_error);
}

TEST_CASE("cross_ratio4 values and invariance") {
    CHECK(cross_ratio4(pt(0), pt(1), pt(3), pt(2)) ==
          QuadNum(mpq_class(-1, 3)));
    // Slots two through four at (0, infinity, 1) pin the chart: [z,0,inf,1] = z.
    CHECK(cross_ratio4(pt(2), pt(0), infinity(), pt(1)) == QuadNum(2));
    CHECK(cross_ratio4(pt(-1), pt(0), infinity(), pt(1)) == QuadNum(-1));
    // A coincident pair among the allowed slots gives 0 or 1.
    CHECK(cross_ratio4(pt(0), pt(0), pt(2), pt(3)) == QuadNum(0));
    CHECK(cross_ratio4(pt(0), pt(1), pt(2), pt(2)) == QuadNum(0));
    CHECK(cross_ratio4(pt(0), pt(1), pt(1), pt(2)) == QuadNum(1));

    // Moebius maps preserve the cross ratio exactly.
    const Mobius m(QuadNum(3), QuadNum(1), QuadNum(2), QuadNum(1));
    const BoundaryPoint z1 = pt(-2), z2 = pt(0), z3 = pt(mpq_class(1, 2)), z4 = pt(5);
    const QuadNum before = cross_ratio4(z1, z2, z3, z4);
    const QuadNum after =
        cross_ratio4(orthospec::apply(m, z1), orthospec::apply(m, z2), orthospec::apply(m, z3), orthospec::apply(m, z4));
    CHECK(before == after);
    const QuadNum with_inf =
        cross_ratio4(orthospec::apply(m, pt(-2)), orthospec::apply(m, pt(0)), orthospec::apply(m, infinity()), orthospec::apply(m, pt(5)));
    CHECK(with_inf == cross_ratio4(pt(-2), pt(0), infinity(), pt(5)));

    // Degenerate denominators and too-degenerate tuples are rejected.
    CHECK_THROWS_AS((void)cross_ratio4(pt(1), pt(0), pt(1), pt(2)), std::domain_error);
    CHECK_THROWS_AS((void)cross_ratio4(pt(0), pt(1), pt(2), pt(1)), std::domain_error);
    CHECK_THROWS_AS((void)cross_ratio4(pt(0), pt(0), pt(0), pt(1)), std::invalid_argument);
}

TEST_CASE("Geodesic equality ignores endpoint order") {
    const Geodesic g(pt(0), pt(1));
    CHECK(g == Geodesic(pt(1), pt(0)));
    CHECK(!(g == Geodesic(pt(0), pt(2))));
    CHECK(g.has_endpoint(pt(0)));
    CHECK(g.has_endpoint(pt(1)));
    CHECK(!g.has_endpoint(pt(2)));
    const Geodesic vertical(pt(3), infinity());
    CHECK(vertical == Geodesic(infinity(), pt(3)));
    CHECK(vertical.has_endpoint(infinity()));
    CHECK_THROWS_AS(Geodesic(pt(2), pt(2)), std::invalid_argument);
    CHECK_THROWS_AS(Geodesic(infinity(), infinity()), std::invalid_argument);
}

TEST_CASE("geodesic_cross_ratio") {
    // Nested and disjoint pairs, computed by hand.
    CHECK(geodesic_cross_ratio(Geodesic(pt(0), pt(1)), Geodesic(pt(2), pt(3))) ==
          QuadNum(mpq_class(1, 4)));
    // Endpoint order within each geodesic is irrelevant.
    CHECK(geodesic_cross_ratio(Geodesic(pt(1), pt(0)), Geodesic(pt(3), pt(2))) ==
          QuadNum(mpq_class(1, 4)));
    CHECK(geodesic_cross_ratio(Geodesic(pt(2), pt(3)), Geodesic(pt(0), pt(1))) ==
          QuadNum(mpq_class(1, 4)));
    // One shared endpoint pins the value at 1.
    CHECK(geodesic_cross_ratio(Geodesic(pt(0), pt(1)), Geodesic(pt(1), pt(5))) ==
          QuadNum(1));
    CHECK(geodesic_cross_ratio(Geodesic(pt(0), infinity()), Geodesic(infinity(), pt(4))) ==
          QuadNum(1));
    // Crossing geodesics have no common perpendicular.
    CHECK_THROWS_AS(
        (void)geodesic_cross_ratio(Geodesic(pt(0), pt(2)), Geodesic(pt(1), pt(3))),
        std::domain_error);
    CHECK_THROWS_AS(
        (void)geodesic_cross_ratio(Geodesic(pt(0), infinity()), Geodesic(pt(-1), pt(3))),
        std::domain_error);
    // Identical geodesics are rejected too (all four factors degenerate).
    CHECK_THROWS_AS(
        (void)geodesic_cross_ratio(Geodesic(pt(0), pt(1)), Geodesic(pt(0), pt(1))),
        std::domain_error);

    // Moebius invariance of the geodesic cross ratio.
    const Mobius m(QuadNum(3), QuadNum(1), QuadNum(2), QuadNum(1));
    const Geodesic g1(pt(-3), pt(0));
    const Geodesic g2(pt(1), pt(mpq_class(7, 2)));
    CHECK(geodesic_cross_ratio(orthospec::apply(m, g1), orthospec::apply(m, g2)) ==
          geodesic_cross_ratio(g1, g2));
}

TEST_CASE("geodesic_distance matches the cross ratio formula and is invariant") {
    const long prec = 192;
    const Geodesic g1(pt(0), pt(1));
    const Geodesic g2(pt(2), pt(3));
    const BigReal d = orthospec::geodesic_distance(g1, g2, prec);
    // 2 arccosh(1/sqrt(1/4)) = 2 arccosh(2).
    const BigReal expected =
        orthospec::mul_2exp(acosh(BigReal::of_int(2, prec + 16)), 1).rounded_to(prec);
    CHECK(abs(d - expected) <= BigReal::pow2(-180, prec));
    CHECK(d.precision() == prec);

    const Mobius m(QuadNum(1), QuadNum(-4), QuadNum(1), QuadNum(2));
    const BigReal moved =
        orthospec::geodesic_distance(orthospec::apply(m, g1), orthospec::apply(m, g2), prec);
    CHECK(abs(moved - d) <= BigReal::pow2(-180, prec));
}

TEST_CASE("validate accepts every catalog model builder") {
    using namespace orthospec;
    const Mobius unimodular(QuadNum(3), QuadNum(2), QuadNum(1), QuadNum(1));
    CHECK_NOTHROW(validate(make_double_crown_i(QuadNum(3))));
    CHECK_NOTHROW(validate(make_double_crown_ii(unimodular)));
    CHECK_NOTHROW(validate(make_crown_i(QuadNum(3))));
    CHECK_NOTHROW(validate(make_crown_ii(unimodular)));
    CHECK_NOTHROW(validate(make_third_pair(QuadNum(3))));
    CHECK_NOTHROW(validate(make_parabolic({QuadNum(0), QuadNum(mpq_class(1, 2)), QuadNum(1)})));
    CHECK_NOTHROW(validate(make_even_period_cf(PeriodicCF({1, 2, 3, 1, 2, 3}))));
}

TEST_CASE("validate rejects tampered pairings") {
    using namespace orthospec;
    FeasiblePair fp = make_double_crown_i(QuadNum(3));

    // Break the side pairing: the transform no longer maps source onto target.
    FeasiblePair wrong_target = fp;
    wrong_target.target_side = wrong_target.source_side;
    CHECK_THROWS_AS(validate(wrong_target), std::invalid_argument);

    // Replace the transform with a translation that fixes no side.
    FeasiblePair wrong_transform = fp;
    wrong_transform.transform = Mobius::translation(QuadNum(1));
    CHECK_THROWS_AS(validate(wrong_transform), std::invalid_argument);

    // Swap in a waist that is not the transform's axis.
    FeasiblePair wrong_waist = make_crown_i(QuadNum(3));
    wrong_waist.waist = Geodesic(pt(0), infinity());
    CHECK_THROWS_AS(validate(wrong_waist), std::invalid_argument);
}
