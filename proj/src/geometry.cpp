#include "orthospec/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace orthospec {

namespace {

bool bp_equal(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (is_infinite(p) || is_infinite(q)) return is_infinite(p) && is_infinite(q);
    return *p == *q;
}

// Strict order used to arrange boundary points cyclically: finite points
// ascending, infinity closing the circle.
bool bp_less(const BoundaryPoint& p, const BoundaryPoint& q) {
    if (is_infinite(p)) return false;
    if (is_infinite(q)) return true;
    return compare(*p, *q) < 0;
}

// Orientation of a triple of distinct boundary points: +1 when q lies on the
// ascending arc from p to r (with infinity as the wrap point), -1 otherwise.
int orient(const BoundaryPoint& p, const BoundaryPoint& q, const BoundaryPoint& r) {
    if (bp_equal(p, q) || bp_equal(q, r) || bp_equal(p, r))
        throw std::invalid_argument("orientation needs three distinct boundary points");
    // Rotate so that infinity, if present, sits last; rotations preserve
    // cyclic orientation.
    if (is_infinite(p)) return orient(q, r, p);
    if (is_infinite(q)) return orient(r, p, q);
    if (is_infinite(r)) return compare(*p, *q) < 0 ? 1 : -1;
    const bool pq = compare(*p, *q) < 0;
    const bool qr = compare(*q, *r) < 0;
    const bool rp = compare(*r, *p) < 0;
    return (pq && qr) || (qr && rp) || (rp && pq) ? 1 : -1;
}

}  // namespace

Mobius::Mobius(QuadNum a, QuadNum b, QuadNum c, QuadNum d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw std::invalid_argument("Mobius transformation needs nonzero determinant");
}

Mobius Mobius::identity() { return Mobius(QuadNum(1), QuadNum(0), QuadNum(0), QuadNum(1)); }

Mobius Mobius::translation(const QuadNum& shift) {
    return Mobius(QuadNum(1), shift, QuadNum(0), QuadNum(1));
}

Mobius Mobius::operator*(const Mobius& rhs) const {
    return Mobius(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                  c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

Mobius Mobius::inverse() const { return Mobius(d_, QuadNum(0) - b_, QuadNum(0) - c_, a_); }

Mobius Mobius::power(long n) const {
    Mobius base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
    Mobius result = identity();
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BoundaryPoint apply(const Mobius& m, const BoundaryPoint& p) {
    if (is_infinite(p)) {
        if (m.c().is_zero()) return infinity();
        return m.a() / m.c();
    }
    QuadNum den = m.c() * *p + m.d();
    if (den.is_zero()) return infinity();
    return (m.a() * *p + m.b()) / den;
}

QuadNum cross_ratio4(const BoundaryPoint& z1, const BoundaryPoint& z2, const BoundaryPoint& z3,
                     const BoundaryPoint& z4) {
    const std::array<const BoundaryPoint*, 4> z{&z1, &z2, &z3, &z4};
    int distinct = 0;
    for (int i = 0; i < 4; ++i) {
        bool seen = false;
        for (int j = 0; j < i; ++j) seen = seen || bp_equal(*z[i], *z[j]);
        if (!seen) ++distinct;
    }
    if (distinct < 3) throw std::invalid_argument("cross ratio needs at least three distinct points");
    // Coincidences of a full projective orbit collapse to 0, 1 or infinity.
    if (bp_equal(z1, z3) || bp_equal(z2, z4))
        throw std::domain_error("cross ratio is infinite for this configuration");
    if (bp_equal(z1, z2) || bp_equal(z3, z4)) return QuadNum(0);
    if (bp_equal(z1, z4) || bp_equal(z2, z3)) return QuadNum(1);
    // Four distinct points, hence at most one of them infinite. The two
    // factors containing the infinite point cancel against each other.
    if (is_infinite(z1)) return (*z4 - *z3) / (*z4 - *z2);
    if (is_infinite(z2)) return (*z4 - *z3) / (*z1 - *z3);
    if (is_infinite(z3)) return (*z1 - *z2) / (*z4 - *z2);
    if (is_infinite(z4)) return (*z1 - *z2) / (*z1 - *z3);
    return ((*z1 - *z2) * (*z4 - *z3)) / ((*z1 - *z3) * (*z4 - *z2));
}

Geodesic::Geodesic(BoundaryPoint e1, BoundaryPoint e2) : first_(std::move(e1)), second_(std::move(e2)) {
    if (bp_equal(first_, second_)) throw std::invalid_argument("geodesic endpoints must be distinct");
}

bool Geodesic::operator==(const Geodesic& rhs) const {
    return (bp_equal(first_, rhs.first_) && bp_equal(second_, rhs.second_)) ||
           (bp_equal(first_, rhs.second_) && bp_equal(second_, rhs.first_));
}

bool Geodesic::has_endpoint(const BoundaryPoint& p) const {
    return bp_equal(first_, p) || bp_equal(second_, p);
}

Geodesic apply(const Mobius& m, const Geodesic& g) {
    return Geodesic(apply(m, g.first()), apply(m, g.second()));
}

namespace {

struct Labeled {
    const BoundaryPoint* point;
    int label;
};

// Arranges the four endpoints of two geodesics (no shared endpoints) in
// cyclic boundary order. Returns true when the endpoint labels alternate,
// i.e. the geodesics cross.
bool arrange(const Geodesic& g1, const Geodesic& g2, std::array<Labeled, 4>& out) {
    out = {Labeled{&g1.first(), 0}, Labeled{&g1.second(), 0}, Labeled{&g2.first(), 1},
           Labeled{&g2.second(), 1}};
    std::sort(out.begin(), out.end(),
              [](const Labeled& x, const Labeled& y) { return bp_less(*x.point, *y.point); });
    return out[0].label != out[1].label && out[1].label != out[2].label;
}

bool geodesics_cross(const Geodesic& g1, const Geodesic& g2) {
    if (g1.has_endpoint(g2.first()) || g1.has_endpoint(g2.second())) return false;
    std::array<Labeled, 4> arranged;
    return arrange(g1, g2, arranged);
}

}  // namespace

QuadNum geodesic_cross_ratio(const Geodesic& g1, const Geodesic& g2) {
    if (g1 == g2) throw std::domain_error("cross ratio of a geodesic with itself");
    int shared = (g1.has_endpoint(g2.first()) ? 1 : 0) + (g1.has_endpoint(g2.second()) ? 1 : 0);
    if (shared >= 1) return QuadNum(1);
    std::array<Labeled, 4> arranged;
    if (arrange(g1, g2, arranged)) throw std::domain_error("geodesics cross");
    // Rotate the cyclic arrangement so the two endpoints of one geodesic come
    // first; the resulting ordered cross ratio lies in (0,1).
    int start = 0;
    for (int i = 0; i < 4; ++i) {
        if (arranged[i].label == arranged[(i + 1) % 4].label &&
            arranged[(i + 3) % 4].label != arranged[i].label) {
            start = i;
            break;
        }
    }
    return cross_ratio4(*arranged[start].point, *arranged[(start + 1) % 4].point,
                        *arranged[(start + 2) % 4].point, *arranged[(start + 3) % 4].point);
}

BigReal geodesic_distance(const Geodesic& g1, const Geodesic& g2, long precision) {
    require_precision(precision);
    QuadNum cr = geodesic_cross_ratio(g1, g2);
    const long work = precision + 8;
    BigReal x = to_real(cr, work);
    BigReal dist = acosh(BigReal::of_int(1, work) / sqrt(x));
    return mul_2exp(dist, 1).rounded_to(precision);
}

std::pair<QuadNum, QuadNum> fixed_points(const Mobius& m) {
    if (m.c().is_zero())
        throw std::domain_error("transformation fixes infinity; no finite axis");
    QuadNum diff = m.a() - m.d();
    QuadNum disc = diff * diff + QuadNum(4) * m.b() * m.c();
    int s = disc.sign();
    if (s < 0) throw std::domain_error("elliptic transformation has no boundary fixed points");
    if (s == 0) throw std::domain_error("parabolic transformation has a single fixed point");
    std::optional<QuadNum> root = exact_sqrt(disc);
    if (!root) throw std::domain_error("fixed points lie outside the entry field");
    QuadNum two_c = QuadNum(2) * m.c();
    QuadNum x1 = (diff + *root) / two_c;
    QuadNum x2 = (diff - *root) / two_c;
    if (compare(x1, x2) < 0) std::swap(x1, x2);
    return {x1, x2};
}

void validate(const FeasiblePair& fp) {
    const auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
    const long nsides = static_cast<long>(fp.sides.size());
    if (nsides < 2) fail("feasible pair needs at least two sides");
    if (fp.source_side < 0 || fp.source_side >= nsides || fp.target_side < 0 ||
        fp.target_side >= nsides || fp.source_side == fp.target_side)
        fail("paired side indices out of range");

    const Geodesic& source = fp.sides[static_cast<size_t>(fp.source_side)];
    const Geodesic& target = fp.sides[static_cast<size_t>(fp.target_side)];

    // The transform must carry the source side's endpoint set exactly onto
    // the target side's.
    BoundaryPoint img1 = apply(fp.transform, source.first());
    BoundaryPoint img2 = apply(fp.transform, source.second());
    if (!(Geodesic(img1, img2) == target)) fail("transform does not map the paired side onto its target");

    // Gather the boundary points of the polygon: all listed vertices and all
    // side carrier endpoints. Waist endpoints stay out; the waist pokes
    // through both paired sides and is constrained separately below.
    std::vector<const BoundaryPoint*> polygon_points;
    for (const BoundaryPoint& v : fp.vertices) polygon_points.push_back(&v);
    for (const Geodesic& s : fp.sides) {
        polygon_points.push_back(&s.first());
        polygon_points.push_back(&s.second());
    }

    // Determine on which of the two arcs cut out by the target side the
    // polygon lies. All of its points must sit on one arc.
    int polygon_sign = 0;
    for (const BoundaryPoint* p : polygon_points) {
        if (target.has_endpoint(*p)) continue;
        int s = orient(target.first(), *p, target.second());
        if (polygon_sign == 0) polygon_sign = s;
        if (s != polygon_sign) fail("target side does not bound the polygon");
    }
    if (polygon_sign == 0) fail("polygon has no points away from the target side");

    // Every polygon point must map into the closed arc on the far side of
    // the target: that is what throws the interior onto the exterior.
    for (const BoundaryPoint* p : polygon_points) {
        BoundaryPoint w = apply(fp.transform, *p);
        if (target.has_endpoint(w)) continue;
        if (orient(target.first(), w, target.second()) == polygon_sign)
            fail("transform does not move the polygon across the target side");
    }

    if (fp.waist) {
        auto fixed = fixed_points(fp.transform);
        if (!(Geodesic(BoundaryPoint(fixed.first), BoundaryPoint(fixed.second)) == *fp.waist))
            fail("waist endpoints are not the transform's fixed points");
        if (!geodesics_cross(*fp.waist, source) || !geodesics_cross(*fp.waist, target))
            fail("waist does not cross both paired sides");
    }
}

}  // namespace orthospec
