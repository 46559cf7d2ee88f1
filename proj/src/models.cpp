#include "orthospec/models.hpp"

#include <stdexcept>
#include <utility>

namespace orthospec {

namespace {

const QuadNum& require_finite(const BoundaryPoint& p, const char* what) {
    if (is_infinite(p)) throw std::invalid_argument(what);
    return *p;
}

void require_above_two(const QuadNum& t) {
    if (compare(t, QuadNum(2)) <= 0) throw std::invalid_argument("model parameter t must exceed 2");
}

BoundaryPoint pt(QuadNum x) { return BoundaryPoint(std::move(x)); }

mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Geodesic waist_of(const Mobius& m) {
    auto fixed = fixed_points(m);
    return Geodesic(pt(fixed.first), pt(fixed.second));
}

void check_positive_unimodular(const Mobius& m) {
    if (m.a().sign() <= 0 || m.b().sign() <= 0 || m.c().sign() <= 0 || m.d().sign() <= 0)
        throw std::invalid_argument("model transform needs positive entries");
    if (!(m.det() == QuadNum(1))) throw std::invalid_argument("model transform needs determinant 1");
    require_above_two(m.tr());
}

// First `count` cross-ratio arguments of the orbit family pairing
// T^n(moving) with fixed, n = n_start, n_start+1, ...
std::vector<QuadNum> stream(const Mobius& T, const Geodesic& moving, const Geodesic& fixed,
                            long n_start, long count) {
    std::vector<QuadNum> out;
    out.reserve(static_cast<size_t>(count));
    Mobius Tn = T.power(n_start);
    for (long i = 0; i < count; ++i) {
        out.push_back(geodesic_cross_ratio(apply(Tn, moving), fixed));
        Tn = Tn * T;
    }
    return out;
}

}  // namespace

mpq_class rhs_pi2_coefficient(const SurfaceDescriptor& surface) {
    mpq_class chi6 = 6 * surface.euler_characteristic;
    mpq_class n(surface.boundary_cusps);
    mpq_class result = surface.enlarged ? mpq_class((n - chi6) / 12) : mpq_class(-(chi6 + n) / 12);
    result.canonicalize();
    return result;
}

FeasiblePair make_double_crown_i(const QuadNum& t) {
    require_above_two(t);
    Mobius T(t, QuadNum(-1), QuadNum(1), QuadNum(0));
    QuadNum one(1);
    std::vector<BoundaryPoint> vertices{pt(one), pt(t - one), pt(t), infinity()};
    std::vector<Geodesic> sides{Geodesic(pt(one), pt(t - one)), Geodesic(pt(t - one), pt(t)),
                                Geodesic(pt(t), infinity()), Geodesic(infinity(), pt(one))};
    return FeasiblePair(T, std::move(vertices), std::move(sides), 3, 1);
}

FeasiblePair make_crown_i(const QuadNum& t) {
    require_above_two(t);
    Mobius T(t, QuadNum(-1), QuadNum(1), QuadNum(0));
    QuadNum one(1);
    std::vector<BoundaryPoint> vertices{pt(t), infinity()};
    std::vector<Geodesic> sides{Geodesic(pt(one), infinity()), Geodesic(pt(t - one), pt(t)),
                                Geodesic(pt(t), infinity())};
    return FeasiblePair(T, std::move(vertices), std::move(sides), 0, 1, waist_of(T));
}

FeasiblePair make_double_crown_ii(const Mobius& transform) {
    check_positive_unimodular(transform);
    QuadNum left = transform.b() / transform.d();   // image of 0
    QuadNum right = transform.a() / transform.c();  // image of infinity
    QuadNum zero(0);
    std::vector<BoundaryPoint> vertices{pt(zero), pt(left), pt(right), infinity()};
    std::vector<Geodesic> sides{Geodesic(pt(zero), pt(left)), Geodesic(pt(left), pt(right)),
                                Geodesic(pt(right), infinity()), Geodesic(infinity(), pt(zero))};
    return FeasiblePair(transform, std::move(vertices), std::move(sides), 3, 1);
}

FeasiblePair make_crown_ii(const Mobius& transform) {
    check_positive_unimodular(transform);
    QuadNum left = transform.b() / transform.d();
    QuadNum right = transform.a() / transform.c();
    QuadNum zero(0);
    std::vector<BoundaryPoint> vertices{pt(right), infinity()};
    std::vector<Geodesic> sides{Geodesic(pt(zero), infinity()), Geodesic(pt(left), pt(right)),
                                Geodesic(pt(right), infinity())};
    return FeasiblePair(transform, std::move(vertices), std::move(sides), 0, 1, waist_of(transform));
}

FeasiblePair make_third_pair(const QuadNum& t) {
    require_above_two(t);
    Mobius T(t, QuadNum(-1), QuadNum(1), QuadNum(0));
    QuadNum two(2);
    QuadNum lo = two / t;
    QuadNum hi = t / two;
    std::vector<BoundaryPoint> vertices{pt(lo), pt(hi), pt(t), infinity()};
    std::vector<Geodesic> sides{Geodesic(pt(lo), pt(hi)), Geodesic(pt(hi), pt(t)),
                                Geodesic(pt(t), infinity()), Geodesic(infinity(), pt(lo))};
    return FeasiblePair(T, std::move(vertices), std::move(sides), 3, 1);
}

FeasiblePair make_parabolic(const std::vector<QuadNum>& verts) {
    if (verts.size() < 2) throw std::invalid_argument("parabolic model needs at least two finite vertices");
    if (!verts.front().is_zero()) throw std::invalid_argument("parabolic model vertices must start at 0");
    if (!(verts.back() == QuadNum(1))) throw std::invalid_argument("parabolic model vertices must end at 1");
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        if (compare(verts[i], verts[i + 1]) >= 0)
            throw std::invalid_argument("parabolic model vertices must be strictly increasing");
    Mobius T = Mobius::translation(QuadNum(1));
    std::vector<BoundaryPoint> vertices;
    for (const QuadNum& v : verts) vertices.push_back(pt(v));
    vertices.push_back(infinity());
    std::vector<Geodesic> sides;
    for (size_t i = 0; i + 1 < verts.size(); ++i) sides.emplace_back(pt(verts[i]), pt(verts[i + 1]));
    sides.emplace_back(pt(verts.back()), infinity());
    sides.emplace_back(infinity(), pt(verts.front()));
    const int nsides = static_cast<int>(sides.size());
    return FeasiblePair(T, std::move(vertices), std::move(sides), nsides - 1, nsides - 2);
}

FeasiblePair make_even_period_cf(const PeriodicCF& cf) {
    PeriodicCF ecf(cf.even_quotients());
    const long l = ecf.period();
    auto r = [&ecf](long m) -> BoundaryPoint {
        if (m == -1) return infinity();
        auto [p, q] = ecf.convergent(m);
        return pt(QuadNum(mpq_class(p, q)));
    };
    auto [pl1, ql1] = ecf.convergent(l - 1);
    auto [pl2, ql2] = ecf.convergent(l - 2);
    Mobius A{QuadNum(pl1), QuadNum(pl2), QuadNum(ql1), QuadNum(ql2)};
    QuadNum alpha = value(ecf);
    Geodesic waist(pt(alpha), pt(galois_conjugate(alpha)));

    std::vector<BoundaryPoint> vertices;
    vertices.push_back(pt(QuadNum(0)));
    for (long m = l - 1; m >= 1; m -= 2) vertices.push_back(r(m));
    vertices.push_back(infinity());

    std::vector<Geodesic> sides;
    sides.emplace_back(r(l - 2), r(l - 1));  // target: tine side through v_1
    for (long m = l - 1; m >= 1; m -= 2) sides.emplace_back(r(m), r(m - 2));
    sides.emplace_back(pt(QuadNum(0)), infinity());  // source: side through v_0
    const int nsides = static_cast<int>(sides.size());
    return FeasiblePair(A, std::move(vertices), std::move(sides), nsides - 1, 0, std::move(waist));
}

namespace {

bool same_pair(const FeasiblePair& x, const FeasiblePair& y) {
    if (!(x.transform == y.transform)) return false;
    if (x.vertices.size() != y.vertices.size() || x.sides.size() != y.sides.size()) return false;
    for (size_t i = 0; i < x.vertices.size(); ++i) {
        const BoundaryPoint& p = x.vertices[i];
        const BoundaryPoint& q = y.vertices[i];
        if (is_infinite(p) != is_infinite(q)) return false;
        if (!is_infinite(p) && !(*p == *q)) return false;
    }
    for (size_t i = 0; i < x.sides.size(); ++i)
        if (!(x.sides[i] == y.sides[i])) return false;
    if (x.source_side != y.source_side || x.target_side != y.target_side) return false;
    if (x.waist.has_value() != y.waist.has_value()) return false;
    if (x.waist && !(*x.waist == *y.waist)) return false;
    return true;
}

// Continued fraction quotients of p/q > 1 with the expansion length forced to
// `length` (the canonical expansion and its last-quotient split cover both
// parities). Throws when neither form has the requested length.
std::vector<long> quotients_of_length(mpz_class p, mpz_class q, long length) {
    std::vector<long> quotients;
    while (q != 0) {
        mpz_class a_big, rem;
        mpz_fdiv_qr(a_big.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (!a_big.fits_slong_p()) throw std::invalid_argument("continued fraction quotient overflow");
        quotients.push_back(a_big.get_si());
        p = q;
        q = rem;
    }
    if (static_cast<long>(quotients.size()) == length) return quotients;
    if (static_cast<long>(quotients.size()) == length - 1 && quotients.back() >= 2) {
        quotients.back() -= 1;
        quotients.push_back(1);
        return quotients;
    }
    throw std::invalid_argument("transform is not the holonomy of a continued fraction of this period");
}

FeasiblePair rebuild(const FeasiblePair& fp, ModelKind model) {
    switch (model) {
        case ModelKind::double_crown_i:
            if (fp.vertices.size() != 4) throw std::invalid_argument("pair does not match the model");
            return make_double_crown_i(require_finite(fp.vertices[2], "pair does not match the model"));
        case ModelKind::crown_i:
            if (fp.vertices.size() != 2) throw std::invalid_argument("pair does not match the model");
            return make_crown_i(require_finite(fp.vertices[0], "pair does not match the model"));
        case ModelKind::double_crown_ii:
            return make_double_crown_ii(fp.transform);
        case ModelKind::crown_ii:
            return make_crown_ii(fp.transform);
        case ModelKind::third_pair:
            if (fp.vertices.size() != 4) throw std::invalid_argument("pair does not match the model");
            return make_third_pair(require_finite(fp.vertices[2], "pair does not match the model"));
        case ModelKind::parabolic: {
            if (fp.vertices.size() < 3) throw std::invalid_argument("pair does not match the model");
            std::vector<QuadNum> verts;
            for (size_t i = 0; i + 1 < fp.vertices.size(); ++i)
                verts.push_back(require_finite(fp.vertices[i], "pair does not match the model"));
            return make_parabolic(verts);
        }
        case ModelKind::even_period_cf: {
            const long l = 2 * (static_cast<long>(fp.vertices.size()) - 2);
            if (l < 2) throw std::invalid_argument("pair does not match the model");
            const QuadNum& a = fp.transform.a();
            const QuadNum& c = fp.transform.c();
            if (!a.is_rational() || !c.is_rational())
                throw std::invalid_argument("pair does not match the model");
            mpq_class pq = a.to_rational() / c.to_rational();
            pq.canonicalize();
            return make_even_period_cf(PeriodicCF(quotients_of_length(pq.get_num(), pq.get_den(), l)));
        }
    }
    throw std::invalid_argument("unknown model");
}

}  // namespace

ModelTerms enumerate_terms(const FeasiblePair& fp, ModelKind model, long count) {
    if (count < 0) throw std::invalid_argument("term count must be nonnegative");
    if (!same_pair(fp, rebuild(fp, model))) throw std::invalid_argument("pair does not match the model");
    validate(fp);

    ModelTerms result;
    const Mobius& T = fp.transform;
    switch (model) {
        case ModelKind::double_crown_i:
        case ModelKind::third_pair:
        case ModelKind::double_crown_ii: {
            const Geodesic& near = fp.sides[0];   // side opposite the vertex at infinity
            const Geodesic& far = fp.sides[2];    // side reaching infinity
            // Orbit families: far against its own orbit, near against its own
            // orbit, then the two mixed directions, then the isolated pair.
            result.families.push_back(stream(T, far, far, 2, count));
            result.families.push_back(stream(T, near, near, 2, count));
            result.families.push_back(stream(T, far, near, 1, count));
            result.families.push_back(stream(T, near, far, 1, count));
            result.finite.push_back(geodesic_cross_ratio(near, far));
            result.surface = {mpq_class(-1), 2, false};
            break;
        }
        case ModelKind::crown_i:
        case ModelKind::crown_ii: {
            const Geodesic& far = fp.sides[2];
            result.families.push_back(stream(T, far, far, 2, count));
            result.finite.push_back(geodesic_cross_ratio(*fp.waist, far));
            result.surface = {frac(-1, 2), 1, false};
            break;
        }
        case ModelKind::parabolic: {
            const long bottoms = static_cast<long>(fp.sides.size()) - 2;
            for (long i = 0; i < bottoms; ++i)
                for (long j = 0; j < bottoms; ++j)
                    result.families.push_back(
                        stream(T, fp.sides[static_cast<size_t>(i)], fp.sides[static_cast<size_t>(j)], 1, count));
            for (long i = 0; i < bottoms; ++i)
                for (long j = 0; j < i; ++j)
                    result.finite.push_back(geodesic_cross_ratio(fp.sides[static_cast<size_t>(i)],
                                                                 fp.sides[static_cast<size_t>(j)]));
            const long n = static_cast<long>(fp.vertices.size());  // polygon vertex count
            result.surface = {frac(2 - n, 2), n - 2, true};
            break;
        }
        case ModelKind::even_period_cf: {
            const long half = static_cast<long>(fp.vertices.size()) - 2;  // l/2 tine sides
            auto side = [&fp, half](long i) -> const Geodesic& {
                return fp.sides[static_cast<size_t>(half - i)];  // e_{2i+1}
            };
            for (long i = 0; i < half; ++i)
                for (long j = 0; j < half; ++j) result.families.push_back(stream(T, side(i), side(j), 1, count));
            for (long i = 0; i < half; ++i)
                for (long j = 0; j < i; ++j) result.finite.push_back(geodesic_cross_ratio(side(i), side(j)));
            for (long m = 0; m < half; ++m) result.finite.push_back(geodesic_cross_ratio(*fp.waist, side(m)));
            result.surface = {frac(-half, 2), half, true};
            break;
        }
    }
    return result;
}

}  // namespace orthospec
