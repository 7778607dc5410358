#include <semiconj/ramification.hpp>

#include <semiconj/errors.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace semiconj {

namespace {

// preimage polynomial of the whole root family of m: prod over roots v* of
// m of (num - v* den), up to a constant
Polynomial preimage_family_poly(const RationalFunction& f, const Polynomial& m) {
    int K = m.degree();
    Polynomial pre;
    Polynomial npow = Polynomial::one();
    std::vector<Polynomial> dpow(static_cast<size_t>(K) + 1);
    dpow[0] = Polynomial::one();
    for (int i = 1; i <= K; ++i)
        dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * f.den();
    for (int j = 0; j <= K; ++j) {
        pre = pre + npow * dpow[static_cast<size_t>(K - j)] * m.coeff(j);
        npow = npow * f.num();
    }
    return pre;
}

// Values polynomial V(v) = Res_z(u(z), num(z) - v den(z)) via interpolation.
// u must have no common roots with den.
Polynomial values_poly(const RationalFunction& f, const Polynomial& u) {
    int n = u.degree();
    if (n <= 0) return Polynomial::one();
    std::vector<Q> xs, ys;
    long cand = 0;
    Q drop = (f.num().degree() == f.den().degree())
                 ? f.num().leading() / f.den().leading()
                 : Q(0);
    bool check_drop = f.num().degree() == f.den().degree();
    while (static_cast<int>(xs.size()) < n + 1) {
        Q v(cand);
        cand = cand > 0 ? -cand : -cand + 1;  // 0, 1, -1, 2, -2, ...
        if (check_drop && v == drop) continue;  // keep deg_z(num - v den) maximal
        xs.push_back(v);
        ys.push_back(resultant(u, f.num() - f.den() * v));
    }
    return interpolate(xs, ys);
}

void sort_fiber(Branch& b) {
    std::sort(b.fiber.begin(), b.fiber.end(), std::greater<int>());
    std::sort(b.points.begin(), b.points.end(), [](const FiberPoint& x, const FiberPoint& y) {
        if (x.local_degree != y.local_degree) return x.local_degree > y.local_degree;
        return point_order(x.location, y.location);
    });
}

} // namespace

Orbifold::Orbifold(std::vector<std::pair<Point, int>> pts) : points_(std::move(pts)) {
    for (const auto& [p, n] : points_) {
        if (n < 2) throw bad_parameters("orbifold index must be >= 2");
    }
    for (size_t i = 0; i < points_.size(); ++i)
        for (size_t j = i + 1; j < points_.size(); ++j)
            if (same_point(points_[i].first, points_[j].first))
                throw bad_parameters("orbifold points must be pairwise distinct");
    std::sort(points_.begin(), points_.end(),
              [](const auto& a, const auto& b) { return point_order(a.first, b.first); });
}

int Orbifold::nu(const Point& p) const {
    for (const auto& [q, n] : points_)
        if (same_point(p, q)) return n;
    return 1;
}

std::vector<int> Orbifold::indices() const {
    std::vector<int> v;
    v.reserve(points_.size());
    for (const auto& [p, n] : points_) v.push_back(n);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<FiberPoint> fiber_over(const RationalFunction& f, const Point& value) {
    std::vector<FiberPoint> out;
    if (value.is_exact()) {
        const SpherePoint& v = value.exact();
        Polynomial fiber_poly = v.is_infinity() ? f.den() : f.num() - f.den() * v.finite_value();
        for (const auto& [mult, factor] : squarefree_decomposition(fiber_poly)) {
            SplitRoots split = split_roots(factor);
            for (auto& p : split.exact) out.push_back({Point(p), mult});
            for (auto& p : split.algebraic) out.push_back({Point(std::move(p)), mult});
        }
        if (f.evaluate(SpherePoint::infinity()) == v)
            out.push_back({Point::infinity(), f.local_degree(SpherePoint::infinity())});
        return out;
    }

    // algebraic value: the preimage polynomial of the sibling family, with
    // multiplicities = local degrees; then keep the points mapping to `value`
    const AlgebraicPoint& av = value.algebraic();
    Polynomial pre = preimage_family_poly(f, av.minpoly);
    std::vector<Point> siblings;
    for (const auto& r : isolate_roots(av.minpoly))
        siblings.push_back(Point(AlgebraicPoint{av.minpoly, r}));
    size_t self_index = 0;
    {
        bool found = false;
        for (size_t i = 0; i < siblings.size(); ++i)
            if (same_point(siblings[i], value)) {
                self_index = i;
                found = true;
                break;
            }
        if (!found) throw internal_inconsistency("value cluster not among its family roots");
    }
    for (const auto& [mult, factor] : squarefree_decomposition(pre)) {
        SplitRoots split = split_roots(factor);
        if (!split.exact.empty())
            throw internal_inconsistency("rational preimage of an algebraic value");
        for (auto& p : split.algebraic) {
            if (attribute_image(f, p, siblings) == self_index)
                out.push_back({Point(std::move(p)), mult});
        }
    }
    return out;
}

RamificationPortrait ramification_portrait(const RationalFunction& f) {
    int d = f.degree();
    if (d < 1) throw bad_parameters("ramification portrait requires degree >= 1");
    RamificationPortrait portrait;
    portrait.degree = d;

    const Polynomial& P = f.num();
    const Polynomial& Qd = f.den();
    Polynomial W = wronskian(f);
    if (W.is_zero()) throw internal_inconsistency("vanishing wronskian for a nonconstant map");

    bool fixes_infinity = P.degree() > Qd.degree();
    int e_inf = f.local_degree(SpherePoint::infinity());
    SpherePoint f_inf = f.evaluate(SpherePoint::infinity());

    // fiber over infinity, exact
    {
        Branch b;
        b.value = Point::infinity();
        for (const auto& [mult, factor] : squarefree_decomposition(Qd)) {
            SplitRoots split = split_roots(factor);
            for (auto& p : split.exact) b.points.push_back({Point(p), mult});
            for (auto& p : split.algebraic) b.points.push_back({Point(std::move(p)), mult});
            for (int i = 0; i < factor.degree(); ++i) b.fiber.push_back(mult);
        }
        if (fixes_infinity) {
            b.points.push_back({Point::infinity(), e_inf});
            b.fiber.push_back(e_inf);
        }
        if (std::any_of(b.fiber.begin(), b.fiber.end(), [](int e) { return e > 1; })) {
            sort_fiber(b);
            portrait.branches.push_back(std::move(b));
        }
    }

    // finite critical values
    std::vector<Q> exact_values;
    struct Family {
        Polynomial poly;  // squarefree, no rational roots
    };
    std::vector<Family> families;

    auto add_exact_value = [&](const Q& v) {
        if (std::find(exact_values.begin(), exact_values.end(), v) == exact_values.end())
            exact_values.push_back(v);
    };

    auto sqf_w = squarefree_decomposition(W);
    for (const auto& [mult, u] : sqf_w) {
        Polynomial u_fin = divexact(u, gcd(u, Qd));  // drop critical points that are poles
        if (u_fin.degree() <= 0) continue;
        Polynomial u_rest = u_fin;
        for (const auto& [r, m] : rational_roots(u_fin)) {
            (void)m;
            add_exact_value(f.evaluate_finite(r));
            u_rest = divexact(u_rest, Polynomial({-r, Q(1)}));
        }
        if (u_rest.degree() <= 0) continue;
        Polynomial v_poly = values_poly(f, u_rest);
        Polynomial v_sf = squarefree_part(v_poly);
        for (const auto& [rv, m] : rational_roots(v_sf)) {
            (void)m;
            add_exact_value(rv);
            v_sf = divexact(v_sf, Polynomial({-rv, Q(1)}));
        }
        if (v_sf.degree() > 0) families.push_back({v_sf.primitive()});
    }
    // value at infinity (finite case): critical only if e_inf >= 2
    if (!fixes_infinity && e_inf >= 2) add_exact_value(f_inf.finite_value());

    std::sort(exact_values.begin(), exact_values.end());
    for (const Q& v : exact_values) {
        Branch b;
        b.value = Point(SpherePoint(v));
        b.points = fiber_over(f, b.value);
        for (const auto& p : b.points) b.fiber.push_back(p.local_degree);
        if (std::any_of(b.fiber.begin(), b.fiber.end(), [](int e) { return e > 1; })) {
            sort_fiber(b);
            portrait.branches.push_back(std::move(b));
        }
    }

    // algebraic critical values: dedupe families via exact gcd splits, then
    // one branch per certified value cluster
    std::vector<Point> alg_values;
    for (const auto& fam : families) {
        Polynomial reduced = fam.poly;
        for (const auto& prev : families) {
            if (&prev == &fam) break;
            Polynomial g = gcd(reduced, prev.poly);
            if (g.degree() > 0) reduced = divexact(reduced, g);  // roots already covered
        }
        if (reduced.degree() <= 0) continue;
        for (const auto& r : isolate_roots(reduced))
            alg_values.push_back(Point(AlgebraicPoint{reduced, r}));
    }
    for (const auto& v : alg_values) {
        Branch b;
        b.value = v;
        b.points = fiber_over(f, v);
        for (const auto& p : b.points) b.fiber.push_back(p.local_degree);
        if (std::any_of(b.fiber.begin(), b.fiber.end(), [](int e) { return e > 1; })) {
            sort_fiber(b);
            portrait.branches.push_back(std::move(b));
        }
    }

    // invariants: fibers sum to the degree; Riemann-Hurwitz holds exactly
    long rh = 0;
    for (const auto& b : portrait.branches) {
        long s = std::accumulate(b.fiber.begin(), b.fiber.end(), 0L);
        if (s != d) throw internal_inconsistency("fiber does not sum to the degree");
        for (int e : b.fiber) rh += e - 1;
    }
    if (rh != 2L * d - 2)
        throw internal_inconsistency("Riemann-Hurwitz sum mismatch after clustering");
    return portrait;
}

std::vector<CriticalPoint> critical_points(const RationalFunction& f) {
    std::vector<CriticalPoint> out;
    RamificationPortrait portrait = ramification_portrait(f);
    for (auto& b : portrait.branches)
        for (auto& p : b.points)
            if (p.local_degree >= 2) out.push_back(p);
    return out;
}

std::pair<Orbifold, Orbifold> orbifold_pair(const RationalFunction& f) {
    if (f.degree() < 2) throw bad_parameters("orbifold_pair requires degree >= 2");
    RamificationPortrait portrait = ramification_portrait(f);
    std::vector<std::pair<Point, int>> o1_pts, o2_pts;
    for (const auto& b : portrait.branches) {
        long lcm = 1;
        for (int e : b.fiber) lcm = std::lcm(lcm, static_cast<long>(e));
        if (lcm <= 1) continue;
        o2_pts.emplace_back(b.value, static_cast<int>(lcm));
        for (const auto& p : b.points) {
            if (lcm % p.local_degree != 0)
                throw internal_inconsistency(
                    "induced orbifold: local degree does not divide the fiber lcm");
            int nu1 = static_cast<int>(lcm) / p.local_degree;
            if (nu1 > 1) o1_pts.emplace_back(p.location, nu1);
        }
    }
    return {Orbifold(std::move(o1_pts)), Orbifold(std::move(o2_pts))};
}

} // namespace semiconj
