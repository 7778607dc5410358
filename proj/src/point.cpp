#include <semiconj/point.hpp>

#include <semiconj/errors.hpp>

#include <sstream>

namespace semiconj {

std::complex<double> Point::approx() const {
    if (is_exact()) {
        if (exact().is_infinity())
            return {std::numeric_limits<double>::infinity(), 0.0};
        return {exact().finite_value().get_d(), 0.0};
    }
    return algebraic().root.center.to_double();
}

std::string Point::to_string() const {
    if (is_exact()) return exact().to_string();
    std::ostringstream os;
    auto c = algebraic().root.center.to_double();
    os << "alg(" << algebraic().minpoly.to_string() << " near " << c.real();
    if (c.imag() >= 0) os << "+" << c.imag() << "i)";
    else os << c.imag() << "i)";
    return os.str();
}

namespace {

bool disks_disjoint(const IsolatedRoot& a, const IsolatedRoot& b) {
    Q d2 = (a.center - b.center).norm2();
    return d2 > 2 * (a.radius2 + b.radius2);
}

} // namespace

bool same_point(const Point& a, const Point& b) {
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    if (a.is_exact() != b.is_exact()) return false;  // minpolys carry no rational roots
    const AlgebraicPoint& pa = a.algebraic();
    const AlgebraicPoint& pb = b.algebraic();
    if (disks_disjoint(pa.root, pb.root)) return false;
    Polynomial g = gcd(pa.minpoly, pb.minpoly);
    if (g.degree() == 0) return false;
    // Both certified roots must be roots of g for equality to be possible.
    if (!certified_is_root_of(pa.minpoly, pa.root, g)) return false;
    if (!certified_is_root_of(pb.minpoly, pb.root, g)) return false;
    // Both are roots of the squarefree g; compare against g's isolating disks.
    auto groots = isolate_roots(g);
    Q gap2(-1);
    for (size_t i = 0; i < groots.size(); ++i)
        for (size_t j = i + 1; j < groots.size(); ++j) {
            Q d2 = (groots[i].center - groots[j].center).norm2();
            if (gap2 < 0 || d2 < gap2) gap2 = d2;
        }
    if (groots.size() == 1) return true;  // a single common root: both equal it
    Q target = gap2 / 64;
    IsolatedRoot ra = pa.root, rb = pb.root;
    refine_root(pa.minpoly, ra, target);
    refine_root(pb.minpoly, rb, target);
    // Attribute each refined root to the unique g-disk it can share a root with.
    auto attribute = [&](const IsolatedRoot& r) -> int {
        int hit = -1;
        for (size_t k = 0; k < groots.size(); ++k) {
            if (!disks_disjoint(r, groots[k])) {
                if (hit >= 0) return -2;  // ambiguous
                hit = static_cast<int>(k);
            }
        }
        return hit;
    };
    int ka = attribute(ra), kb = attribute(rb);
    if (ka < 0 || kb < 0) {
        // tighten the g-disks once, then give up honestly
        for (auto& gr : groots) refine_root(g, gr, target / 64);
        ka = attribute(ra);
        kb = attribute(rb);
        if (ka < 0 || kb < 0) throw cluster_ambiguity("point comparison undecided");
    }
    return ka == kb;
}

bool maps_to_exact(const RationalFunction& f, const Point& p, const SpherePoint& v) {
    if (p.is_exact()) return f.evaluate(p.exact()) == v;
    // f maps only finitely many points anywhere; p is a finite algebraic point.
    Polynomial fiber = v.is_infinity() ? f.den() : f.num() - f.den() * v.finite_value();
    if (fiber.is_zero()) return true;  // constant map onto v
    const AlgebraicPoint& ap = p.algebraic();
    return certified_is_root_of(ap.minpoly, ap.root, squarefree_part(fiber));
}

bool maps_into_family(const RationalFunction& f, const Point& p, const Polynomial& m) {
    // preimage polynomial of the family: Res_v(m(v), num - v den) = sum m_j num^j den^{K-j}
    int K = m.degree();
    Polynomial pre;
    Polynomial npow = Polynomial::one();
    std::vector<Polynomial> dpow(static_cast<size_t>(K) + 1);
    dpow[0] = Polynomial::one();
    for (int i = 1; i <= K; ++i) dpow[static_cast<size_t>(i)] = dpow[static_cast<size_t>(i - 1)] * f.den();
    for (int j = 0; j <= K; ++j) {
        pre = pre + npow * dpow[static_cast<size_t>(K - j)] * m.coeff(j);
        npow = npow * f.num();
    }
    if (p.is_exact()) {
        if (p.exact().is_infinity()) return false;  // f(inf) is rational or infinity
        return pre.evaluate(p.exact().finite_value()) == 0;
    }
    const AlgebraicPoint& ap = p.algebraic();
    if (pre.is_zero()) return true;
    return certified_is_root_of(ap.minpoly, ap.root, squarefree_part(pre));
}

bool maps_to_point(const RationalFunction& f, const Point& src, const Point& dst) {
    if (dst.is_exact()) return maps_to_exact(f, src, dst.exact());
    if (src.is_exact()) return false;  // f(exact) is exact, dst is algebraic
    const Polynomial& m = dst.algebraic().minpoly;
    if (!maps_into_family(f, src, m)) return false;
    std::vector<Point> siblings;
    for (const auto& r : isolate_roots(m)) siblings.push_back(Point(AlgebraicPoint{m, r}));
    if (siblings.size() == 1) return true;
    size_t idx = attribute_image(f, src.algebraic(), siblings);
    return same_point(siblings[idx], dst);
}

int local_degree_at(const RationalFunction& f, const Point& p) {
    if (p.is_exact()) return f.local_degree(p.exact());
    const AlgebraicPoint& ap = p.algebraic();
    Polynomial w = wronskian(f);
    for (const auto& [mult, factor] : squarefree_decomposition(w)) {
        if (certified_is_root_of(ap.minpoly, ap.root, factor)) return mult + 1;
    }
    return 1;
}

SplitRoots split_roots(const Polynomial& squarefree) {
    SplitRoots out;
    Polynomial rest = squarefree.primitive();
    for (const auto& [r, mult] : rational_roots(rest)) {
        (void)mult;  // squarefree input: multiplicity 1
        out.exact.emplace_back(r);
        rest = divexact(rest, Polynomial({-r, Q(1)}));
    }
    rest = rest.primitive();
    if (rest.degree() > 0) {
        for (auto& root : isolate_roots(rest)) {
            AlgebraicPoint ap;
            ap.minpoly = rest;
            ap.root = std::move(root);
            out.algebraic.push_back(std::move(ap));
        }
    }
    return out;
}

size_t attribute_image(const RationalFunction& f, const AlgebraicPoint& source,
                       const std::vector<Point>& candidates) {
    AlgebraicPoint work = source;
    for (int round = 0;; ++round) {
        std::complex<double> img = f.evaluate(work.root.center.to_double());
        size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity(), second = best_d;
        for (size_t i = 0; i < candidates.size(); ++i) {
            double d = std::abs(img - candidates[i].approx());
            if (d < best_d) {
                second = best_d;
                best_d = d;
                best = i;
            } else if (d < second) {
                second = d;
            }
        }
        if (candidates.size() == 1 || best_d * 16 < second) return best;
        if (round >= 6) throw cluster_ambiguity("could not attribute an image to a value cluster");
        refine_root(work.minpoly, work.root, work.root.radius2 / Q(Int(1) << 40));
    }
}

bool point_order(const Point& a, const Point& b) {
    if (a.is_exact() != b.is_exact()) return a.is_exact();
    if (a.is_exact()) {
        return a.exact() < b.exact();
    }
    const auto& pa = a.algebraic();
    const auto& pb = b.algebraic();
    if (!(pa.minpoly == pb.minpoly)) {
        if (pa.minpoly.degree() != pb.minpoly.degree())
            return pa.minpoly.degree() < pb.minpoly.degree();
        const auto& ca = pa.minpoly.coeffs();
        const auto& cb = pb.minpoly.coeffs();
        for (size_t i = 0; i < ca.size(); ++i)
            if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    if (pa.root.center.re != pb.root.center.re) return pa.root.center.re < pb.root.center.re;
    return pa.root.center.im < pb.root.center.im;
}

} // namespace semiconj
