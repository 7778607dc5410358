#include <semiconj/orbifold.hpp>

#include <semiconj/errors.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semiconj {

bool Signature::spherical() const {
    switch (tag) {
        case Tag::Unramified:
        case Tag::Cyclic:
        case Tag::Dihedral:
        case Tag::Tetrahedral:
        case Tag::Octahedral:
        case Tag::Icosahedral:
            return true;
        default:
            return false;
    }
}

bool Signature::euclidean() const {
    switch (tag) {
        case Tag::Euclid2222:
        case Tag::Euclid333:
        case Tag::Euclid244:
        case Tag::Euclid236:
            return true;
        default:
            return false;
    }
}

std::string Signature::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) os << ",";
        os << indices[i];
    }
    os << "):";
    switch (tag) {
        case Tag::Unramified: os << "unramified"; break;
        case Tag::BadOrbifold: os << "bad"; break;
        case Tag::Cyclic: os << "cyclic"; break;
        case Tag::Dihedral: os << "dihedral"; break;
        case Tag::Tetrahedral: os << "tetrahedral"; break;
        case Tag::Octahedral: os << "octahedral"; break;
        case Tag::Icosahedral: os << "icosahedral"; break;
        case Tag::Euclid2222:
        case Tag::Euclid333:
        case Tag::Euclid244:
        case Tag::Euclid236: os << "euclidean"; break;
        case Tag::Hyperbolic: os << "hyperbolic"; break;
    }
    return os.str();
}

std::string to_string(MapType t) {
    switch (t) {
        case MapType::Covering: return "covering";
        case MapType::QuasiCoveringOnly: return "quasi-covering";
        case MapType::HolomorphicOnly: return "holomorphic";
        case MapType::NotHolomorphic: return "not-holomorphic";
    }
    return "?";
}

Q euler_char(const Orbifold& o) {
    Q chi(2);
    for (const auto& [p, nu] : o.points()) chi += Q(1, nu) - 1;
    return chi;
}

Signature classify_indices(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    Signature s;
    s.indices = indices;
    Q chi(2);
    for (int nu : indices) chi += Q(1, nu) - 1;
    const size_t n = indices.size();
    if (n == 0) {
        s.tag = Signature::Tag::Unramified;
    } else if (chi < 0) {
        s.tag = Signature::Tag::Hyperbolic;
    } else if (n == 1) {
        s.tag = Signature::Tag::BadOrbifold;
    } else if (n == 2) {
        if (indices[0] == indices[1]) {
            s.tag = Signature::Tag::Cyclic;
            s.parameter = indices[0];
        } else {
            s.tag = Signature::Tag::BadOrbifold;
        }
    } else if (n == 3) {
        if (indices[0] == 2 && indices[1] == 2) {
            s.tag = Signature::Tag::Dihedral;
            s.parameter = indices[2];
        } else if (indices[0] == 2 && indices[1] == 3 && indices[2] == 3) {
            s.tag = Signature::Tag::Tetrahedral;
        } else if (indices[0] == 2 && indices[1] == 3 && indices[2] == 4) {
            s.tag = Signature::Tag::Octahedral;
        } else if (indices[0] == 2 && indices[1] == 3 && indices[2] == 5) {
            s.tag = Signature::Tag::Icosahedral;
        } else if (indices[0] == 3 && indices[1] == 3 && indices[2] == 3) {
            s.tag = Signature::Tag::Euclid333;
        } else if (indices[0] == 2 && indices[1] == 4 && indices[2] == 4) {
            s.tag = Signature::Tag::Euclid244;
        } else if (indices[0] == 2 && indices[1] == 3 && indices[2] == 6) {
            s.tag = Signature::Tag::Euclid236;
        } else {
            throw internal_inconsistency("unclassified non-hyperbolic triple");
        }
    } else if (n == 4 && indices == std::vector<int>{2, 2, 2, 2}) {
        s.tag = Signature::Tag::Euclid2222;
    } else {
        throw internal_inconsistency("unclassified non-hyperbolic index multiset");
    }
    return s;
}

Signature classify_signature(const Orbifold& o) { return classify_indices(o.indices()); }

namespace {

struct SupportEntry {
    Point location;
    int local_degree = 0;  // 0 = unknown yet
};

void add_support(std::vector<SupportEntry>& support, Point p, int deg) {
    for (auto& e : support) {
        if (same_point(e.location, p)) {
            if (deg != 0) {
                if (e.local_degree != 0 && e.local_degree != deg)
                    throw internal_inconsistency("conflicting local degrees at a support point");
                e.local_degree = deg;
            }
            return;
        }
    }
    support.push_back({std::move(p), deg});
}

// nu_2(f(s)) for an algebraic support point s.
int nu2_of_image(const RationalFunction& f, const AlgebraicPoint& s, const Orbifold& o2) {
    // exact targets first
    for (const auto& [t, nu] : o2.points()) {
        if (t.is_exact() && maps_to_exact(f, Point(AlgebraicPoint(s)), t.exact())) return nu;
    }
    // algebraic target families
    std::vector<const Polynomial*> seen;
    for (const auto& [t, nu] : o2.points()) {
        if (t.is_exact()) continue;
        const Polynomial& m = t.algebraic().minpoly;
        bool done = false;
        for (const auto* q : seen)
            if (*q == m) done = true;
        if (done) continue;
        seen.push_back(&m);
        if (!maps_into_family(f, Point(AlgebraicPoint(s)), m)) continue;
        // same nu across all listed siblings of this family: no attribution needed
        std::vector<std::pair<Point, int>> listed;
        for (const auto& [t2, nu2] : o2.points())
            if (!t2.is_exact() && t2.algebraic().minpoly == m) listed.emplace_back(t2, nu2);
        bool uniform = true;
        for (const auto& [p2, n2] : listed)
            if (n2 != listed.front().second) uniform = false;
        auto family_roots = isolate_roots(m);
        if (uniform && listed.size() == family_roots.size()) return listed.front().second;
        // attribute f(s) to a specific root of the family
        std::vector<Point> siblings;
        for (const auto& r : family_roots) siblings.push_back(Point(AlgebraicPoint{m, r}));
        size_t idx = attribute_image(f, s, siblings);
        for (const auto& [p2, n2] : listed)
            if (same_point(p2, siblings[idx])) return n2;
        return 1;  // maps to an unlisted sibling
    }
    return 1;
}

} // namespace

MapType check_map_type(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2) {
    if (f.degree() < 1) throw bad_parameters("check_map_type requires degree >= 1");

    // support: points of o1, critical points of f, preimages of points of o2
    std::vector<SupportEntry> support;
    for (const auto& [p, nu] : o1.points()) add_support(support, p, 0);
    for (const auto& cp : critical_points(f)) add_support(support, cp.location, cp.local_degree);
    for (const auto& [t, nu] : o2.points())
        for (const auto& fp : fiber_over(f, t)) add_support(support, fp.location, fp.local_degree);

    bool covering = true, quasi = true, holo = true;
    for (auto& e : support) {
        int deg = e.local_degree ? e.local_degree : local_degree_at(f, e.location);
        int nu1 = o1.nu(e.location);
        int nu2;
        if (e.location.is_exact()) {
            nu2 = o2.nu(Point(f.evaluate(e.location.exact())));
        } else {
            nu2 = nu2_of_image(f, e.location.algebraic(), o2);
        }
        long lhs = static_cast<long>(nu1) * deg;
        if (nu2 != lhs) covering = false;
        if (nu2 != static_cast<long>(nu1) * std::gcd(deg, nu2)) quasi = false;
        if (lhs % nu2 != 0) holo = false;
        if (!holo) break;
    }
    if (covering) return MapType::Covering;
    if (quasi) return MapType::QuasiCoveringOnly;
    if (holo) return MapType::HolomorphicOnly;
    return MapType::NotHolomorphic;
}

Q riemann_hurwitz_defect(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2) {
    if (!holomorphic(check_map_type(f, o1, o2))) throw not_holomorphic_map();
    return euler_char(o2) * f.degree() - euler_char(o1);
}

} // namespace semiconj
