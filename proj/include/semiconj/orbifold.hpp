#ifndef SEMICONJ_ORBIFOLD_HPP
#define SEMICONJ_ORBIFOLD_HPP

#include <semiconj/ramification.hpp>

#include <string>

namespace semiconj {

/// Classification of a sphere orbifold by its multiset of ramification
/// indices. Spherical tags have chi > 0 (as does BadOrbifold, which has no
/// universal cover), Euclidean tags chi = 0, Hyperbolic chi < 0.
struct Signature {
    enum class Tag {
        Unramified,
        BadOrbifold,   // one point, or two points with different indices
        Cyclic,        // (n,n)
        Dihedral,      // (2,2,n), n >= 2
        Tetrahedral,   // (2,3,3)
        Octahedral,    // (2,3,4)
        Icosahedral,   // (2,3,5)
        Euclid2222,    // (2,2,2,2)
        Euclid333,     // (3,3,3)
        Euclid244,     // (2,4,4)
        Euclid236,     // (2,3,6)
        Hyperbolic,
    };

    std::vector<int> indices;  // sorted ascending
    Tag tag = Tag::Unramified;
    int parameter = 0;  // n for Cyclic(n,n) and Dihedral(2,2,n)

    bool spherical() const;  // chi > 0 and a universal cover exists
    bool euclidean() const;
    std::string to_string() const;  // e.g. "(2,3,5):icosahedral"
};

/// Pointwise relation of a map against a pair of orbifold structures.
/// Covering implies quasi-covering implies holomorphic.
enum class MapType { Covering, QuasiCoveringOnly, HolomorphicOnly, NotHolomorphic };

std::string to_string(MapType t);
inline bool at_least_quasi_covering(MapType t) {
    return t == MapType::Covering || t == MapType::QuasiCoveringOnly;
}
inline bool holomorphic(MapType t) { return t != MapType::NotHolomorphic; }

// chi(O) = 2 + sum (1/nu - 1), exact.
Q euler_char(const Orbifold& o);

Signature classify_signature(const Orbifold& o);
Signature classify_indices(std::vector<int> indices);

// Evaluates the covering / quasi-covering / divisibility conditions at every
// point where any of nu_1, nu_2 of, or deg_z f is nontrivial (a finite set)
// and returns the strongest condition satisfied everywhere.
MapType check_map_type(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2);

// chi(O_2) deg f - chi(O_1); >= 0 for holomorphic maps, = 0 iff covering.
// Throws not_holomorphic_map when f is not holomorphic O_1 -> O_2.
Q riemann_hurwitz_defect(const RationalFunction& f, const Orbifold& o1, const Orbifold& o2);

} // namespace semiconj

#endif
