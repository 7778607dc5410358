#ifndef SEMICONJ_POINT_HPP
#define SEMICONJ_POINT_HPP

#include <semiconj/rational_function.hpp>
#include <semiconj/roots.hpp>

#include <variant>
#include <vector>

namespace semiconj {

/// A sphere point certified as one specific root of an exact squarefree
/// polynomial over Q that has no rational roots. Equality with other points
/// is then decidable: gcd of defining polynomials plus disk refinement.
struct AlgebraicPoint {
    Polynomial minpoly;   // squarefree, integer-primitive, no rational roots
    IsolatedRoot root;    // certified w.r.t. minpoly
};

/// Point of the Riemann sphere: exact rational (including infinity) or a
/// certified algebraic cluster. The invariant that algebraic defining
/// polynomials carry no rational roots makes exact/algebraic pairs always
/// distinct, so mixed comparisons are trivially false.
class Point {
  public:
    Point() : rep_(SpherePoint()) {}
    explicit Point(SpherePoint p) : rep_(std::move(p)) {}
    explicit Point(AlgebraicPoint p) : rep_(std::move(p)) {}
    static Point infinity() { return Point(SpherePoint::infinity()); }

    bool is_exact() const { return std::holds_alternative<SpherePoint>(rep_); }
    bool is_infinity() const { return is_exact() && exact().is_infinity(); }
    const SpherePoint& exact() const { return std::get<SpherePoint>(rep_); }
    const AlgebraicPoint& algebraic() const { return std::get<AlgebraicPoint>(rep_); }
    AlgebraicPoint& algebraic() { return std::get<AlgebraicPoint>(rep_); }

    std::complex<double> approx() const;

    std::string to_string() const;

  private:
    std::variant<SpherePoint, AlgebraicPoint> rep_;
};

// Decidable equality of sphere points (exact in all branches; refines
// algebraic clusters as needed and may throw cluster_ambiguity).
bool same_point(const Point& a, const Point& b);

// Does f map the point to the exact value v (or to infinity)? Decidable.
bool maps_to_exact(const RationalFunction& f, const Point& p, const SpherePoint& v);
// Is f(p) a root of the squarefree family polynomial m (no rational roots)?
bool maps_into_family(const RationalFunction& f, const Point& p, const Polynomial& m);
// Does f map src to dst? Decidable for every representation combination.
bool maps_to_point(const RationalFunction& f, const Point& src, const Point& dst);

// Exact local degree of f at any point.
int local_degree_at(const RationalFunction& f, const Point& p);

// Splits a squarefree polynomial into exact rational points and algebraic
// points (rational roots divided out, remaining factor attached as minpoly).
struct SplitRoots {
    std::vector<SpherePoint> exact;       // one entry per rational root
    std::vector<AlgebraicPoint> algebraic;
};
SplitRoots split_roots(const Polynomial& squarefree);

// Deterministic order for serialization: exact finite (by value), infinity,
// then algebraic (by minpoly, then center approx).
bool point_order(const Point& a, const Point& b);

// Which candidate does f map the certified source point to? The caller must
// know (by exact reasoning) that f(source) is one of the candidates; the
// numeric match refines the source cluster until the attribution is clear.
size_t attribute_image(const RationalFunction& f, const AlgebraicPoint& source,
                       const std::vector<Point>& candidates);

} // namespace semiconj

#endif
