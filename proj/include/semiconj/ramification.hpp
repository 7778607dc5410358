#ifndef SEMICONJ_RAMIFICATION_HPP
#define SEMICONJ_RAMIFICATION_HPP

#include <semiconj/point.hpp>

#include <vector>

namespace semiconj {

/// A fiber point with its local degree; entries with local_degree >= 2 are
/// the critical points of the map.
struct FiberPoint {
    Point location;
    int local_degree = 1;
};
using CriticalPoint = FiberPoint;

/// One branch of a ramification portrait: a critical value together with the
/// multiset of local degrees over it (and the fiber point positions).
struct Branch {
    Point value;
    std::vector<int> fiber;        // local degrees, descending, sum = degree
    std::vector<FiberPoint> points;  // one entry per fiber point
};

/// Critical values of a rational function with per-fiber local degrees.
/// Invariants (asserted on construction): every fiber sums to the degree and
/// the local degrees satisfy sum (e_z - 1) = 2 deg - 2.
struct RamificationPortrait {
    int degree = 0;
    std::vector<Branch> branches;
};

/// Sphere orbifold: finitely many points with ramification indices nu >= 2.
class Orbifold {
  public:
    Orbifold() = default;
    explicit Orbifold(std::vector<std::pair<Point, int>> pts);

    const std::vector<std::pair<Point, int>>& points() const { return points_; }
    bool unramified() const { return points_.empty(); }
    // nu at an arbitrary point (1 off the support); exact decision
    int nu(const Point& p) const;
    // sorted multiset of indices
    std::vector<int> indices() const;

  private:
    std::vector<std::pair<Point, int>> points_;
};

// Exact multiplicities (squarefree decomposition of the Wronskian plus the
// infinity chart); grouping by critical value combines exact resultant data
// with certified clusters. Throws cluster_ambiguity when numeric grouping
// cannot be certified at the precision floor.
RamificationPortrait ramification_portrait(const RationalFunction& f);

// All critical points (local degree >= 2) with exact multiplicities.
std::vector<CriticalPoint> critical_points(const RationalFunction& f);

// Full fiber over an arbitrary point, with positions and local degrees.
std::vector<FiberPoint> fiber_over(const RationalFunction& f, const Point& value);

// Induced orbifold pair (O_1^f, O_2^f): nu_2 = lcm of local degrees over the
// fiber, nu_1 = nu_2(f(z)) / deg_z f. Requires deg f >= 2. By construction f
// is a covering map O_1^f -> O_2^f.
std::pair<Orbifold, Orbifold> orbifold_pair(const RationalFunction& f);

} // namespace semiconj

#endif
