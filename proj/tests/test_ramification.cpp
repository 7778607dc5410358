#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semiconj/expr.hpp>
#include <semiconj/orbifold.hpp>
#include <semiconj/ramification.hpp>

#include <map>
#include <random>

using namespace semiconj;

namespace {

RationalFunction rf(const std::string& s) { return parse_function(s); }

// fibers keyed by exact value when available ("inf", "p/q"), else "alg"
std::map<std::string, std::vector<int>> branch_map(const RamificationPortrait& p) {
    std::map<std::string, std::vector<int>> m;
    for (const auto& b : p.branches) {
        std::string key = b.value.is_exact() ? b.value.exact().to_string() : "alg";
        auto fiber = b.fiber;
        std::sort(fiber.begin(), fiber.end());
        // algebraic branches of one conjugate family merge under the "alg" key
        m[key].insert(m[key].end(), fiber.begin(), fiber.end());
        std::sort(m[key].begin(), m[key].end());
    }
    return m;
}

long rh_sum(const RamificationPortrait& p) {
    long s = 0;
    for (const auto& b : p.branches)
        for (int e : b.fiber) s += e - 1;
    return s;
}

RationalFunction random_function(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(1, maxdeg);
    while (true) {
        std::vector<Q> nc(static_cast<size_t>(deg(rng)) + 1), dc(static_cast<size_t>(deg(rng)) + 1);
        for (auto& c : nc) c = Q(coeff(rng));
        for (auto& c : dc) c = Q(coeff(rng));
        Polynomial n{std::vector<Q>(nc)}, d{std::vector<Q>(dc)};
        if (n.is_zero() || d.is_zero()) continue;
        RationalFunction f(n, d);
        if (f.degree() >= 2) return f;
    }
}

} // namespace

TEST_CASE("portrait of a pure power") {
    for (int n = 2; n <= 6; ++n) {
        auto p = ramification_portrait(RationalFunction::power(n));
        REQUIRE(p.branches.size() == 2);
        auto m = branch_map(p);
        CHECK(m["0"] == std::vector<int>{n});
        CHECK(m["inf"] == std::vector<int>{n});
        CHECK(rh_sum(p) == 2 * n - 2);
    }
}

TEST_CASE("portrait of T_3") {
    auto p = ramification_portrait(chebyshev(3));
    auto m = branch_map(p);
    REQUIRE(m.size() == 3);
    CHECK(m["1"] == std::vector<int>{1, 2});
    CHECK(m["-1"] == std::vector<int>{1, 2});
    CHECK(m["inf"] == std::vector<int>{3});
    // fiber positions: T_3' = 12z^2 - 3 vanishes at +-1/2 and T_3(-1/2) = 1
    for (const auto& b : p.branches) {
        if (b.value.is_exact() && !b.value.is_infinity() &&
            b.value.exact().finite_value() == 1) {
            bool found = false;
            for (const auto& fp : b.points)
                if (fp.local_degree == 2 && fp.location.is_exact() &&
                    fp.location.exact() == SpherePoint(make_q(-1, 2)))
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("portrait of the degree-4 dihedral cover") {
    auto p = ramification_portrait(dihedral_cover(2));
    auto m = branch_map(p);
    REQUIRE(m.size() == 3);
    CHECK(m["1"] == std::vector<int>{2, 2});
    CHECK(m["-1"] == std::vector<int>{2, 2});
    CHECK(m["inf"] == std::vector<int>{2, 2});
}

TEST_CASE("portrait with an algebraic critical-value family") {
    // z^3 + z: critical points +-i/sqrt(3), values form a conjugate pair
    auto p = ramification_portrait(rf("z^3+z"));
    auto m = branch_map(p);
    REQUIRE(m.count("inf"));
    CHECK(m["inf"] == std::vector<int>{3});
    REQUIRE(m.count("alg"));
    CHECK(m["alg"] == std::vector<int>{1, 1, 2, 2});  // two conjugate branches {2,1}
    CHECK(rh_sum(p) == 4);
}

TEST_CASE("orbifold pair of z^2") {
    auto [o1, o2] = orbifold_pair(rf("z^2"));
    CHECK(o1.unramified());
    CHECK(o2.indices() == std::vector<int>{2, 2});
    CHECK(o2.nu(Point(SpherePoint(Q(0)))) == 2);
    CHECK(o2.nu(Point::infinity()) == 2);
}

TEST_CASE("orbifold pair of T_3 satisfies the covering relation") {
    auto [o1, o2] = orbifold_pair(chebyshev(3));
    CHECK(o2.indices() == std::vector<int>{2, 2, 3});
    // nu_1 = nu_2(f(z)) / deg_z f marks exactly the two simple preimages of -+1;
    // chi(O_1) = 3 chi(O_2) pins the signature to (2,2)
    CHECK(o1.indices() == std::vector<int>{2, 2});
    CHECK(o1.nu(Point(SpherePoint(Q(1)))) == 2);
    CHECK(o1.nu(Point(SpherePoint(Q(-1)))) == 2);
    CHECK(euler_char(o1) == Q(3) * euler_char(o2));
}

TEST_CASE("orbifold pair of the dihedral covers") {
    auto [o1, o2] = orbifold_pair(dihedral_cover(2));
    CHECK(o2.indices() == std::vector<int>{2, 2, 2});
    CHECK(o1.unramified());
    CHECK(euler_char(o1) == Q(4) * euler_char(o2));

    auto [p1, p2] = orbifold_pair(dihedral_cover(3));
    CHECK(p2.indices() == std::vector<int>{2, 2, 3});
    CHECK(p1.unramified());
}

TEST_CASE("Riemann-Hurwitz and the induced covering relation on random maps") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 12; ++i) {
        RationalFunction f = random_function(rng, 4);
        auto p = ramification_portrait(f);
        CHECK(rh_sum(p) == 2 * f.degree() - 2);
        auto [o1, o2] = orbifold_pair(f);
        CHECK(euler_char(o1) == Q(f.degree()) * euler_char(o2));
        CHECK(check_map_type(f, o1, o2) == MapType::Covering);
    }
}

TEST_CASE("critical values of a composition are C(f) union f(C(g))") {
    auto check_pair = [](const RationalFunction& f, const RationalFunction& g) {
        auto pf = ramification_portrait(f);
        auto pg = ramification_portrait(g);
        auto pfg = ramification_portrait(compose(f, g));
        // every branch value of f o g lies in C(f) or in f(C(g))
        for (const auto& b : pfg.branches) {
            bool found = false;
            for (const auto& bf : pf.branches) found = found || same_point(b.value, bf.value);
            for (const auto& bg : pg.branches)
                found = found || maps_to_point(f, bg.value, b.value);
            CHECK(found);
        }
        // and conversely both source sets land among the branch values
        for (const auto& bf : pf.branches) {
            bool found = false;
            for (const auto& b : pfg.branches) found = found || same_point(bf.value, b.value);
            CHECK(found);
        }
        for (const auto& bg : pg.branches) {
            bool found = false;
            for (const auto& b : pfg.branches) found = found || maps_to_point(f, bg.value, b.value);
            CHECK(found);
        }
    };
    check_pair(chebyshev(2), chebyshev(3));
    check_pair(rf("z^2"), rf("(z^2-2)/(z-2*z^3)"));       // g with algebraic critical values
    check_pair(rf("(z^2-2)/(z-2*z^3)"), rf("z^2"));
}

TEST_CASE("fiber_over returns positions and local degrees") {
    auto fiber = fiber_over(chebyshev(3), Point(SpherePoint(Q(1))));
    REQUIRE(fiber.size() == 2);
    int total = 0;
    for (const auto& fp : fiber) total += fp.local_degree;
    CHECK(total == 3);

    auto pole_fiber = fiber_over(rf("1/2*(z^2+1/z^2)"), Point::infinity());
    REQUIRE(pole_fiber.size() == 2);
    CHECK(pole_fiber[0].local_degree == 2);
    CHECK(pole_fiber[1].local_degree == 2);
}

TEST_CASE("point identity distinguishes conjugate algebraic points") {
    Polynomial m{make_q(1), make_q(0), make_q(1)};  // z^2 + 1
    auto roots = isolate_roots(m);
    REQUIRE(roots.size() == 2);
    Point a{AlgebraicPoint{m, roots[0]}}, b{AlgebraicPoint{m, roots[1]}};
    CHECK(same_point(a, a));
    CHECK_FALSE(same_point(a, b));
    CHECK_FALSE(same_point(a, Point(SpherePoint(Q(0)))));

    // the same algebraic point reached through a different defining polynomial
    Polynomial big = (m * Polynomial{make_q(1), make_q(1)}).primitive();  // (z^2+1)(z+1)
    auto split = split_roots(big);
    CHECK(split.exact.size() == 1);
    REQUIRE(split.algebraic.size() == 2);
    int eq = 0;
    for (const auto& ap : split.algebraic)
        if (same_point(a, Point(AlgebraicPoint(ap)))) ++eq;
    CHECK(eq == 1);
}

TEST_CASE("local degree at algebraic points") {
    // z^2 + 1 has simple preimages of 0 at +-i under f = z^2+1... use wronskian route:
    // f = (z^2+1)^2 has local degree 2 at +-i
    RationalFunction f = rf("(z^2+1)^2");
    Polynomial m{make_q(1), make_q(0), make_q(1)};
    auto roots = isolate_roots(m);
    for (const auto& r : roots) {
        Point p{AlgebraicPoint{m, r}};
        CHECK(local_degree_at(f, p) == 2);
        CHECK(maps_to_exact(f, p, SpherePoint(Q(0))));
        CHECK_FALSE(maps_to_exact(f, p, SpherePoint(Q(1))));
    }
}
