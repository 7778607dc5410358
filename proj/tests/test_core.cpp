#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semiconj/errors.hpp>
#include <semiconj/expr.hpp>
#include <semiconj/rational_function.hpp>

#include <random>

using namespace semiconj;

namespace {

RationalFunction rf(const std::string& s) { return parse_function(s); }

Q q(long n, long d = 1) { return make_q(n, d); }

// random rational function with coefficients in {-2..2}, degree <= maxdeg
RationalFunction random_function(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    while (true) {
        std::vector<Q> nc(static_cast<size_t>(deg(rng)) + 1), dc(static_cast<size_t>(deg(rng)) + 1);
        for (auto& c : nc) c = Q(coeff(rng));
        for (auto& c : dc) c = Q(coeff(rng));
        Polynomial n{std::vector<Q>(nc)}, d{std::vector<Q>(dc)};
        if (n.is_zero() || d.is_zero()) continue;
        RationalFunction f(n, d);
        if (f.degree() >= 1) return f;
    }
}

} // namespace

TEST_CASE("normalize reduces and makes the denominator monic") {
    // (2z^2-2, 2z-2) -> z+1
    RationalFunction f(Polynomial{q(-2), q(0), q(2)}, Polynomial{q(-2), q(2)});
    CHECK(f == rf("z+1"));
    CHECK(f.degree() == 1);

    CHECK(RationalFunction(Polynomial::x(), Polynomial::one()) == rf("z"));

    // (z^3-z, z^2-1) -> z ; oracle: long division of z^3-z by z^2-1 is exact
    Polynomial num{q(0), q(-1), q(0), q(1)}, den{q(-1), q(0), q(1)};
    auto [quot, rem] = divrem(num, den);
    CHECK(rem.is_zero());
    CHECK(quot == Polynomial::x());
    CHECK(normalize(num, den) == RationalFunction(quot));

    CHECK_THROWS_AS(RationalFunction(Polynomial::zero(), Polynomial::zero()), both_zero_error);
}

TEST_CASE("compose multiplies degrees and matches symbolic expansion") {
    CHECK(compose(rf("z^2"), rf("z")) == rf("z^2"));
    CHECK(compose(rf("z^2"), rf("z^3")) == rf("z^6"));

    // 1/2 (z^2 + 1/z^2) composed with z^3
    RationalFunction h2 = rf("1/2*(z^2+1/z^2)");
    CHECK(h2 == dihedral_cover(2));
    RationalFunction lhs = compose(h2, rf("z^3"));
    CHECK(lhs == rf("1/2*(z^6+1/z^6)"));
    CHECK(lhs == dihedral_cover(6));
    CHECK(lhs.degree() == 12);
}

TEST_CASE("projective evaluation handles poles and infinity") {
    CHECK(rf("z^2").evaluate(SpherePoint::infinity()) == SpherePoint::infinity());
    CHECK(rf("(z^2-2)/(z-2*z^3)").evaluate(SpherePoint(q(1))) == SpherePoint(q(1)));
    RationalFunction t3 = chebyshev(3);
    CHECK(t3 == rf("4*z^3-3*z"));
    CHECK(t3.evaluate(SpherePoint(q(1))) == SpherePoint(q(1)));
    // poles evaluate to infinity
    CHECK(rf("1/z").evaluate(SpherePoint(q(0))) == SpherePoint::infinity());
    CHECK(rf("1/z").evaluate(SpherePoint::infinity()) == SpherePoint(q(0)));
}

TEST_CASE("derivative by the quotient rule") {
    CHECK(rf("z^3").derivative() == rf("3*z^2"));
    CHECK(rf("1/z").derivative() == rf("-1/z^2"));
    CHECK(chebyshev(3).derivative() == rf("12*z^2-3"));
}

TEST_CASE("equality is a syntactic check on canonical representatives") {
    CHECK(equals(rf("z^2"), RationalFunction(Polynomial{q(0), q(0), q(2)}, Polynomial{q(2)})));
    RationalFunction t6 = compose(chebyshev(2), chebyshev(3));
    CHECK(equals(t6, compose(chebyshev(3), chebyshev(2))));
    CHECK(t6 == rf("32*z^6-48*z^4+18*z^2-1"));
    CHECK_FALSE(equals(rf("z^2"), rf("z^3")));
}

TEST_CASE("chebyshev recurrence") {
    CHECK(chebyshev(0) == rf("1"));
    CHECK(chebyshev(1) == rf("z"));
    CHECK(chebyshev(2) == rf("2*z^2-1"));
    CHECK(chebyshev(6) == rf("32*z^6-48*z^4+18*z^2-1"));
}

TEST_CASE("degree of a composition is the product of degrees") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 40; ++i) {
        RationalFunction f = random_function(rng, 3), g = random_function(rng, 3);
        CHECK(compose(f, g).degree() == f.degree() * g.degree());
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        RationalFunction f = random_function(rng, 3), g = random_function(rng, 3),
                         h = random_function(rng, 3);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("normalization is scale invariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> scl(1, 7);
    for (int i = 0; i < 20; ++i) {
        RationalFunction f = random_function(rng, 3);
        Q a = q(scl(rng), scl(rng)) * Q(i % 2 ? 1 : -1);
        CHECK(equals(normalize(f.num() * a, f.den() * a), f));
    }
}

TEST_CASE("chebyshev composition law T_m o T_d = T_{md}") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned d = 1; d <= 6; ++d)
            CHECK(compose(chebyshev(m), chebyshev(d)) == chebyshev(m * d));
}

TEST_CASE("evaluation respects composition on a rational grid") {
    RationalFunction f = rf("(z^2-2)/(z-2*z^3)"), g = rf("1/2*(z^2+1/z^2)");
    RationalFunction fg = compose(f, g);
    int used = 0;
    for (long k = 2; used < 20; ++k) {
        SpherePoint p(q(k, 7));
        SpherePoint inner = g.evaluate(p);
        CHECK(fg.evaluate(p) == f.evaluate(inner));
        ++used;
    }
}

TEST_CASE("expression parser accepts the documented grammar") {
    CHECK(rf("z^2") == RationalFunction(Polynomial{q(0), q(0), q(1)}));
    CHECK(rf("(z^2-2)/(z-2*z^3)") ==
          RationalFunction(Polynomial{q(-2), q(0), q(1)}, Polynomial{q(0), q(1), q(0), q(-2)}));
    CHECK(rf("-z") == -rf("z"));
    CHECK(rf("z^-2") == rf("1/z^2"));
    CHECK_THROWS_AS(parse_function("z^"), parse_error);
    CHECK_THROWS_AS(parse_function("(z"), parse_error);
    CHECK_THROWS_AS(parse_function("2.5*z"), parse_error);
}

TEST_CASE("local degrees at exact points") {
    CHECK(rf("z^5").local_degree(SpherePoint(q(0))) == 5);
    CHECK(rf("z^5").local_degree(SpherePoint::infinity()) == 5);
    CHECK(rf("z^5").local_degree(SpherePoint(q(3))) == 1);
    CHECK(chebyshev(3).local_degree(SpherePoint(q(1, 2))) == 2);
    CHECK(rf("1/z^3").local_degree(SpherePoint(q(0))) == 3);
    // degree-matching leading terms: f(z) = (z^2+1)/z^2 has a double point at infinity
    CHECK(rf("(z^2+1)/z^2").local_degree(SpherePoint::infinity()) == 2);
}
