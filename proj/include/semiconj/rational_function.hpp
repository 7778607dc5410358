#ifndef SEMICONJ_RATIONAL_FUNCTION_HPP
#define SEMICONJ_RATIONAL_FUNCTION_HPP

#include <semiconj/polynomial.hpp>

#include <string>

namespace semiconj {

/// Exact point of the Riemann sphere as a projective pair (u : v) over Q.
/// Canonical form: finite points are (x : 1), infinity is (1 : 0).
class SpherePoint {
  public:
    SpherePoint() : u_(0), v_(1) {}
    explicit SpherePoint(const Q& x) : u_(x), v_(1) {}
    SpherePoint(const Q& u, const Q& v);

    static SpherePoint infinity() { return SpherePoint(Q(1), Q(0)); }

    bool is_infinity() const { return v_ == 0; }
    const Q& finite_value() const;  // throws when infinite
    const Q& u() const { return u_; }
    const Q& v() const { return v_; }

    bool operator==(const SpherePoint& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator<(const SpherePoint& o) const;  // finite by value, infinity last

    std::string to_string() const;

  private:
    Q u_, v_;
};

/// Reduced fraction of two coprime polynomials over Q; denominator monic.
/// Represents a nonconstant-or-constant map CP^1 -> CP^1 (never 0/0).
class RationalFunction {
  public:
    RationalFunction() : num_(Polynomial::zero()), den_(Polynomial::one()) {}
    // reduces and normalizes; throws both_zero_error on 0/0
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(const Polynomial& num) : RationalFunction(num, Polynomial::one()) {}
    explicit RationalFunction(const Q& c) : RationalFunction(Polynomial(c), Polynomial::one()) {}

    static RationalFunction identity() { return RationalFunction(Polynomial::x()); }
    // z^k for any integer k (negative k gives 1/z^{-k})
    static RationalFunction power(int k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int degree() const;
    bool is_constant() const { return degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction pow(int k) const;

    RationalFunction derivative() const;

    SpherePoint evaluate(const SpherePoint& p) const;
    Q evaluate_finite(const Q& x) const;  // throws at poles
    std::complex<double> evaluate(const std::complex<double>& x) const;

    // local degree of the map at an exact point (>= 1)
    int local_degree(const SpherePoint& p) const;

    // numerator of f - f', as a polynomial identity check helper:
    // cross-multiplied equality against another reduced function
    std::string to_string(const std::string& var = "z") const;

  private:
    Polynomial num_, den_;
};

RationalFunction normalize(const Polynomial& num, const Polynomial& den);
RationalFunction compose(const RationalFunction& f, const RationalFunction& g);
bool equals(const RationalFunction& f, const RationalFunction& g);

// Chebyshev polynomial T_n normalized by T_n(cos t) = cos(nt).
RationalFunction chebyshev(unsigned n);
Polynomial chebyshev_poly(unsigned n);

// (z^n + z^-n)/2, the degree-2n dihedral quotient map.
RationalFunction dihedral_cover(unsigned n);

// Wronskian numerator num' * den - num * den': its finite roots (with
// multiplicity m) are exactly the points of local degree m+1.
Polynomial wronskian(const RationalFunction& f);

} // namespace semiconj

#endif
