#include <semiconj/rational_function.hpp>

#include <semiconj/errors.hpp>

#include <sstream>

namespace semiconj {

SpherePoint::SpherePoint(const Q& u, const Q& v) {
    if (u == 0 && v == 0) throw bad_parameters("sphere point (0:0)");
    if (v == 0) {
        u_ = 1;
        v_ = 0;
    } else {
        u_ = u / v;
        v_ = 1;
    }
}

const Q& SpherePoint::finite_value() const {
    if (is_infinity()) throw bad_parameters("finite_value of the point at infinity");
    return u_;
}

bool SpherePoint::operator<(const SpherePoint& o) const {
    if (is_infinity()) return false;
    if (o.is_infinity()) return true;
    return u_ < o.u_;
}

std::string SpherePoint::to_string() const {
    return is_infinity() ? "inf" : u_.get_str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (num.is_zero() && den.is_zero()) throw both_zero_error();
    if (den.is_zero()) {
        // the constant map to infinity, normalized as 1/0
        num_ = Polynomial::one();
        den_ = Polynomial::zero();
        return;
    }
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
        num = divexact(num, g);
        den = divexact(den, g);
    }
    Q lc = den.leading();
    num_ = num * (Q(1) / lc);
    den_ = den * (Q(1) / lc);
}

RationalFunction RationalFunction::power(int k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(Q(1), k));
    return RationalFunction(Polynomial::one(), Polynomial::monomial(Q(1), -k));
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw bad_parameters("division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::pow(int k) const {
    if (k == 0) return RationalFunction(Q(1));
    unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    RationalFunction r(num_.pow(e), den_.pow(e));
    if (k < 0) r = RationalFunction(Q(1)) / r;
    return r;
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

SpherePoint RationalFunction::evaluate(const SpherePoint& p) const {
    int m = degree();
    // homogeneous evaluation of both components at (u : v)
    Q nu(0), de(0), upow(1);
    std::vector<Q> vpow(static_cast<size_t>(m) + 1);
    vpow[0] = 1;
    for (int i = 1; i <= m; ++i) vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i - 1)] * p.v();
    for (int i = 0; i <= m; ++i) {
        const Q& vp = vpow[static_cast<size_t>(m - i)];
        nu += num_.coeff(i) * upow * vp;
        de += den_.coeff(i) * upow * vp;
        upow *= p.u();
    }
    return SpherePoint(nu, de);
}

Q RationalFunction::evaluate_finite(const Q& x) const {
    Q d = den_.evaluate(x);
    if (d == 0) throw bad_parameters("evaluate_finite at a pole");
    return num_.evaluate(x) / d;
}

std::complex<double> RationalFunction::evaluate(const std::complex<double>& x) const {
    return num_.evaluate(x) / den_.evaluate(x);
}

int RationalFunction::local_degree(const SpherePoint& p) const {
    if (degree() == 0) return 0;
    if (!p.is_infinity()) {
        const Q& x0 = p.finite_value();
        Q dv = den_.evaluate(x0);
        if (dv == 0) {
            // pole: order equals the multiplicity of x0 in the denominator
            return den_.root_multiplicity(x0);
        }
        Q v0 = num_.evaluate(x0) / dv;
        Polynomial diff = num_ - den_ * v0;
        return diff.root_multiplicity(x0);
    }
    int a = num_.degree(), b = den_.degree();
    if (a > b) return a - b;
    if (a < b) return b - a;
    // f(inf) finite nonzero: order of vanishing of rev(num) - c*rev(den) at 0
    Q c = num_.leading() / den_.leading();
    Polynomial diff = num_.reversed(a) - den_.reversed(a) * c;
    if (diff.is_zero()) throw internal_inconsistency("local_degree of a constant map");
    return diff.order_at_zero();
}

std::string RationalFunction::to_string(const std::string& var) const {
    std::ostringstream os;
    if (den_ == Polynomial::one()) {
        os << num_.to_string(var);
    } else {
        os << "(" << num_.to_string(var) << ")/(" << den_.to_string(var) << ")";
    }
    return os.str();
}

RationalFunction normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

RationalFunction compose(const RationalFunction& f, const RationalFunction& g) {
    // homogeneous substitution: both components of f evaluated at (num_g : den_g)
    int m = f.degree();
    Polynomial nu, de, upow = Polynomial::one();
    std::vector<Polynomial> vpow(static_cast<size_t>(m) + 1);
    vpow[0] = Polynomial::one();
    for (int i = 1; i <= m; ++i) vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i - 1)] * g.den();
    for (int i = 0; i <= m; ++i) {
        const Polynomial& vp = vpow[static_cast<size_t>(m - i)];
        nu = nu + upow * vp * f.num().coeff(i);
        de = de + upow * vp * f.den().coeff(i);
        upow = upow * g.num();
    }
    return RationalFunction(nu, de);
}

bool equals(const RationalFunction& f, const RationalFunction& g) {
    // both are canonical representatives, so syntactic equality decides
    return f == g;
}

Polynomial chebyshev_poly(unsigned n) {
    Polynomial tm1 = Polynomial::one();           // T_0
    if (n == 0) return tm1;
    Polynomial t = Polynomial::x();               // T_1
    Polynomial two_x = Polynomial({Q(0), Q(2)});
    for (unsigned k = 1; k < n; ++k) {
        Polynomial next = two_x * t - tm1;
        tm1 = std::move(t);
        t = std::move(next);
    }
    return t;
}

RationalFunction chebyshev(unsigned n) { return RationalFunction(chebyshev_poly(n)); }

RationalFunction dihedral_cover(unsigned n) {
    // (z^n + z^-n)/2 = (z^{2n} + 1) / (2 z^n)
    Polynomial num = Polynomial::monomial(Q(1), static_cast<int>(2 * n)) + Polynomial::one();
    Polynomial den = Polynomial::monomial(Q(2), static_cast<int>(n));
    return RationalFunction(num, den);
}

Polynomial wronskian(const RationalFunction& f) {
    return f.num().derivative() * f.den() - f.num() * f.den().derivative();
}

} // namespace semiconj
