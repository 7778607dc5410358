#include <semiconj/polynomial.hpp>

#include <semiconj/errors.hpp>

#include <algorithm>
#include <sstream>

namespace semiconj {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Q& c, int k) {
    if (c == 0) return Polynomial();
    std::vector<Q> v(static_cast<size_t>(k) + 1, Q(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Q Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Q(0);
    return coeffs_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Q> v(std::max(coeffs_.size(), o.coeffs_.size()), Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Q> v(coeffs_.size() + o.coeffs_.size() - 1, Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Q& s) const {
    if (s == 0) return Polynomial();
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Q> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Q(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = Polynomial::one();
    Polynomial base(*this);
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Q Polynomial::evaluate(const Q& x) const {
    Q r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

QComplex Polynomial::evaluate(const QComplex& x) const {
    QComplex r(Q(0), Q(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        r = r * x;
        r.re += *it;
    }
    return r;
}

std::complex<double> Polynomial::evaluate(const std::complex<double>& x) const {
    std::complex<double> r(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

Polynomial Polynomial::shifted(const Q& a) const {
    // Horner: p(z+a) built from the top coefficient down.
    Polynomial r;
    Polynomial lin({a, Q(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * lin + Polynomial(*it);
    return r;
}

Polynomial Polynomial::reversed(int n) const {
    std::vector<Q> v(static_cast<size_t>(n) + 1, Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<size_t>(n) - i] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled_arg(const Q& s) const {
    Polynomial r(*this);
    Q p(1);
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] *= p;
        p *= s;
    }
    r.trim();
    return r;
}

int Polynomial::root_multiplicity(const Q& x0) const {
    if (is_zero()) return 0;
    Polynomial p = shifted(x0);
    return p.order_at_zero();
}

int Polynomial::order_at_zero() const {
    if (is_zero()) return 0;
    int k = 0;
    while (coeffs_[static_cast<size_t>(k)] == 0) ++k;
    return k;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Q inv = Q(1) / leading();
    return *this * inv;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm(1);
    for (const auto& c : coeffs_) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    Int num_gcd(0);
    for (const auto& c : coeffs_) {
        Int n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) num_gcd = 1;
    Q scale = make_q(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Q& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Q a = c > 0 ? c : Q(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c > 0 ? " + " : " - ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw internal_inconsistency("division by the zero polynomial");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<Q> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Q(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Q c = r.leading() / b.leading();
        int k = r.degree() - b.degree();
        q[static_cast<size_t>(k)] = c;
        r = r - Polynomial::monomial(c, k) * b;
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw internal_inconsistency("divexact: nonzero remainder");
    return q;
}

namespace {

// gcd of integer-primitive polynomials by the primitive PRS.
Polynomial gcd_primitive(Polynomial a, Polynomial b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    return a;
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd_primitive(a.primitive(), b.primitive()).monic();
}

std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<int, Polynomial>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm.
    Polynomial a = p.monic();
    Polynomial d = a.derivative();
    Polynomial g = gcd(a, d);
    Polynomial w = divexact(a, g);
    Polynomial y = divexact(d, g);
    int k = 1;
    while (true) {
        Polynomial z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() > 0) out.emplace_back(k, w.monic());
            break;
        }
        Polynomial f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(k, f.monic());
        w = divexact(w, f);
        y = divexact(z, f);
        ++k;
    }
    return out;
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial r = Polynomial::one();
    for (const auto& [k, f] : squarefree_decomposition(p)) r = r * f;
    return r.monic();
}

Q resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Q(0);
    if (a.degree() == 0) {
        Q r(1);
        for (int i = 0; i < b.degree(); ++i) r *= a.leading();
        return r;
    }
    if (b.degree() == 0) {
        Q r(1);
        for (int i = 0; i < a.degree(); ++i) r *= b.leading();
        return r;
    }
    // res(a,b) = (-1)^{deg a deg b} res(b,a); res(a,b) = lc(b)^{deg a - deg r} res(b, r)
    Polynomial f = a, g = b;
    Q acc(1);
    bool neg = false;
    while (true) {
        auto [q, r] = divrem(f, g);
        (void)q;
        if (r.is_zero()) return Q(0);
        if ((f.degree() % 2) && (g.degree() % 2)) neg = !neg;
        // now res(f,g) = +-lc(g)^{deg f - deg r} res(g, r)
        Q lc = g.leading();
        int e = f.degree() - r.degree();
        for (int i = 0; i < e; ++i) acc *= lc;
        f = g;
        g = r;
        if (g.degree() == 0) {
            Q base = g.leading();
            Q pw(1);
            for (int i = 0; i < f.degree(); ++i) pw *= base;
            acc *= pw;
            return neg ? -acc : acc;
        }
    }
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        r = r * q + Polynomial(*it);
    return r;
}

Polynomial interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys) {
    // Newton's divided differences.
    size_t n = xs.size();
    std::vector<Q> dd(ys);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Polynomial r;
    for (size_t i = n; i-- > 0;) {
        r = r * Polynomial({-xs[i], Q(1)}) + Polynomial(dd[i]);
    }
    return r;
}

} // namespace semiconj
