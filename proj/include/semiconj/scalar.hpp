#ifndef SEMICONJ_SCALAR_HPP
#define SEMICONJ_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace semiconj {

// Exact scalar layer: rationals with arbitrary-precision integers.
using Int = mpz_class;
using Q = mpq_class;

inline Q make_q(long num, long den = 1) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

inline Q make_q(const Int& num, const Int& den) {
    Q q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" (optionally signed). Returns nullopt on malformed input.
std::optional<Q> parse_rational(const std::string& s);

std::string to_string(const Q& q);

// max(|num|, den) — used to enumerate candidate base points by simplicity.
Int height(const Q& q);

// Exact complex rational z = re + i*im. Enough arithmetic for certified
// polynomial evaluation; no division needed anywhere on hot paths.
struct QComplex {
    Q re, im;

    QComplex() = default;
    QComplex(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
    explicit QComplex(const Q& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    QComplex operator+(const QComplex& o) const { return {re + o.re, im + o.im}; }
    QComplex operator-(const QComplex& o) const { return {re - o.re, im - o.im}; }
    QComplex operator*(const QComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QComplex operator*(const Q& s) const { return {re * s, im * s}; }
    bool operator==(const QComplex& o) const { return re == o.re && im == o.im; }

    // |z|^2, exact.
    Q norm2() const { return re * re + im * im; }

    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

// Best rational approximation search: returns a rational p/q with
// |p/q - x| <= radius and q minimal (continued-fraction convergents of x).
// x is given exactly; used to snap certified numeric clusters to exact points.
std::optional<Q> snap_rational(const Q& x, const Q& radius);

} // namespace semiconj

#endif
