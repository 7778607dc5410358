#include <semiconj/scalar.hpp>

namespace semiconj {

std::optional<Q> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Q(n);
        }
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) return std::nullopt;
        Int n(ns), d(ds);
        if (d == 0) return std::nullopt;
        Q q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Q& q) { return q.get_str(); }

Int height(const Q& q) {
    Int n = abs(q.get_num());
    Int d = q.get_den();
    return n > d ? n : d;
}

std::optional<Q> snap_rational(const Q& x, const Q& radius) {
    if (radius < 0) return std::nullopt;
    // Continued-fraction convergents of x; the first convergent inside the
    // interval is the minimal-denominator rational there.
    Int hm1(1), km1(0), hm2(0), km2(1);
    Q rest = x;
    for (int iter = 0; iter < 512; ++iter) {
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        Int h = a * hm1 + hm2;
        Int k = a * km1 + km2;
        Q cand = make_q(h, k);
        Q diff = cand - x;
        if (diff < 0) diff = -diff;
        if (diff <= radius) return cand;
        Q frac = rest - Q(a);
        if (frac == 0) return std::nullopt;  // exact expansion ended outside radius
        rest = Q(1) / frac;
        hm2 = hm1;
        km2 = km1;
        hm1 = h;
        km1 = k;
    }
    return std::nullopt;
}

} // namespace semiconj
