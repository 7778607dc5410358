#include <semiconj/roots.hpp>

#include <semiconj/errors.hpp>

#include <algorithm>
#include <cmath>
#include <complex>

namespace semiconj {

namespace {

// Minimal complex type over mpf_class; std::complex is only specified for
// the builtin floating types.
struct MpComplex {
    mpf_class re, im;

    MpComplex(int bits) : re(0, bits), im(0, bits) {}
    MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    MpComplex operator+(const MpComplex& o) const { return {re + o.re, im + o.im}; }
    MpComplex operator-(const MpComplex& o) const { return {re - o.re, im - o.im}; }
    MpComplex operator*(const MpComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    MpComplex operator/(const MpComplex& o) const {
        mpf_class n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    mpf_class norm() const { return re * re + im * im; }
};

inline double norm2_of(const std::complex<double>& z) { return std::norm(z); }
inline mpf_class norm2_of(const MpComplex& z) { return z.norm(); }

template <typename C>
C eval_poly(const std::vector<C>& coeffs, const C& x, const C& zero) {
    C r = zero;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

// One Aberth-Ehrlich pass; returns the largest correction magnitude (squared).
template <typename C, typename F>
F aberth_pass(const std::vector<C>& p, const std::vector<C>& dp, std::vector<C>& z, const C& zero,
              const C& one) {
    size_t n = z.size();
    F worst = 0;
    for (size_t i = 0; i < n; ++i) {
        C pv = eval_poly(p, z[i], zero);
        C dv = eval_poly(dp, z[i], zero);
        C newton = pv / dv;
        C s = zero;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            s = s + one / (z[i] - z[j]);
        }
        C w = newton / (one - newton * s);
        z[i] = z[i] - w;
        F mag = norm2_of(w);
        if (mag > worst) worst = mag;
    }
    return worst;
}

std::vector<std::complex<double>> aberth_double(const Polynomial& p, int iterations) {
    int n = p.degree();
    std::vector<std::complex<double>> pc, dc;
    double lead = std::abs(p.leading().get_d());
    for (const auto& c : p.coeffs()) pc.push_back(std::complex<double>(c.get_d() / lead, 0.0));
    Polynomial d = p.derivative();
    for (const auto& c : d.coeffs()) dc.push_back(std::complex<double>(c.get_d() / lead, 0.0));

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(pc[static_cast<size_t>(i)]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.7;
        double r = radius * (0.85 + 0.10 * std::fmod(0.6180339887 * k, 1.0));
        z[static_cast<size_t>(k)] = std::polar(r, ang);
    }
    std::complex<double> zero(0.0), one(1.0);
    for (int it = 0; it < iterations; ++it) {
        double worst =
            aberth_pass<std::complex<double>, double>(pc, dc, z, zero, one);
        if (worst < 1e-30) break;
    }
    return z;
}

std::vector<MpComplex> aberth_mpf(const Polynomial& p, int bits,
                                  const std::vector<std::complex<double>>& seed, int iterations) {
    std::vector<MpComplex> pc, dc;
    for (const auto& c : p.coeffs()) pc.push_back({mpf_class(c, bits), mpf_class(0, bits)});
    Polynomial d = p.derivative();
    for (const auto& c : d.coeffs()) dc.push_back({mpf_class(c, bits), mpf_class(0, bits)});
    std::vector<MpComplex> z;
    for (const auto& s : seed)
        z.push_back({mpf_class(s.real(), bits), mpf_class(s.imag(), bits)});
    MpComplex zero(bits), one(bits);
    one.re = 1;
    mpf_class tol(1, bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<unsigned long>(2 * bits - 16));
    for (int it = 0; it < iterations; ++it) {
        mpf_class worst = aberth_pass<MpComplex, mpf_class>(pc, dc, z, zero, one);
        if (worst < tol) break;
    }
    return z;
}

struct Certificate {
    bool ok = false;
    std::vector<IsolatedRoot> roots;
};

// Exact certification: disk radius n|p(c)/p'(c)| contains at least one root;
// n pairwise disjoint disks for n approximations pin exactly one root each.
Certificate certify(const Polynomial& p, const std::vector<QComplex>& centers) {
    int n = p.degree();
    Polynomial dp = p.derivative();
    Certificate cert;
    cert.roots.reserve(centers.size());
    Q n2 = Q(n) * Q(n);
    for (const auto& c : centers) {
        QComplex pv = p.evaluate(c);
        QComplex dv = dp.evaluate(c);
        Q dnorm = dv.norm2();
        if (dnorm == 0) return cert;  // derivative vanished: cannot certify here
        IsolatedRoot r;
        r.center = c;
        r.radius2 = n2 * pv.norm2() / dnorm;
        cert.roots.push_back(std::move(r));
    }
    // pairwise disjoint: |ci-cj| > ri+rj, via (ri+rj)^2 <= 2(ri^2+rj^2)
    for (size_t i = 0; i < cert.roots.size(); ++i)
        for (size_t j = i + 1; j < cert.roots.size(); ++j) {
            Q d2 = (cert.roots[i].center - cert.roots[j].center).norm2();
            if (!(d2 > 2 * (cert.roots[i].radius2 + cert.roots[j].radius2))) return cert;
        }
    cert.ok = true;
    return cert;
}

QComplex snap_to_exact(const std::complex<double>& z) {
    return QComplex(Q(z.real()), Q(z.imag()));
}

QComplex snap_to_exact(const MpComplex& z) { return QComplex(Q(z.re), Q(z.im)); }

} // namespace

Q sqrt_upper(const Q& x) {
    if (x < 0) throw internal_inconsistency("sqrt_upper of a negative rational");
    if (x == 0) return Q(0);
    mpf_class f(x, 192);
    f = sqrt(f);
    Q u(f);
    // inflate until u*u >= x (a couple of steps at most)
    Q bump = u / Q(Int(1) << 40) + Q(1, Int(1) << 60);
    while (u * u < x) u += bump;
    return u;
}

Q derivative_bound_on_disk(const Polynomial& p, const QComplex& center, const Q& radius2) {
    Polynomial dp = p.derivative();
    Q rho = sqrt_upper(center.norm2()) + sqrt_upper(radius2);
    Q bound(0), pw(1);
    for (const auto& c : dp.coeffs()) {
        Q a = c > 0 ? c : Q(-c);
        bound += a * pw;
        pw *= rho;
    }
    return bound;
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& squarefree, const RootConfig& cfg) {
    const Polynomial& p = squarefree;
    int n = p.degree();
    if (n <= 0) return {};
    if (n == 1) {
        IsolatedRoot r;
        r.center = QComplex(-p.coeff(0) / p.coeff(1), Q(0));
        r.radius2 = Q(0);
        std::vector<IsolatedRoot> out;
        out.push_back(std::move(r));
        return out;
    }

    std::vector<std::complex<double>> approx = aberth_double(p, 120 + 20 * n);
    {
        std::vector<QComplex> centers;
        centers.reserve(approx.size());
        for (const auto& z : approx) centers.push_back(snap_to_exact(z));
        Certificate cert = certify(p, centers);
        if (cert.ok) return std::move(cert.roots);
    }
    for (int bits = 128; bits <= cfg.max_bits; bits *= 2) {
        auto zs = aberth_mpf(p, bits, approx, 60 + 10 * n);
        std::vector<QComplex> centers;
        centers.reserve(zs.size());
        for (const auto& z : zs) centers.push_back(snap_to_exact(z));
        Certificate cert = certify(p, centers);
        if (cert.ok) return std::move(cert.roots);
    }
    throw cluster_ambiguity("root isolation failed at the precision floor (degree " +
                            std::to_string(n) + ")");
}

void refine_root(const Polynomial& squarefree, IsolatedRoot& root, const Q& target_radius2,
                 const RootConfig& cfg) {
    if (root.radius2 <= target_radius2) return;
    const Polynomial& p = squarefree;
    Polynomial dp = p.derivative();
    int n = p.degree();
    Q n2 = Q(n) * Q(n);

    int bits = 96;
    for (int step = 0; step < 200; ++step) {
        if (root.radius2 <= target_radius2) return;
        // Newton step at `bits` working precision, then exact recertification.
        MpComplex z{mpf_class(root.center.re, bits), mpf_class(root.center.im, bits)};
        std::vector<MpComplex> pc, dc;
        for (const auto& c : p.coeffs()) pc.push_back({mpf_class(c, bits), mpf_class(0, bits)});
        for (const auto& c : dp.coeffs()) dc.push_back({mpf_class(c, bits), mpf_class(0, bits)});
        MpComplex zero(bits);
        for (int it = 0; it < 4; ++it) {
            MpComplex pv = eval_poly(pc, z, zero);
            MpComplex dv = eval_poly(dc, z, zero);
            if (dv.norm() == 0) break;
            z = z - pv / dv;
        }
        QComplex cand = snap_to_exact(z);
        QComplex pv = p.evaluate(cand);
        QComplex dv = dp.evaluate(cand);
        Q dnorm = dv.norm2();
        if (dnorm != 0) {
            Q r2 = n2 * pv.norm2() / dnorm;
            // same-root guard: the new disk must stay inside the certified one
            Q shift2 = (cand - root.center).norm2();
            if (r2 < root.radius2 && 2 * (shift2 + r2) <= root.radius2) {
                root.center = cand;
                root.radius2 = r2;
                if (root.radius2 <= target_radius2) return;
            }
        }
        bits *= 2;
        if (bits > cfg.max_bits * 4) break;
    }
    if (root.radius2 > target_radius2)
        throw cluster_ambiguity("root refinement stalled at the precision floor");
}

bool certified_is_root_of(const Polynomial& minpoly, IsolatedRoot root, const Polynomial& q,
                          const RootConfig& cfg) {
    if (q.is_zero()) return true;
    Polynomial g = gcd(minpoly, q);
    if (g.degree() == 0) return false;
    Polynomial h = divexact(minpoly.monic(), g);
    // The certified root xi is a root of exactly one of g, h (minpoly squarefree).
    for (int round = 0; round < 64; ++round) {
        // Lipschitz tests: |f(c)| > L_f * r  ==>  xi is not a root of f.
        Q r = sqrt_upper(root.radius2);
        Q bg = derivative_bound_on_disk(g, root.center, root.radius2) * r;
        Q bh = derivative_bound_on_disk(h, root.center, root.radius2) * r;
        Q gv2 = g.evaluate(root.center).norm2();
        Q hv2 = h.evaluate(root.center).norm2();
        if (gv2 > bg * bg) return false;  // not a root of g
        if (hv2 > bh * bh) return true;   // not a root of h, hence a root of g
        refine_root(minpoly, root, root.radius2 / Q(Int(1) << 24), cfg);
    }
    throw cluster_ambiguity("is_root_of test undecided at the precision floor");
}

std::vector<std::pair<Q, int>> rational_roots(const Polynomial& p) {
    std::vector<std::pair<Q, int>> out;
    if (p.degree() <= 0) return out;
    for (const auto& [mult, factor] : squarefree_decomposition(p)) {
        Polynomial f = factor.primitive();
        if (f.degree() == 1) {
            out.emplace_back(-f.coeff(0) / f.coeff(1), mult);
            continue;
        }
        // Any rational root a/b of a primitive integer polynomial has b | lc,
        // so distinct candidates are >= 1/lc^2 apart: refining below that
        // spacing makes the continued-fraction snap complete.
        Q lc = f.leading();
        Q spacing = Q(1) / (4 * lc * lc);
        Q target = spacing * spacing / 4;
        for (auto& root : isolate_roots(f)) {
            if (root.radius2 > target) refine_root(f, root, target);
            if (root.center.im * root.center.im > root.radius2) continue;  // off the real axis
            Q r = sqrt_upper(root.radius2);
            auto cand = snap_rational(root.center.re, r);
            if (cand && f.evaluate(*cand) == 0) out.emplace_back(*cand, mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace semiconj
