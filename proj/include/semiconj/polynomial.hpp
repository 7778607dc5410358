#ifndef SEMICONJ_POLYNOMIAL_HPP
#define SEMICONJ_POLYNOMIAL_HPP

#include <semiconj/scalar.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace semiconj {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const Q& c) { coeffs_ = {c}; trim(); }
    explicit Polynomial(std::vector<Q> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Q> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Q(1)); }
    static Polynomial x() { return Polynomial({Q(0), Q(1)}); }
    // c * z^k
    static Polynomial monomial(const Q& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Q>& coeffs() const { return coeffs_; }
    const Q& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    Q coeff(int i) const;  // 0 when out of range
    const Q& leading() const { return coeffs_.back(); }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Q& s) const;

    Polynomial derivative() const;
    Polynomial pow(unsigned n) const;

    Q evaluate(const Q& x) const;
    QComplex evaluate(const QComplex& x) const;
    std::complex<double> evaluate(const std::complex<double>& x) const;

    // p(z + a), exact Taylor shift.
    Polynomial shifted(const Q& a) const;
    // z^n * p(1/z) with n >= degree (coefficients reversed, padded).
    Polynomial reversed(int n) const;
    // p(s * z)
    Polynomial scaled_arg(const Q& s) const;
    // multiplicity of x0 as a root (0 if not a root)
    int root_multiplicity(const Q& x0) const;
    // order of vanishing at 0
    int order_at_zero() const;

    Polynomial monic() const;
    // integer-primitive representative: clears denominators, divides by content,
    // makes the leading coefficient positive
    Polynomial primitive() const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Q> coeffs_;
};

// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
// Exact division; throws internal_inconsistency when the remainder is nonzero.
Polynomial divexact(const Polynomial& a, const Polynomial& b);

// Monic gcd over Q (subresultant-free: primitive PRS on integer parts).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Yun squarefree decomposition: p = c * prod f_k^k with f_k squarefree,
// pairwise coprime. Returns the list (k, f_k) for nonconstant f_k, k ascending.
std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& p);
// Product of the f_k (the squarefree part), monic.
Polynomial squarefree_part(const Polynomial& p);

// Resultant Res_z(a, b) over Q.
Q resultant(const Polynomial& a, const Polynomial& b);

// Composition p(q(z)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

// All rational roots, each exactly verified, with multiplicities.
std::vector<std::pair<Q, int>> rational_roots(const Polynomial& p);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
Polynomial interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys);

} // namespace semiconj

#endif
