#ifndef SEMICONJ_ROOTS_HPP
#define SEMICONJ_ROOTS_HPP

#include <semiconj/polynomial.hpp>

#include <vector>

namespace semiconj {

/// Certified isolating disk for one complex root of a squarefree polynomial:
/// the disk |z - center| <= sqrt(radius2) contains exactly one root.
/// center is an exact rational complex snapshot, radius2 an exact rational,
/// so the certificate is a statement in exact arithmetic.
struct IsolatedRoot {
    QComplex center;
    Q radius2;
};

struct RootConfig {
    int max_bits = 1024;  // precision ladder floor before cluster_ambiguity
};

// All complex roots of a squarefree polynomial with certified, pairwise
// disjoint inclusion disks. The certificate is the classical bound
// min_k |c - z_k| <= n |p(c)/p'(c)| evaluated exactly, plus pairwise
// disjointness of the n disks. Throws cluster_ambiguity when the precision
// ladder (double, then software floats up to cfg.max_bits) is exhausted.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& squarefree,
                                        const RootConfig& cfg = RootConfig());

// Newton refinement of a certified root against its own polynomial until
// radius2 <= target_radius2, preserving the "same root" certificate.
void refine_root(const Polynomial& squarefree, IsolatedRoot& root, const Q& target_radius2,
                 const RootConfig& cfg = RootConfig());

// Decides exactly whether the root certified by `root` (w.r.t. `minpoly`) is
// a root of q. Requires minpoly squarefree; q arbitrary nonzero.
bool certified_is_root_of(const Polynomial& minpoly, IsolatedRoot root, const Polynomial& q,
                          const RootConfig& cfg = RootConfig());

// Rational u with u*u >= x (tight within a relative factor ~2^-40).
Q sqrt_upper(const Q& x);

// Upper bound for sup |p'| on the disk, used for exact Lipschitz arguments.
Q derivative_bound_on_disk(const Polynomial& p, const QComplex& center, const Q& radius2);

} // namespace semiconj

#endif
