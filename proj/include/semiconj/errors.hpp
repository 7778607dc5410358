#ifndef SEMICONJ_ERRORS_HPP
#define SEMICONJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiconj {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// ratfun-core
struct both_zero_error : error {
    both_zero_error() : error("normalize: numerator and denominator are both zero") {}
};

// ramification / numerics
struct cluster_ambiguity : error {
    explicit cluster_ambiguity(const std::string& what) : error("cluster ambiguity: " + what) {}
};
struct internal_inconsistency : error {
    explicit internal_inconsistency(const std::string& what) : error("internal inconsistency: " + what) {}
};

// monodromy
struct continuation_failure : error {
    explicit continuation_failure(const std::string& what) : error("continuation failure: " + what) {}
};
struct invariant_violation : error {
    explicit invariant_violation(const std::string& what) : error("invariant violation: " + what) {}
};

// orbifold
struct not_holomorphic_map : error {
    not_holomorphic_map() : error("map is not holomorphic between the given orbifolds") {}
};

// decomposition
struct extraction_failure : error {
    explicit extraction_failure(const std::string& what) : error("extraction failure: " + what) {}
};
struct degree_mismatch : error {
    explicit degree_mismatch(const std::string& what) : error("degree mismatch: " + what) {}
};

// generators / verify
struct bad_parameters : error {
    explicit bad_parameters(const std::string& what) : error("bad parameters: " + what) {}
};
struct unsupported_root : error {
    explicit unsupported_root(const std::string& what) : error("unsupported root of unity: " + what) {}
};
struct singular_curve : error {
    singular_curve() : error("singular curve: discriminant g2^3 - 27 g3^2 vanishes") {}
};
struct transcription_invalid : error {
    explicit transcription_invalid(const std::string& what) : error("transcription invalid: " + what) {}
};
struct unsupported_signature : error {
    explicit unsupported_signature(const std::string& what) : error("unsupported signature: " + what) {}
};
struct identity_mismatch : error {
    explicit identity_mismatch(const std::string& what) : error("identity mismatch: " + what) {}
};

// CLI / parsing
struct parse_error : error {
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

} // namespace semiconj

#endif
