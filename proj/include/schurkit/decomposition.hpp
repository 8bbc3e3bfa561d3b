#pragma once

#include "schurkit/weightsets.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace schurkit {

// Weight multiplicities of a finite-dimensional module.
struct FormalCharacter {
    std::map<Weight, std::int64_t, WeightDescending> terms;

    std::int64_t multiplicity(const Weight& w) const;
    std::int64_t dimension() const;
    // Multiplicities agree along every Weyl orbit.
    bool is_weyl_invariant(const RootSystem& rs) const;
    // Adds c * other (c may be negative); zero terms are dropped.
    void add_scaled(const FormalCharacter& other, std::int64_t c);

    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

FormalCharacter natural_character(const LieType& type);
FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b);
// char(E)^s; the trivial character for s = 0.
FormalCharacter tensor_power_character(const LieType& type, int s);

// Highest weights of the composition factors of E^{(x)r}, read off from
// Weyl's description of the irreducible constituents.
WeightSet pi0_weyl_rules(const LieType& type, int r);

// Full character of L(lam) by the Freudenthal recursion.  Results are
// memoized process-wide.  Throws std::invalid_argument unless lam is dominant.
FormalCharacter freudenthal_multiplicities(const RootSystem& rs, const Weight& lam);

// prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha).
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam);

struct DecompositionResult {
    LieType type;
    int r;
    WeightSet pi;
    WeightSet pi0;
    // Multiplicity of L(mu) in E^{(x)r}, from the character oracle.
    std::map<Weight, std::int64_t, WeightDescending> multiplicities;
    bool equal = false;
};

// Raised when the tensor-power character cannot be peeled into irreducible
// characters, or when the two routes to pi0 disagree.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Peels irreducible characters off char(E)^r, highest weight first.
DecompositionResult decompose_tensor_character(const LieType& type, int r);

// pi0 from Weyl's rules against pi; also checks the rules against the
// character oracle and throws OracleMismatch if they differ.
DecompositionResult compare_pi0_pi(const LieType& type, int r);

struct SchurDimensions {
    // sum over pi of dim L(lambda)^2
    std::int64_t s_pi;
    // sum over pi0 of dim L(lambda)^2
    std::int64_t schur;
};

SchurDimensions schur_dimensions(const LieType& type, int r);

struct ClassificationRow {
    int n;
    int r;
    bool equal;
    std::size_t pi_size;
    std::size_t pi0_size;
    SchurDimensions dims;
};

// compare_pi0_pi over 1 <= n <= n_max, 1 <= r <= r_max in type B.
std::vector<ClassificationRow> classify_type_B(int n_max, int r_max);

} // namespace schurkit
