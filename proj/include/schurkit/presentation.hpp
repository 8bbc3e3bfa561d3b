#pragma once

#include "schurkit/idempotents.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schurkit {

// Where a relation failed: the first failing instance, and the largest
// residual entry of that instance (0-based row/col).
struct RelationWitness {
    std::string instance;
    std::size_t row = 0;
    std::size_t col = 0;
    Rational value;
};

struct RelationStatus {
    std::string label;
    bool holds = true;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::optional<RelationWitness> witness;
};

struct RelationReport {
    // 'R' for the idempotent presentation, else the family letter.
    char presentation = 'R';
    LieType type;
    int r = 0;
    std::vector<RelationStatus> relations;
    std::string carrier;
    std::vector<int> reduced_word;
    std::string generator_convention;
    std::vector<std::string> notes;

    bool ok() const;
    std::vector<std::string> failed_labels() const;
    const RelationStatus* find(const std::string& label) const;
};

// Description of the Chevalley matrices used on the natural module.
std::string generator_convention(const LieType& type);

// (X1)-(X7) of the type-specific presentation, X the family letter.
// Throws std::invalid_argument if rep was built for another type or r.
RelationReport verify_serre_presentation(const LieType& type, int r, const Representation& rep);

// (R1)-(R8) with 1_lambda taken from fam.  (R1) also flags a family whose
// weights differ from Pi.  Ladder instances naming an idempotent absent from
// fam are not evaluated.
RelationReport verify_idempotent_presentation(const LieType& type, int r, const Representation& rep,
                                              const IdempotentFamily& fam);

struct IdempotentAudit {
    bool orthogonal = true;
    bool complete = true;
    // reconstruct_H(fam, i) == H_i for every i
    bool h_reconstructed = true;
    LadderReport ladder;
    // rank(1_lambda) and the multiplicity of lambda in the carrier character.
    std::map<Weight, std::pair<std::size_t, std::int64_t>, WeightDescending> ranks;
    bool ranks_match = true;

    bool ok() const { return orthogonal && complete && h_reconstructed && ladder.ok() && ranks_match; }
};

IdempotentAudit audit_idempotents(const Representation& rep, const IdempotentFamily& fam);

struct ZeroLocus {
    LieType type;
    int r;
    bool include_P1Hi;
    // Equations used, e.g. "P1(J)" and "P1(H_i)".
    std::vector<std::string> equations;
    WeightSet locus;
    bool equals_Pi = false;
    // First point of the locus outside the integer lattice, if any.
    std::optional<Weight> half_integer_witness;
};

// Common zeros in ((1/2)Z)^n cap [-r, r]^n of P1(J) (type B) or P2(J)
// (types C, D) over all sign vectors J = +-H_1 +- ... +- H_n, together with
// P1(H_i) for every i when include_P1Hi is set.
ZeroLocus zero_locus(const LieType& type, int r, bool include_P1Hi);

// Whether dropping P1(H_i) can enlarge the locus: type B with n >= 2.  For
// B_1 the only sign vectors are J = +-H_1, so P1(J) already contains P1(H_1).
bool p1hi_needed(const LieType& type);

struct QuotientWitness {
    LieType type;
    int r;
    std::size_t dim_tower;
    std::size_t dim_tensor;
    WeightSet pi_minus_pi0;
    // sum over pi \ pi0 of dim L(lambda)^2
    std::int64_t predicted_difference;
    bool consistent = false;
};

// Closure dimensions on the tower and on E^{(x)r} alone.
QuotientWitness quotient_witness(const LieType& type, int r, std::size_t max_dim = kDefaultMaxCarrierDim);

// The algebras generated by {e_i, f_i, H_i} and by {e_i, f_i} with all 1_lambda
// have the same canonical echelon basis.
bool same_operator_algebra(const Representation& rep, const IdempotentFamily& fam);

} // namespace schurkit
