#pragma once

#include "schurkit/replinalg.hpp"
#include "schurkit/weightsets.hpp"

#include <map>
#include <string>
#include <vector>

namespace schurkit {

enum class AnnihilatorKind { P1, P2 };

// P1(T) = (T+r)(T+r-1)...(T-r) and P2(T) = (T+r)(T+r-2)...(T-r).
struct AnnihilatorPolynomial {
    AnnihilatorKind kind;
    int r;
    std::vector<int> roots;

    int degree() const noexcept { return static_cast<int>(roots.size()); }
    Polynomial polynomial() const;
    std::string label() const;
};

AnnihilatorPolynomial annihilator(AnnihilatorKind kind, int r);

// P1(T) / (T - k); throws std::out_of_range unless -r <= k <= r.
Polynomial deleted_factor_poly(int r, int k);

// Evaluates prod_j (x - c_j) one linear factor at a time, never expanding.
ExactMatrix evaluate_factored(const std::vector<int>& roots, const ExactMatrix& x);

// The weight idempotents 1_lambda, lambda in Pi, on a representation.
struct IdempotentFamily {
    LieType type;
    int r;
    std::map<Weight, ExactMatrix, WeightDescending> table;

    // Null when lambda has no idempotent in the table.
    const ExactMatrix* find(const Weight& lambda) const;
};

// 1_lambda = prod_i P1^{(lambda_i)}(H_i) / P1^{(lambda_i)}(lambda_i) for each
// lambda in Pi(E^{(x)r}), r taken from the carrier.  The result is checked
// entry for entry against the projector onto the lambda weight space.
// Throws std::domain_error if some H_i is not diagonal with integer spectrum in [-r, r].
IdempotentFamily build_idempotents(const Representation& rep);

// sum_lambda lambda_i 1_lambda.
ExactMatrix reconstruct_H(const IdempotentFamily& fam, std::size_t i);

struct LadderViolation {
    char generator; // 'e' or 'f'
    std::size_t index;
    Weight lambda;
};

struct LadderReport {
    std::size_t checked = 0;
    std::vector<LadderViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// e_i 1_lambda = 1_{lambda + alpha_i} e_i and f_i 1_lambda = 1_{lambda - alpha_i} f_i
// for all i and lambda in the family, with 1_mu = 0 for mu outside Pi.
LadderReport ladder_check(const IdempotentFamily& fam, const Representation& rep);

} // namespace schurkit
