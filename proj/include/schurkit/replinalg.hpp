#pragma once

#include "schurkit/exact_matrix.hpp"
#include "schurkit/polynomial.hpp"
#include "schurkit/rootdata.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurkit {

// Largest carrier dimension a representation may have unless overridden.
inline constexpr std::size_t kDefaultMaxCarrierDim = 3000;

// Raised when a requested carrier exceeds the configured dimension cap.
class CarrierTooLarge : public std::length_error {
public:
    CarrierTooLarge(std::size_t dim, std::size_t cap);
    std::size_t dimension() const noexcept { return dim_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t dim_;
    std::size_t cap_;
};

// Chevalley generators e_i, f_i and Cartan elements H_i of g acting on some
// space.  On the natural module H_i = E_{i,i} - E_{n+i,n+i} and
// [e_i, f_i] equals H_i - H_{i+1} (i < n) or 2H_n (B), H_n (C),
// H_{n-1} + H_n (D).
struct GeneratorSet {
    LieType type;
    std::vector<ExactMatrix> e;
    std::vector<ExactMatrix> f;
    std::vector<ExactMatrix> h;
    std::size_t space_dim = 0;

    // e, f, h in that order.
    std::vector<ExactMatrix> all() const;
};

// The sum of tensor powers E^{(x)s} the generators act on, largest power first.
struct Carrier {
    int r = 0;
    std::vector<int> powers;

    std::size_t dimension(int natural_dim) const;
    // "E^3 + E^1"
    std::string describe() const;
};

struct Representation {
    GeneratorSet gens;
    Carrier carrier;
    // Weight of each standard basis vector.
    std::vector<Weight> weight_index;

    std::size_t dim() const noexcept { return gens.space_dim; }
};

// Gram matrix of the invariant form on E:
// [[0,I,0],[I,0,0],[0,0,1]] (B), [[0,I],[-I,0]] (C), [[0,I],[I,0]] (D).
ExactMatrix form_matrix(const LieType& type);
// X^T M + M X == 0.
bool preserves_form(const ExactMatrix& x, const ExactMatrix& form);

// Weights of the standard basis of E: e_i, -e_i, and 0 for the last vector in type B.
std::vector<Weight> natural_weights(const LieType& type);
GeneratorSet natural_rep(const LieType& type);

// sum_k Id^{(x)k} (x) X (x) Id^{(x)(r-1-k)}; throws std::invalid_argument if r < 1.
ExactMatrix tensor_lift(const ExactMatrix& x, int r);

// Generators on E^{(x)r} alone.
Representation tensor_power_rep(const LieType& type, int r, std::size_t max_dim = kDefaultMaxCarrierDim);
// Generators on the tower: the sum of E^{(x)s} for s = r, r-1, ..., 0 (B) or
// s = r, r-2, ... down to 1 or 0 (C, D).
Representation tower_rep(const LieType& type, int r, std::size_t max_dim = kDefaultMaxCarrierDim);

// Least-degree monic annihilating polynomial, computed exactly.
Polynomial minimal_polynomial(const ExactMatrix& x);

struct AlgebraClosure {
    std::size_t dimension = 0;
    // Reduced row echelon basis of the vectorized span, ordered by pivot.
    std::vector<ExactMatrix> basis;
};

// Unital associative algebra generated by mats.  Throws std::invalid_argument
// if the matrices are not all square of one size.
AlgebraClosure algebra_closure(const std::vector<ExactMatrix>& mats, bool want_basis = true);

} // namespace schurkit
