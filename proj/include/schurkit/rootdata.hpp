#pragma once

#include "schurkit/weight.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace schurkit {

enum class Family { B, C, D };

char family_letter(Family f);
// Accepts "B", "C", "D" (case-insensitive); throws std::invalid_argument.
Family parse_family(std::string_view text);

// A classical type B_n, C_n or D_n.  Construction validates the rank
// (n >= 1 for B and C, n >= 2 for D).
class LieType {
public:
    LieType(Family family, int rank);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    // Dimension m of the natural module: 2n+1 for B, 2n for C and D.
    int natural_dim() const noexcept { return family_ == Family::B ? 2 * rank_ + 1 : 2 * rank_; }
    std::string str() const;

    friend bool operator==(const LieType&, const LieType&) = default;

private:
    Family family_;
    int rank_;
};

// Root datum of a classical type, realized in the epsilon basis:
// alpha_i = e_i - e_{i+1} (i < n) and alpha_n = e_n (B), 2e_n (C),
// e_{n-1} + e_n (D).  Indices in the C++ interface are 0-based.
class RootSystem {
public:
    explicit RootSystem(LieType type);

    const LieType& type() const noexcept { return type_; }
    std::size_t rank() const noexcept { return simple_roots_.size(); }
    const std::vector<Weight>& simple_roots() const noexcept { return simple_roots_; }
    const Weight& simple_root(std::size_t i) const { return simple_roots_.at(i); }
    // cartan()[i][j] = a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
    const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }
    const std::vector<Weight>& positive_roots() const noexcept { return positive_roots_; }
    const Weight& rho() const noexcept { return rho_; }

    // (w, alpha_i^vee).
    Rational pairing(const Weight& w, std::size_t i) const;
    // Coefficients c with w = sum_i c_i alpha_i.
    std::vector<Rational> simple_root_coordinates(const Weight& w) const;

private:
    LieType type_;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> coroots_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Weight> positive_roots_;
    Weight rho_;
    // Inverse of the matrix whose rows are the simple roots.
    std::vector<std::vector<Rational>> root_basis_inverse_;
};

RootSystem build_root_system(LieType type);

// 2 alpha_i / (alpha_i, alpha_i); throws std::out_of_range for a bad index.
Weight coroot(const RootSystem& rs, std::size_t i);

// varpi_1, ..., varpi_n with (varpi_j, alpha_i^vee) = delta_ij.
std::vector<Weight> fundamental_weights(const RootSystem& rs);

// Membership in the integral weight lattice X: Z^n for C, and
// Z^n together with (1/2,...,1/2) + Z^n for B and D.
bool in_weight_lattice(const RootSystem& rs, const Weight& w);

// w in X and lambda_1 >= ... >= lambda_n >= 0 (B, C), or
// lambda_1 >= ... >= lambda_{n-1} >= |lambda_n| (D).
bool is_dominant(const RootSystem& rs, const Weight& w);

// mu <= lam in the dominance order: lam - mu is a nonnegative integer
// combination of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam);

// s_i(w) = w - (w, alpha_i^vee) alpha_i.
Weight simple_reflect(const RootSystem& rs, std::size_t i, const Weight& w);

// Dominant representative of the Weyl orbit of w, and the full orbit
// (sorted descending).
Weight dominant_conjugate(const RootSystem& rs, const Weight& w);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

// The longest element w0 of the Weyl group.
//
// `word` is a reduced expression w0 = s_{word[0]} s_{word[1]} ... (0-based
// indices).  `apply` uses the closed form of the action: w -> -w except in
// type D with n odd, where only the last coordinate is kept.
// `apply_word` evaluates the reduced word as composed reflections.
struct LongestElement {
    RootSystem root_system;
    std::vector<std::size_t> word;

    Weight apply(const Weight& w) const;
    Weight apply_word(const Weight& w) const;
    // Reduced word with 1-based indices, as printed in reports.
    std::vector<int> word_one_based() const;
};

LongestElement longest_element(const RootSystem& rs);

} // namespace schurkit
