#pragma once

#include "schurkit/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace schurkit {

// A vector in h* written in the epsilon basis: coords[i] is the coefficient
// of epsilon_{i+1}.  The pairing (epsilon_i, epsilon_j) = delta_ij.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight zero(std::size_t n) { return Weight(std::vector<Rational>(n)); }
    static Weight unit(std::size_t n, std::size_t i);
    static Weight from_ints(const std::vector<std::int64_t>& values);

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_integral() const;
    // Coordinates as integers; throws std::domain_error on a fractional entry.
    std::vector<std::int64_t> to_ints() const;
    // "(1,0,-1/2)"
    std::string str() const;

    Weight& operator+=(const Weight& rhs);
    Weight& operator-=(const Weight& rhs);
    Weight& operator*=(const Rational& c);
    Weight operator-() const;
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& c, Weight w) { return w *= c; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        return a.coords_ <=> b.coords_;
    }

private:
    std::vector<Rational> coords_;
};

// The standard form (x, y) = sum_i x_i y_i.
Rational dot(const Weight& x, const Weight& y);

// Descending lexicographic order; used as the canonical order of weight sets.
struct WeightDescending {
    bool operator()(const Weight& a, const Weight& b) const { return b < a; }
};

} // namespace schurkit
