#pragma once

#include "schurkit/exact_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace schurkit {

// Univariate polynomial over Q in the indeterminate T.
class Polynomial {
public:
    Polynomial() = default;
    // coeffs[k] is the coefficient of T^k.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(unsigned degree, const Rational& c = Rational(1));
    // prod_k (T - roots[k])
    static Polynomial from_roots(const std::vector<Rational>& roots);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    Rational leading() const { return is_zero() ? Rational() : coeffs_.back(); }
    Polynomial monic() const;

    Rational evaluate(const Rational& x) const;
    ExactMatrix evaluate(const ExactMatrix& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    // Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    // "T^2 - 1"
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace schurkit
