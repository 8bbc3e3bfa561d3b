#include "schurkit/polynomial.hpp"

#include <stdexcept>

namespace schurkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots)
        p = p * Polynomial({-r, Rational(1)});
    return p;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    Polynomial out = *this;
    const Rational inv = leading().inverse();
    for (auto& c : out.coeffs_)
        c *= inv;
    return out;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

ExactMatrix Polynomial::evaluate(const ExactMatrix& x) const {
    if (!x.is_square())
        throw std::invalid_argument("Polynomial::evaluate: matrix is not square");
    const auto id = ExactMatrix::identity(x.rows());
    ExactMatrix acc(x.rows(), x.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + (*it) * id;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("Polynomial::divmod: division by zero polynomial");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree())
        return {Polynomial(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1));
    const Rational lead_inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        const Rational c = rem.leading() * lead_inv;
        quot[shift] = c;
        for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
            rem.coeffs_[shift + k] -= c * divisor.coeffs_[k];
        rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const bool unit = mag == Rational(1);
        if (!unit || k == 0)
            s += mag.str();
        if (k > 0) {
            if (!unit)
                s += "*";
            s += "T";
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

} // namespace schurkit
