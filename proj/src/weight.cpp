#include "schurkit/weight.hpp"

#include <stdexcept>

namespace schurkit {

Weight Weight::unit(std::size_t n, std::size_t i) {
    Weight w = zero(n);
    w.coords_.at(i) = 1;
    return w;
}

Weight Weight::from_ints(const std::vector<std::int64_t>& values) {
    std::vector<Rational> coords;
    coords.reserve(values.size());
    for (auto v : values)
        coords.emplace_back(v);
    return Weight(std::move(coords));
}

bool Weight::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Weight::is_integral() const {
    for (const auto& c : coords_)
        if (!c.is_integer())
            return false;
    return true;
}

std::vector<std::int64_t> Weight::to_ints() const {
    std::vector<std::int64_t> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_)
        out.push_back(c.to_int64());
    return out;
}

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ',';
        s += coords_[i].str();
    }
    return s + ")";
}

Weight& Weight::operator+=(const Weight& rhs) {
    if (rhs.size() != size())
        throw std::invalid_argument("Weight: rank mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += rhs.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
    if (rhs.size() != size())
        throw std::invalid_argument("Weight: rank mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= rhs.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& c) {
    for (auto& x : coords_)
        x *= c;
    return *this;
}

Weight Weight::operator-() const {
    Weight out = *this;
    for (auto& x : out.coords_)
        x = -x;
    return out;
}

Rational dot(const Weight& x, const Weight& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("dot: rank mismatch");
    Rational acc;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * y[i];
    return acc;
}

} // namespace schurkit
