#include "schurkit/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace schurkit {

char family_letter(Family f) {
    switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(std::string_view text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: break;
        }
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected B, C or D)");
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
    const int min_rank = family == Family::D ? 2 : 1;
    if (rank < min_rank)
        throw std::invalid_argument(std::string("rank ") + std::to_string(rank) + " out of range for type " +
                                    family_letter(family) + " (minimum " + std::to_string(min_rank) + ")");
}

std::string LieType::str() const { return family_letter(family_) + std::to_string(rank_); }

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw std::logic_error("simple roots are linearly dependent");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational scale = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero())
                continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

RootSystem::RootSystem(LieType type) : type_(type) {
    const auto n = static_cast<std::size_t>(type.rank());
    for (std::size_t i = 0; i + 1 < n; ++i)
        simple_roots_.push_back(Weight::unit(n, i) - Weight::unit(n, i + 1));
    switch (type.family()) {
    case Family::B: simple_roots_.push_back(Weight::unit(n, n - 1)); break;
    case Family::C: simple_roots_.push_back(Rational(2) * Weight::unit(n, n - 1)); break;
    case Family::D: simple_roots_.push_back(Weight::unit(n, n - 2) + Weight::unit(n, n - 1)); break;
    }

    for (const auto& a : simple_roots_)
        coroots_.push_back((Rational(2) / dot(a, a)) * a);

    cartan_.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cartan_[i][j] = static_cast<int>(dot(coroots_[i], simple_roots_[j]).to_int64());

    std::vector<std::vector<Rational>> basis;
    for (const auto& a : simple_roots_)
        basis.push_back(a.coords());
    root_basis_inverse_ = invert(basis);

    // Close the simple roots under the simple reflections.
    std::set<Weight> roots(simple_roots_.begin(), simple_roots_.end());
    std::vector<Weight> frontier(simple_roots_.begin(), simple_roots_.end());
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& r : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                Weight s = r - pairing(r, i) * simple_roots_[i];
                if (roots.insert(s).second)
                    next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    rho_ = Weight::zero(n);
    for (const auto& r : roots) {
        const auto c = simple_root_coordinates(r);
        if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0; })) {
            positive_roots_.push_back(r);
            rho_ += r;
        }
    }
    std::sort(positive_roots_.begin(), positive_roots_.end(), WeightDescending{});
    rho_ *= Rational(1, 2);
}

Rational RootSystem::pairing(const Weight& w, std::size_t i) const { return dot(w, coroots_.at(i)); }

std::vector<Rational> RootSystem::simple_root_coordinates(const Weight& w) const {
    const std::size_t n = rank();
    if (w.size() != n)
        throw std::invalid_argument("weight rank mismatch");
    std::vector<Rational> c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (!w[k].is_zero())
                c[j] += w[k] * root_basis_inverse_[k][j];
    return c;
}

RootSystem build_root_system(LieType type) { return RootSystem(type); }

Weight coroot(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank())
        throw std::out_of_range("coroot index " + std::to_string(i) + " out of range");
    const Weight& a = rs.simple_root(i);
    return (Rational(2) / dot(a, a)) * a;
}

std::vector<Weight> fundamental_weights(const RootSystem& rs) {
    const auto n = rs.rank();
    std::vector<Weight> out;
    Weight partial = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        partial += Weight::unit(n, i);
        out.push_back(partial);
    }
    Weight half(std::vector<Rational>(n, Rational(1, 2)));
    switch (rs.type().family()) {
    case Family::C: break;
    case Family::B: out[n - 1] = half; break;
    case Family::D: {
        Weight minus = half;
        minus[n - 1] = Rational(-1, 2);
        out[n - 2] = minus;
        out[n - 1] = half;
        break;
    }
    }
    return out;
}

bool in_weight_lattice(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.rank())
        return false;
    if (w.is_integral())
        return true;
    if (rs.type().family() == Family::C)
        return false;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] - half).is_integer())
            return false;
    return true;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
    if (!in_weight_lattice(rs, w))
        return false;
    const auto n = w.size();
    for (std::size_t i = 0; i + 2 < n; ++i)
        if (w[i] < w[i + 1])
            return false;
    if (rs.type().family() == Family::D)
        return w[n - 2] >= w[n - 1].abs();
    if (n >= 2 && w[n - 2] < w[n - 1])
        return false;
    return w[n - 1].sign() >= 0;
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lam) {
    for (const auto& c : rs.simple_root_coordinates(lam - mu))
        if (c.sign() < 0 || !c.is_integer())
            return false;
    return true;
}

Weight simple_reflect(const RootSystem& rs, std::size_t i, const Weight& w) {
    if (i >= rs.rank())
        throw std::out_of_range("simple reflection index out of range");
    return w - rs.pairing(w, i) * rs.simple_root(i);
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& w) {
    Weight v = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (rs.pairing(v, i).sign() < 0) {
                v = simple_reflect(rs, i, v);
                moved = true;
            }
    }
    return v;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
    std::set<Weight, WeightDescending> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& v : frontier)
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                Weight s = simple_reflect(rs, i, v);
                if (orbit.insert(s).second)
                    next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return {orbit.begin(), orbit.end()};
}

Weight LongestElement::apply(const Weight& w) const {
    const auto& t = root_system.type();
    Weight out = -w;
    if (t.family() == Family::D && t.rank() % 2 == 1)
        out[w.size() - 1] = w[w.size() - 1];
    return out;
}

Weight LongestElement::apply_word(const Weight& w) const {
    Weight v = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = simple_reflect(root_system, *it, v);
    return v;
}

std::vector<int> LongestElement::word_one_based() const {
    std::vector<int> out;
    for (auto i : word)
        out.push_back(static_cast<int>(i) + 1);
    return out;
}

LongestElement longest_element(const RootSystem& rs) {
    // Walk rho to the antidominant chamber, always crossing the first wall it
    // sits on the positive side of; each step lengthens the element by one.
    Weight v = rs.rho();
    std::vector<std::size_t> steps;
    for (;;) {
        std::size_t i = 0;
        while (i < rs.rank() && rs.pairing(v, i).sign() <= 0)
            ++i;
        if (i == rs.rank())
            break;
        v = simple_reflect(rs, i, v);
        steps.push_back(i);
    }
    // v = s_{steps.back()} ... s_{steps.front()} rho, so that product is w0.
    return LongestElement{rs, {steps.rbegin(), steps.rend()}};
}

} // namespace schurkit
