#include "schurkit/decomposition.hpp"

#include "schurkit/replinalg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

namespace schurkit {

std::int64_t FormalCharacter::multiplicity(const Weight& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t FormalCharacter::dimension() const {
    std::int64_t total = 0;
    for (const auto& [w, c] : terms)
        total += c;
    return total;
}

bool FormalCharacter::is_weyl_invariant(const RootSystem& rs) const {
    for (const auto& [w, c] : terms)
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (multiplicity(simple_reflect(rs, i, w)) != c)
                return false;
    return true;
}

void FormalCharacter::add_scaled(const FormalCharacter& other, std::int64_t c) {
    if (c == 0)
        return;
    for (const auto& [w, m] : other.terms) {
        auto& slot = terms[w];
        slot += c * m;
        if (slot == 0)
            terms.erase(w);
    }
}

FormalCharacter natural_character(const LieType& type) {
    FormalCharacter ch;
    for (const auto& w : natural_weights(type))
        ch.terms[w] += 1;
    return ch;
}

FormalCharacter convolve(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out;
    for (const auto& [x, cx] : a.terms)
        for (const auto& [y, cy] : b.terms)
            out.terms[x + y] += cx * cy;
    return out;
}

FormalCharacter tensor_power_character(const LieType& type, int s) {
    if (s < 0)
        throw std::invalid_argument("tensor_power_character: negative exponent");
    FormalCharacter ch;
    ch.terms[Weight::zero(static_cast<std::size_t>(type.rank()))] = 1;
    const FormalCharacter nat = natural_character(type);
    for (int k = 0; k < s; ++k)
        ch = convolve(ch, nat);
    return ch;
}

namespace {

std::size_t nonzero_parts(const Weight& w) {
    std::size_t t = 0;
    for (const auto& c : w.coords())
        if (!c.is_zero())
            ++t;
    return t;
}

} // namespace

WeightSet pi0_weyl_rules(const LieType& type, int r) {
    if (r < 1)
        throw std::invalid_argument("pi0_weyl_rules: r must be at least 1");
    const int n = type.rank();
    std::vector<Weight> out;
    auto take = [&out](const WeightSet& ws) { out.insert(out.end(), ws.begin(), ws.end()); };
    for (int s = r; s >= 0; s -= 2) {
        if (type.family() == Family::D)
            take(partitions_lambda_pm(n, s));
        else
            take(partitions_lambda_plus(n, s));
    }
    if (type.family() == Family::B) {
        // Sum r - 2k' - 1 is allowed when f_{n-k'} != 0, i.e. at least
        // n - k' nonzero parts.
        for (int kp = 0; r - 2 * kp - 1 >= 0; ++kp)
            for (const auto& f : partitions_lambda_plus(n, r - 2 * kp - 1))
                if (static_cast<int>(nonzero_parts(f)) >= n - kp)
                    out.push_back(f);
    }
    return WeightSet(std::move(out), "pi0(" + std::string(1, family_letter(type.family())) + "," +
                                         std::to_string(n) + "," + std::to_string(r) + ")");
}

namespace {

class CharacterCache {
public:
    using Key = std::tuple<int, int, Weight>;

    const FormalCharacter* find(const Key& k) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(k);
        return it == table_.end() ? nullptr : &it->second;
    }

    const FormalCharacter& insert(Key k, FormalCharacter ch) {
        std::unique_lock lock(mutex_);
        return table_.emplace(std::move(k), std::move(ch)).first->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, FormalCharacter> table_;
};

CharacterCache& character_cache() {
    static CharacterCache cache;
    return cache;
}

Rational height(const RootSystem& rs, const Weight& w) {
    Rational h = 0;
    for (const auto& c : rs.simple_root_coordinates(w))
        h += c;
    return h;
}

FormalCharacter freudenthal_uncached(const RootSystem& rs, const Weight& lam) {
    const Weight lr = lam + rs.rho();
    const Rational top = dot(lr, lr);
    std::vector<Rational> root_heights;
    for (const auto& a : rs.positive_roots())
        root_heights.push_back(height(rs, a));

    FormalCharacter ch;
    ch.terms[lam] = 1;
    std::vector<Weight> level{lam};
    while (!level.empty()) {
        std::set<Weight> candidates;
        for (const auto& mu : level)
            for (const auto& a : rs.simple_roots())
                candidates.insert(mu - a);
        std::vector<Weight> next;
        for (const auto& mu : candidates) {
            if (ch.terms.count(mu))
                continue;
            const Rational below = height(rs, lam - mu);
            Rational num = 0;
            for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
                const Weight& alpha = rs.positive_roots()[a];
                Weight up = mu + alpha;
                for (Rational h = below - root_heights[a]; h >= Rational(0); h -= root_heights[a], up += alpha) {
                    const std::int64_t m = ch.multiplicity(up);
                    if (m != 0)
                        num += Rational(m) * dot(up, alpha);
                }
            }
            const Weight mr = mu + rs.rho();
            const Rational den = top - dot(mr, mr);
            if (num.is_zero())
                continue;
            if (den.is_zero())
                throw OracleMismatch("freudenthal: vanishing denominator at " + mu.str());
            const Rational m = Rational(2) * num / den;
            if (!m.is_integer() || m.sign() < 0)
                throw OracleMismatch("freudenthal: non-integral multiplicity " + m.str() + " at " + mu.str());
            if (!m.is_zero()) {
                ch.terms[mu] = m.to_int64();
                next.push_back(mu);
            }
        }
        level = std::move(next);
    }
    return ch;
}

} // namespace

FormalCharacter freudenthal_multiplicities(const RootSystem& rs, const Weight& lam) {
    if (!is_dominant(rs, lam))
        throw std::invalid_argument("freudenthal_multiplicities: " + lam.str() + " is not dominant");
    CharacterCache::Key key{static_cast<int>(rs.type().family()), rs.type().rank(), lam};
    if (const auto* hit = character_cache().find(key))
        return *hit;
    return character_cache().insert(std::move(key), freudenthal_uncached(rs, lam));
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lam) {
    if (!is_dominant(rs, lam))
        throw std::invalid_argument("weyl_dimension: " + lam.str() + " is not dominant");
    const Weight lr = lam + rs.rho();
    Rational d = 1;
    for (const auto& a : rs.positive_roots())
        d *= dot(lr, a) / dot(rs.rho(), a);
    return d.to_int64();
}

namespace {

std::string tag(const char* what, const LieType& type, int r) {
    return std::string(what) + "(" + std::string(1, family_letter(type.family())) + "," +
           std::to_string(type.rank()) + "," + std::to_string(r) + ")";
}

} // namespace

DecompositionResult decompose_tensor_character(const LieType& type, int r) {
    if (r < 1)
        throw std::invalid_argument("decompose_tensor_character: r must be at least 1");
    const RootSystem rs(type);
    FormalCharacter rest = tensor_power_character(type, r);
    DecompositionResult out{type, r, tensor_dominant_pi(type, r), {}, {}, false};
    while (!rest.terms.empty()) {
        // Canonical order visits weights descending; the first dominant weight
        // not below another remaining dominant weight is maximal.
        std::vector<Weight> dominant;
        for (const auto& [w, c] : rest.terms) {
            if (c < 0)
                throw OracleMismatch("decompose: negative multiplicity at " + w.str());
            if (is_dominant(rs, w))
                dominant.push_back(w);
        }
        if (dominant.empty())
            throw OracleMismatch("decompose: residual character has no dominant weight");
        const Weight* top = nullptr;
        for (const auto& mu : dominant) {
            bool maximal = true;
            for (const auto& nu : dominant)
                if (!(nu == mu) && dominance_leq(rs, mu, nu)) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                top = &mu;
                break;
            }
        }
        const Weight mu = *top;
        const std::int64_t c = rest.multiplicity(mu);
        out.multiplicities.emplace(mu, c);
        rest.add_scaled(freudenthal_multiplicities(rs, mu), -c);
        for (const auto& [w, m] : rest.terms)
            if (m < 0)
                throw OracleMismatch("decompose: subtracting L" + mu.str() + " leaves negative multiplicity at " +
                                     w.str());
    }
    std::vector<Weight> support;
    for (const auto& [w, c] : out.multiplicities)
        support.push_back(w);
    out.pi0 = WeightSet(std::move(support), tag("pi0_oracle", type, r));
    out.equal = out.pi0 == out.pi;
    return out;
}

DecompositionResult compare_pi0_pi(const LieType& type, int r) {
    DecompositionResult oracle = decompose_tensor_character(type, r);
    WeightSet rules = pi0_weyl_rules(type, r);
    if (!(rules == oracle.pi0)) {
        const auto extra = rules.minus(oracle.pi0, "");
        const auto missing = oracle.pi0.minus(rules, "");
        std::string msg = "compare_pi0_pi " + type.str() + " r=" + std::to_string(r) + ": rules and oracle disagree";
        for (const auto& w : extra)
            msg += " +" + w.str();
        for (const auto& w : missing)
            msg += " -" + w.str();
        throw OracleMismatch(msg);
    }
    oracle.pi0 = std::move(rules);
    oracle.equal = oracle.pi0 == oracle.pi;
    return oracle;
}

SchurDimensions schur_dimensions(const LieType& type, int r) {
    const RootSystem rs(type);
    auto sum_sq = [&rs](const WeightSet& ws) {
        std::int64_t total = 0;
        for (const auto& w : ws) {
            const std::int64_t d = weyl_dimension(rs, w);
            total += d * d;
        }
        return total;
    };
    return {sum_sq(tensor_dominant_pi(type, r)), sum_sq(pi0_weyl_rules(type, r))};
}

std::vector<ClassificationRow> classify_type_B(int n_max, int r_max) {
    if (n_max < 1 || r_max < 1)
        throw std::invalid_argument("classify_type_B: bounds must be at least 1");
    std::vector<ClassificationRow> rows;
    for (int n = 1; n <= n_max; ++n)
        for (int r = 1; r <= r_max; ++r) {
            const LieType type(Family::B, n);
            const auto res = compare_pi0_pi(type, r);
            rows.push_back({n, r, res.equal, res.pi.size(), res.pi0.size(), schur_dimensions(type, r)});
        }
    return rows;
}

} // namespace schurkit
