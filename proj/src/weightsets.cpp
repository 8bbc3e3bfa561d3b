#include "schurkit/weightsets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schurkit {

WeightSet::WeightSet(std::vector<Weight> elements, std::string label)
    : elements_(std::move(elements)), label_(std::move(label)) {
    std::sort(elements_.begin(), elements_.end(), WeightDescending{});
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool WeightSet::contains(const Weight& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w, WeightDescending{});
}

WeightSet WeightSet::united(const WeightSet& other, std::string label) const {
    std::vector<Weight> all = elements_;
    all.insert(all.end(), other.elements_.begin(), other.elements_.end());
    return WeightSet(std::move(all), std::move(label));
}

WeightSet WeightSet::minus(const WeightSet& other, std::string label) const {
    std::vector<Weight> out;
    for (const auto& w : elements_)
        if (!other.contains(w))
            out.push_back(w);
    return WeightSet(std::move(out), std::move(label));
}

namespace {

void check_args(int n, int r) {
    if (n < 1)
        throw std::invalid_argument("number of parts must be at least 1");
    if (r < 0)
        throw std::invalid_argument("degree must be nonnegative");
}

std::string tag(const char* name, int n, int r) {
    return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

std::string tag(const char* name, const LieType& t, int r) {
    return std::string(name) + "(" + family_letter(t.family()) + "," + std::to_string(t.rank()) + "," +
           std::to_string(r) + ")";
}

// Nonnegative compositions of `remaining` into the tail of `parts`, each part
// bounded by `cap` (pass remaining for compositions, the previous part for
// partitions).
void compose(std::vector<std::int64_t>& parts, std::size_t pos, std::int64_t remaining, bool decreasing,
             const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (pos + 1 == parts.size()) {
        if (decreasing && pos > 0 && remaining > parts[pos - 1])
            return;
        parts[pos] = remaining;
        emit(parts);
        return;
    }
    std::int64_t cap = remaining;
    if (decreasing && pos > 0)
        cap = std::min(cap, parts[pos - 1]);
    for (std::int64_t v = cap; v >= 0; --v) {
        parts[pos] = v;
        compose(parts, pos + 1, remaining - v, decreasing, emit);
    }
}

void check_r(int r) {
    if (r < 1)
        throw std::invalid_argument("tensor degree r must be at least 1");
}

} // namespace

WeightSet signed_compositions(int n, int r) {
    check_args(n, r);
    std::vector<Weight> out;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    compose(parts, 0, r, false, [&](const std::vector<std::int64_t>& p) {
        // Every sign pattern on the nonzero parts.
        std::vector<std::size_t> nonzero;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0)
                nonzero.push_back(i);
        for (std::size_t mask = 0; mask < (std::size_t{1} << nonzero.size()); ++mask) {
            auto signed_parts = p;
            for (std::size_t b = 0; b < nonzero.size(); ++b)
                if (mask & (std::size_t{1} << b))
                    signed_parts[nonzero[b]] = -signed_parts[nonzero[b]];
            out.push_back(Weight::from_ints(signed_parts));
        }
    });
    return WeightSet(std::move(out), tag("LambdaBar", n, r));
}

WeightSet partitions_lambda_plus(int n, int r) {
    check_args(n, r);
    std::vector<Weight> out;
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    compose(parts, 0, r, true, [&](const std::vector<std::int64_t>& p) { out.push_back(Weight::from_ints(p)); });
    return WeightSet(std::move(out), tag("LambdaPlus", n, r));
}

WeightSet partitions_lambda_minus(int n, int r) {
    std::vector<Weight> out;
    for (Weight w : partitions_lambda_plus(n, r)) {
        w[w.size() - 1] = -w[w.size() - 1];
        out.push_back(std::move(w));
    }
    return WeightSet(std::move(out), tag("LambdaMinus", n, r));
}

WeightSet partitions_lambda_pm(int n, int r) {
    return partitions_lambda_plus(n, r).united(partitions_lambda_minus(n, r), tag("LambdaPM", n, r));
}

WeightSet tensor_weights_Pi(const LieType& type, int r) {
    check_r(r);
    const int n = type.rank();
    const int step = type.family() == Family::B ? 1 : 2;
    WeightSet out({}, tag("Pi", type, r));
    for (int s = r; s >= 0; s -= step)
        out = out.united(signed_compositions(n, s), out.label());
    return out;
}

WeightSet tensor_dominant_pi(const LieType& type, int r) {
    check_r(r);
    const int n = type.rank();
    const int step = type.family() == Family::B ? 1 : 2;
    WeightSet out({}, tag("pi", type, r));
    for (int s = r; s >= 0; s -= step) {
        const WeightSet part = type.family() == Family::D ? partitions_lambda_pm(n, s) : partitions_lambda_plus(n, s);
        out = out.united(part, out.label());
    }
    return out;
}

bool is_saturated(const RootSystem& rs, const WeightSet& ws) {
    const std::size_t n = rs.rank();
    for (const auto& lam : ws) {
        if (!is_dominant(rs, lam))
            throw std::invalid_argument("is_saturated: non-dominant element " + lam.str());
        // Any positive root has nonnegative first coordinate, so a dominant
        // mu <= lam satisfies |mu_i| <= mu_1 <= lam_1.  mu - lam lies in the
        // root lattice, hence shares the fractional part of lam.
        const Rational bound = lam[0];
        const Rational offset = lam[0].is_integer() ? Rational(0) : Rational(1, 2);
        const std::int64_t k = (bound - offset).to_int64();
        std::vector<std::int64_t> idx(n, -k - (offset.is_zero() ? 0 : 1));
        const std::int64_t lo = idx[0];
        for (;;) {
            Weight mu = Weight::zero(n);
            for (std::size_t i = 0; i < n; ++i)
                mu[i] = Rational(idx[i]) + offset;
            if (is_dominant(rs, mu) && dominance_leq(rs, mu, lam) && !ws.contains(mu))
                return false;
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] > k) {
                idx[pos] = lo;
                ++pos;
            }
            if (pos == n)
                break;
        }
    }
    return true;
}

} // namespace schurkit
