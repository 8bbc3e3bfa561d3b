#include "schurkit/pathmodel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schurkit {

Weight Path::at(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1))
        throw std::out_of_range("Path::at: time " + t.str() + " outside [0, 1]");
    auto it = std::lower_bound(times.begin(), times.end(), t);
    const auto k = static_cast<std::size_t>(it - times.begin());
    if (times[k] == t)
        return points[k];
    const Rational s = (t - times[k - 1]) / (times[k] - times[k - 1]);
    return points[k - 1] + s * (points[k] - points[k - 1]);
}

void Path::canonicalize() {
    std::vector<Rational> ts{times.front()};
    std::vector<Weight> ps{points.front()};
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (ts.size() >= 2) {
            const std::size_t last = ts.size() - 1;
            const Weight v1 = (ts[last] - ts[last - 1]).inverse() * (ps[last] - ps[last - 1]);
            const Weight v2 = (times[k] - ts[last]).inverse() * (points[k] - ps[last]);
            if (v1 == v2) {
                ts[last] = times[k];
                ps[last] = points[k];
                continue;
            }
        }
        ts.push_back(times[k]);
        ps.push_back(points[k]);
    }
    times = std::move(ts);
    points = std::move(ps);
}

Path straight_path(const RootSystem& rs, const Weight& lam) {
    if (!is_dominant(rs, lam))
        throw std::invalid_argument("straight_path: " + lam.str() + " is not dominant");
    return Path{{Rational(0), Rational(1)}, {Weight::zero(lam.size()), lam}};
}

namespace {

// The path with extra breakpoints wherever the height h = (x(t), alpha^vee)
// crosses a level in `levels`, so that running minima of h become linear on
// every segment.  Returns the refined path and h at its breakpoints.
std::pair<Path, std::vector<Rational>> refine(const Path& p, const Weight& cor, const std::set<Rational>& levels) {
    Path out{{p.times.front()}, {p.points.front()}};
    std::vector<Rational> h{dot(p.points.front(), cor)};
    for (std::size_t k = 1; k < p.times.size(); ++k) {
        const Rational h0 = h.back();
        const Rational h1 = dot(p.points[k], cor);
        if (h0 != h1) {
            const Rational lo = std::min(h0, h1);
            const Rational hi = std::max(h0, h1);
            std::vector<Rational> cross;
            for (auto it = levels.upper_bound(lo); it != levels.end() && *it < hi; ++it)
                cross.push_back(*it);
            if (h1 < h0)
                std::reverse(cross.begin(), cross.end());
            for (const auto& c : cross) {
                const Rational s = (c - h0) / (h1 - h0);
                out.times.push_back(p.times[k - 1] + s * (p.times[k] - p.times[k - 1]));
                out.points.push_back(p.points[k - 1] + s * (p.points[k] - p.points[k - 1]));
                h.push_back(c);
            }
        }
        out.times.push_back(p.times[k]);
        out.points.push_back(p.points[k]);
        h.push_back(h1);
    }
    return {std::move(out), std::move(h)};
}

std::pair<Path, std::vector<Rational>> prepare(const RootSystem& rs, std::size_t i, const Path& p) {
    const Weight cor = coroot(rs, i);
    std::set<Rational> levels;
    for (const auto& x : p.points)
        levels.insert(dot(x, cor));
    const Rational q = *levels.begin();
    levels.insert(q + Rational(1));
    return refine(p, cor, levels);
}

} // namespace

std::optional<Path> f_op(const RootSystem& rs, std::size_t i, const Path& p) {
    auto [path, h] = prepare(rs, i, p);
    const Rational q = *std::min_element(h.begin(), h.end());
    if (h.back() - q < Rational(1))
        return std::nullopt;
    std::size_t start = h.size() - 1;
    while (h[start] != q)
        --start;
    std::size_t stop = start;
    while (h[stop] != q + Rational(1))
        ++stop;
    const Weight& alpha = rs.simple_root(i);
    // On [start, stop] subtract (min_{[t, stop]} h - q) alpha; after stop, alpha.
    Rational future = h[stop];
    for (std::size_t k = stop + 1; k-- > start;) {
        future = std::min(future, h[k]);
        path.points[k] -= (future - q) * alpha;
    }
    for (std::size_t k = stop + 1; k < path.points.size(); ++k)
        path.points[k] -= alpha;
    path.canonicalize();
    return path;
}

std::optional<Path> e_op(const RootSystem& rs, std::size_t i, const Path& p) {
    auto [path, h] = prepare(rs, i, p);
    const Rational q = *std::min_element(h.begin(), h.end());
    if (q > Rational(-1))
        return std::nullopt;
    std::size_t stop = 0;
    while (h[stop] != q)
        ++stop;
    std::size_t start = stop;
    while (h[start] != q + Rational(1))
        --start;
    const Weight& alpha = rs.simple_root(i);
    // On [start, stop] add (q + 1 - min_{[start, t]} h) alpha; after stop, alpha.
    Rational past = h[start];
    for (std::size_t k = start; k <= stop; ++k) {
        past = std::min(past, h[k]);
        path.points[k] += (q + Rational(1) - past) * alpha;
    }
    for (std::size_t k = stop + 1; k < path.points.size(); ++k)
        path.points[k] += alpha;
    path.canonicalize();
    return path;
}

FormalCharacter Crystal::endpoint_character() const {
    FormalCharacter ch;
    for (const auto& p : elements)
        ch.terms[p.endpoint()] += 1;
    return ch;
}

Crystal generate_crystal(const RootSystem& rs, const Weight& lam, std::size_t cap) {
    Crystal c{rs, lam, {straight_path(rs, lam)}, {}};
    std::map<Path, std::size_t> seen{{c.elements.front(), 0}};
    for (std::size_t next = 0; next < c.elements.size(); ++next)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            auto image = f_op(rs, i, c.elements[next]);
            if (!image)
                continue;
            auto [it, fresh] = seen.emplace(*image, c.elements.size());
            if (fresh) {
                if (c.elements.size() >= cap)
                    throw CrystalTooLarge("generate_crystal: more than " + std::to_string(cap) + " elements for " +
                                          lam.str());
                c.elements.push_back(std::move(*image));
            }
            c.edges.push_back({next, i, it->second});
        }
    return c;
}

std::vector<StringTuple> string_tuples(const Crystal& crystal, const std::vector<std::size_t>& word) {
    const auto& rs = crystal.root_system;
    const Path& top = crystal.elements.front();
    std::vector<StringTuple> out;
    out.reserve(crystal.size());
    for (const auto& b : crystal.elements) {
        Path cur = b;
        StringTuple t;
        for (std::size_t i : word) {
            int count = 0;
            while (auto up = e_op(rs, i, cur)) {
                cur = std::move(*up);
                ++count;
            }
            t.push_back(count);
        }
        if (!(cur == top))
            throw std::logic_error("string_tuples: e-string of " + b.endpoint().str() + " ends at " +
                                   cur.endpoint().str() + " instead of the highest path");
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("string_tuples: two crystal elements share a string");
    return out;
}

CensusReport basis_census(const LieType& type, int r, std::size_t cap) {
    const RootSystem rs(type);
    const auto w0 = longest_element(rs);
    CensusReport out{type, r, w0.word, {}, 0, 0, true};
    for (const auto& lam : tensor_dominant_pi(type, r)) {
        const Weight dual = -w0.apply(lam);
        const auto s = string_tuples(generate_crystal(rs, lam, cap), w0.word);
        auto s_dual = string_tuples(generate_crystal(rs, dual, cap), w0.word);
        std::set<StringTuple> opp;
        for (auto& t : s_dual) {
            std::reverse(t.begin(), t.end());
            opp.insert(std::move(t));
        }
        const std::int64_t d = weyl_dimension(rs, lam);
        CensusEntry e{lam, dual, s.size(), opp.size(), d, false};
        e.ok = static_cast<std::int64_t>(e.s_lambda * e.s_dual_opp) == d * d;
        out.total += static_cast<std::int64_t>(e.s_lambda * e.s_dual_opp);
        out.expected += d * d;
        out.ok = out.ok && e.ok;
        out.entries.push_back(std::move(e));
    }
    out.ok = out.ok && out.total == out.expected;
    return out;
}

} // namespace schurkit
