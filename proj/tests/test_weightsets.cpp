#include "schurkit/weightsets.hpp"

#include <doctest.h>

#include <cstdlib>
#include <set>

using namespace schurkit;

namespace {

std::vector<LieType> small_types(int max_rank = 3) {
    std::vector<LieType> out;
    for (Family f : {Family::B, Family::C, Family::D})
        for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n)
            out.emplace_back(f, n);
    return out;
}

// Every vector in [-r, r]^n, filtered.
template <class Pred>
std::set<Weight> box_filter(int n, int r, Pred keep) {
    std::set<Weight> out;
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), -r);
    while (true) {
        if (keep(v))
            out.insert(Weight::from_ints(v));
        std::size_t k = 0;
        while (k < v.size() && v[k] == r)
            v[k++] = -r;
        if (k == v.size())
            break;
        ++v[k];
    }
    return out;
}

std::int64_t abs_sum(const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto x : v)
        s += std::llabs(x);
    return s;
}

std::set<Weight> as_set(const WeightSet& ws) { return {ws.begin(), ws.end()}; }

// Pi from the r-fold sums of the weights of E.
std::set<Weight> sums_of_natural_weights(const LieType& t, int r) {
    const RootSystem rs(t);
    std::vector<Weight> natural;
    for (int i = 0; i < t.rank(); ++i) {
        natural.push_back(Weight::unit(rs.rank(), static_cast<std::size_t>(i)));
        natural.push_back(-Weight::unit(rs.rank(), static_cast<std::size_t>(i)));
    }
    if (t.family() == Family::B)
        natural.push_back(Weight::zero(rs.rank()));
    std::set<Weight> cur{Weight::zero(rs.rank())};
    for (int k = 0; k < r; ++k) {
        std::set<Weight> next;
        for (const auto& a : cur)
            for (const auto& b : natural)
                next.insert(a + b);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

TEST_SUITE("weightsets") {

TEST_CASE("signed compositions") {
    const auto s22 = signed_compositions(2, 2);
    CHECK(s22.size() == 8);
    CHECK(s22.contains(Weight{1, -1}));
    CHECK(signed_compositions(1, 0).elements() == std::vector<Weight>{Weight{0}});
    CHECK(as_set(signed_compositions(2, 1)) == std::set<Weight>{Weight{1, 0}, Weight{-1, 0}, Weight{0, 1}, Weight{0, -1}});
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 4; ++r)
            CHECK(as_set(signed_compositions(n, r)) ==
                  box_filter(n, r, [&](const auto& v) { return abs_sum(v) == r; }));
}

TEST_CASE("canonical order is descending without duplicates") {
    const auto ws = signed_compositions(3, 3);
    for (std::size_t k = 1; k < ws.size(); ++k)
        CHECK(ws.elements()[k] < ws.elements()[k - 1]);
    const WeightSet dup({Weight{0, 1}, Weight{1, 0}, Weight{0, 1}}, "x");
    CHECK(dup.elements() == std::vector<Weight>{Weight{1, 0}, Weight{0, 1}});
}

TEST_CASE("partitions") {
    CHECK(partitions_lambda_plus(2, 2).elements() == std::vector<Weight>{Weight{2, 0}, Weight{1, 1}});
    CHECK(as_set(partitions_lambda_pm(2, 2)) == std::set<Weight>{Weight{2, 0}, Weight{1, 1}, Weight{1, -1}});
    CHECK(partitions_lambda_plus(3, 0).elements() == std::vector<Weight>{Weight::zero(3)});
    CHECK(partitions_lambda_minus(2, 2).contains(Weight{1, -1}));
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 5; ++r)
            CHECK(as_set(partitions_lambda_plus(n, r)) == box_filter(n, r, [&](const auto& v) {
                      for (std::size_t k = 1; k < v.size(); ++k)
                          if (v[k] > v[k - 1])
                              return false;
                      return v.back() >= 0 && abs_sum(v) == r;
                  }));
}

TEST_CASE("tensor weights") {
    CHECK(tensor_weights_Pi(LieType(Family::C, 2), 2).size() == 9);
    CHECK(tensor_weights_Pi(LieType(Family::B, 2), 1).size() == 5);
    CHECK(tensor_weights_Pi(LieType(Family::D, 2), 1).size() == 4);
    for (const auto& t : small_types())
        for (int r = 1; r <= 4; ++r) {
            const auto pi_all = tensor_weights_Pi(t, r);
            CHECK(as_set(pi_all) == sums_of_natural_weights(t, r));
            for (const auto& w : pi_all) {
                CHECK(w.is_integral());
                const auto s = abs_sum(w.to_ints());
                CHECK(s <= r);
                if (t.family() != Family::B)
                    CHECK((r - s) % 2 == 0);
            }
        }
}

TEST_CASE("dominant tensor weights") {
    CHECK(tensor_dominant_pi(LieType(Family::B, 2), 2).elements() ==
          std::vector<Weight>{Weight{2, 0}, Weight{1, 1}, Weight{1, 0}, Weight{0, 0}});
    CHECK(tensor_dominant_pi(LieType(Family::C, 2), 2).elements() ==
          std::vector<Weight>{Weight{2, 0}, Weight{1, 1}, Weight{0, 0}});
    CHECK(as_set(tensor_dominant_pi(LieType(Family::D, 2), 2)) ==
          std::set<Weight>{Weight{2, 0}, Weight{1, 1}, Weight{1, -1}, Weight{0, 0}});
}

TEST_CASE("Pi is the Weyl orbit of pi and pi its dominant part") {
    for (const auto& t : small_types())
        for (int r = 1; r <= 4; ++r) {
            const RootSystem rs(t);
            const auto big = tensor_weights_Pi(t, r);
            const auto dom = tensor_dominant_pi(t, r);
            std::set<Weight> orbit;
            for (const auto& l : dom)
                for (const auto& w : weyl_orbit(rs, l))
                    orbit.insert(w);
            CHECK(orbit == as_set(big));
            std::set<Weight> dominant_part;
            for (const auto& w : big)
                if (is_dominant(rs, w))
                    dominant_part.insert(w);
            CHECK(dominant_part == as_set(dom));
        }
}

TEST_CASE("saturation") {
    const RootSystem c2(LieType(Family::C, 2));
    CHECK(is_saturated(RootSystem(LieType(Family::B, 2)), tensor_dominant_pi(LieType(Family::B, 2), 2)));
    CHECK_FALSE(is_saturated(c2, WeightSet({Weight{1, 1}}, "x")));
    CHECK(is_saturated(c2, WeightSet({Weight{0, 0}}, "x")));
    CHECK_THROWS_AS(is_saturated(c2, WeightSet({Weight{0, 1}}, "x")), std::invalid_argument);
    for (const auto& t : small_types())
        for (int r = 1; r <= 4; ++r) {
            const RootSystem rs(t);
            const auto dom = tensor_dominant_pi(t, r);
            CHECK(is_saturated(rs, dom));
            // Removing the first (dominance-maximal) element keeps saturation.
            const auto rest = dom.minus(WeightSet({dom.elements().front()}, "max"), "rest");
            CHECK(is_saturated(rs, rest));
        }
}

TEST_CASE("set operations") {
    const WeightSet a({Weight{1}, Weight{0}}, "a");
    const WeightSet b({Weight{0}, Weight{-1}}, "b");
    CHECK(a.united(b, "u").size() == 3);
    CHECK(a.minus(b, "m").elements() == std::vector<Weight>{Weight{1}});
    CHECK(a.minus(b, "m").label() == "m");
}

}
