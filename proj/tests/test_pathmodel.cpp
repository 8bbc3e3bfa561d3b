#include "schurkit/pathmodel.hpp"

#include <doctest.h>

#include <set>

using namespace schurkit;

namespace {

// Every path reachable by one root operator from the crystal, both directions.
void check_partial_inverse(const Crystal& c) {
    const auto& rs = c.root_system;
    for (const auto& p : c.elements)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (auto q = f_op(rs, i, p)) {
                CHECK(q->endpoint() == p.endpoint() - rs.simple_root(i));
                auto back = e_op(rs, i, *q);
                REQUIRE(back.has_value());
                CHECK(*back == p);
            }
            if (auto q = e_op(rs, i, p)) {
                CHECK(q->endpoint() == p.endpoint() + rs.simple_root(i));
                auto back = f_op(rs, i, *q);
                REQUIRE(back.has_value());
                CHECK(*back == p);
            }
        }
}

} // namespace

TEST_SUITE("pathmodel") {

TEST_CASE("straight paths") {
    const RootSystem c2(LieType(Family::C, 2));
    const auto p = straight_path(c2, Weight{1, 0});
    CHECK(p.endpoint() == Weight{1, 0});
    CHECK(p.at(Rational(1, 2)) == Weight{Rational(1, 2), 0});
    CHECK_THROWS_AS(straight_path(c2, Weight{0, 1}), std::invalid_argument);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK_FALSE(e_op(c2, i, p).has_value());
    const auto q = f_op(c2, 0, p);
    REQUIRE(q.has_value());
    CHECK(q->endpoint() == Weight{0, 1});
    CHECK_FALSE(f_op(c2, 1, p).has_value());
}

TEST_CASE("a bent path") {
    // B2, lambda = (1,1): f_2 reflects the first half of the path.
    const RootSystem b2(LieType(Family::B, 2));
    const auto q = f_op(b2, 1, straight_path(b2, Weight{1, 1}));
    REQUIRE(q.has_value());
    CHECK(q->endpoint() == Weight{1, 0});
    CHECK(q->times == std::vector<Rational>{0, Rational(1, 2), 1});
    CHECK(q->at(Rational(1, 2)) == Weight{Rational(1, 2), Rational(-1, 2)});
}

TEST_CASE("orbit of the natural highest weight in C2") {
    const RootSystem c2(LieType(Family::C, 2));
    const auto c = generate_crystal(c2, Weight{1, 0});
    CHECK(c.size() == 4);
    std::set<Weight> ends;
    for (const auto& p : c.elements)
        ends.insert(p.endpoint());
    CHECK(ends == std::set<Weight>{Weight{1, 0}, Weight{0, 1}, Weight{0, -1}, Weight{-1, 0}});
    CHECK(c.edges.size() == 3);
}

TEST_CASE("trivial crystal") {
    const RootSystem b2(LieType(Family::B, 2));
    const auto c = generate_crystal(b2, Weight{0, 0});
    CHECK(c.size() == 1);
    const auto word = longest_element(b2).word;
    CHECK(string_tuples(c, word) == std::vector<StringTuple>{StringTuple(word.size(), 0)});
}

TEST_CASE("crystal sizes and characters") {
    struct Case {
        LieType type;
        Weight lam;
    };
    for (const auto& [t, lam] : {Case{LieType(Family::B, 2), Weight{1, 0}}, Case{LieType(Family::B, 2), Weight{1, 1}},
                                 Case{LieType(Family::B, 2), Weight{Rational(1, 2), Rational(1, 2)}},
                                 Case{LieType(Family::C, 3), Weight{1, 1, 0}}, Case{LieType(Family::D, 3), Weight{1, 1, -1}},
                                 Case{LieType(Family::D, 4), Weight{1, 1, 0, 0}}, Case{LieType(Family::B, 3), Weight{2, 1, 0}}}) {
        CAPTURE(lam.str());
        const RootSystem rs(t);
        const auto c = generate_crystal(rs, lam);
        CHECK(static_cast<std::int64_t>(c.size()) == weyl_dimension(rs, lam));
        CHECK(c.endpoint_character() == freudenthal_multiplicities(rs, lam));
        check_partial_inverse(c);
        const auto word = longest_element(rs).word;
        const auto tuples = string_tuples(c, word);
        CHECK(tuples.size() == c.size());
        CHECK(tuples.front() == StringTuple(word.size(), 0));
    }
}

TEST_CASE("crystal cap") {
    const RootSystem b2(LieType(Family::B, 2));
    CHECK_THROWS_AS(generate_crystal(b2, Weight{2, 0}, 5), CrystalTooLarge);
}

TEST_CASE("dual weights") {
    // -w0 lambda is dominant and its crystal has the same size.
    for (const auto& t : {LieType(Family::D, 3), LieType(Family::B, 2), LieType(Family::C, 3)}) {
        const RootSystem rs(t);
        const auto w0 = longest_element(rs);
        for (const auto& lam : tensor_dominant_pi(t, 2)) {
            const auto dual = -w0.apply(lam);
            CHECK(is_dominant(rs, dual));
            CHECK(generate_crystal(rs, dual).size() == generate_crystal(rs, lam).size());
        }
    }
    const RootSystem d3(LieType(Family::D, 3));
    CHECK(-longest_element(d3).apply(Weight{1, 1, 1}) == Weight{1, 1, -1});
}

TEST_CASE("census") {
    const auto c2 = basis_census(LieType(Family::C, 2), 2);
    CHECK(c2.total == 126);
    CHECK(c2.ok);
    const auto b2 = basis_census(LieType(Family::B, 2), 2);
    CHECK(b2.total == 322);
    CHECK(b2.expected == 322);
    for (const auto& e : b2.entries) {
        CHECK(e.ok);
        CHECK(e.s_lambda == e.s_dual_opp);
        if (e.lambda.is_zero())
            CHECK(e.weyl_dim == 1);
    }
}

}
