#include "schurkit/decomposition.hpp"
#include "schurkit/replinalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace schurkit;

namespace {

std::vector<LieType> small_types(int max_rank = 3) {
    std::vector<LieType> out;
    for (Family f : {Family::B, Family::C, Family::D})
        for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n)
            out.emplace_back(f, n);
    return out;
}

ExactMatrix natural_target(const GeneratorSet& g, std::size_t i) {
    const auto n = g.h.size();
    if (i + 1 < n)
        return g.h[i] - g.h[i + 1];
    switch (g.type.family()) {
    case Family::B: return Rational(2) * g.h[i];
    case Family::C: return g.h[i];
    case Family::D: return g.h[i - 1] + g.h[i];
    }
    return {};
}

std::vector<ExactMatrix> tower_generators(const Representation& rep) { return rep.gens.all(); }

// Distinct eigenvalues of a diagonal matrix.
std::vector<Rational> spectrum(const ExactMatrix& d) {
    auto v = d.diagonal_entries();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

TEST_SUITE("replinalg") {

TEST_CASE("natural module") {
    const auto c2 = natural_rep(LieType(Family::C, 2));
    CHECK(c2.h[0] == ExactMatrix::diagonal({1, 0, -1, 0}));
    const auto b2 = natural_rep(LieType(Family::B, 2));
    CHECK(commutator(b2.e[1], b2.f[1]) == Rational(2) * b2.h[1]);
    for (const auto& t : small_types(4)) {
        const auto g = natural_rep(t);
        const auto form = form_matrix(t);
        CHECK(g.space_dim == static_cast<std::size_t>(t.natural_dim()));
        for (const auto& x : g.all())
            CHECK(preserves_form(x, form));
        for (std::size_t i = 0; i < g.h.size(); ++i) {
            CHECK(g.h[i].is_diagonal());
            CHECK(commutator(g.e[i], g.f[i]) == natural_target(g, i));
            // e_i raises weights by alpha_i.
            const RootSystem rs(t);
            for (std::size_t j = 0; j < g.h.size(); ++j)
                CHECK(commutator(g.h[j], g.e[i]) == rs.simple_root(i)[j] * g.e[i]);
        }
        const auto w = natural_weights(t);
        CHECK(w.size() == g.space_dim);
        for (std::size_t k = 0; k < w.size(); ++k)
            for (std::size_t i = 0; i < g.h.size(); ++i)
                CHECK(g.h[i].at(k, k) == w[k][i]);
    }
}

TEST_CASE("tensor lift") {
    const auto g = natural_rep(LieType(Family::C, 2));
    CHECK(tensor_lift(g.h[0], 1) == g.h[0]);
    CHECK_THROWS_AS(tensor_lift(g.h[0], 0), std::invalid_argument);
    const auto l2 = tensor_lift(g.h[0], 2);
    // tr(lift) = 2 m tr(X) with m = 4; tr(H_1) = 0 so test a shifted matrix as well.
    const auto x = g.h[0] + ExactMatrix::identity(4);
    CHECK(tensor_lift(x, 2).trace() == Rational(8) * x.trace());
    CHECK(l2.trace() == Rational(0));
    std::vector<Rational> sums;
    for (const auto& a : g.h[0].diagonal_entries())
        for (const auto& b : g.h[0].diagonal_entries())
            sums.push_back(a + b);
    auto diag = l2.diagonal_entries();
    std::sort(diag.begin(), diag.end());
    std::sort(sums.begin(), sums.end());
    CHECK(diag == sums);
}

TEST_CASE("lift commutes with the bracket") {
    for (const auto& t : {LieType(Family::B, 2), LieType(Family::C, 2), LieType(Family::D, 3)}) {
        const auto g = natural_rep(t);
        const auto all = g.all();
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); b += 2)
                CHECK(tensor_lift(commutator(all[a], all[b]), 2) ==
                      commutator(tensor_lift(all[a], 2), tensor_lift(all[b], 2)));
    }
}

TEST_CASE("tower carriers") {
    CHECK(tower_rep(LieType(Family::B, 2), 2).dim() == 31);
    CHECK(tower_rep(LieType(Family::C, 1), 2).dim() == 5);
    CHECK(tower_rep(LieType(Family::C, 2), 3).dim() == 68);
    CHECK(tower_rep(LieType(Family::C, 2), 3).carrier.powers == std::vector<int>{3, 1});
    CHECK(tower_rep(LieType(Family::B, 1), 2).carrier.powers == std::vector<int>{2, 1, 0});
    CHECK(tensor_power_rep(LieType(Family::B, 2), 2).dim() == 25);
    CHECK_THROWS_AS(tower_rep(LieType(Family::B, 3), 5), CarrierTooLarge);
    CHECK_THROWS_AS(tensor_power_rep(LieType(Family::C, 2), 3, 10), CarrierTooLarge);
}

TEST_CASE("tensor weights are sums of natural weights") {
    for (const auto& t : {LieType(Family::B, 1), LieType(Family::C, 2), LieType(Family::D, 2)}) {
        const auto rep = tensor_power_rep(t, 3);
        const auto nat = natural_weights(t);
        std::map<Weight, int> expected;
        for (const auto& a : nat)
            for (const auto& b : nat)
                for (const auto& c : nat)
                    ++expected[a + b + c];
        std::map<Weight, int> got;
        for (const auto& w : rep.weight_index)
            ++got[w];
        CHECK(got == expected);
        for (std::size_t k = 0; k < rep.dim(); ++k)
            for (std::size_t i = 0; i < rep.gens.h.size(); ++i)
                CHECK(rep.gens.h[i].at(k, k) == rep.weight_index[k][i]);
    }
}

TEST_CASE("minimal polynomials") {
    CHECK(minimal_polynomial(ExactMatrix::identity(3)) == Polynomial::from_roots({1}));
    const auto rep = tensor_power_rep(LieType(Family::C, 2), 2);
    CHECK(minimal_polynomial(rep.gens.h[0]) == Polynomial::from_roots({-2, -1, 0, 1, 2}));
    const auto j = rep.gens.h[0] + rep.gens.h[1];
    const auto p2 = Polynomial::from_roots({-2, 0, 2});
    CHECK(p2.divmod(minimal_polynomial(j)).second.is_zero());
    // For a diagonalizable matrix the minimal polynomial has the distinct eigenvalues as roots.
    for (const auto& t : small_types(2)) {
        const auto tower = tower_rep(t, 2);
        for (const auto& h : tower.gens.h)
            CHECK(minimal_polynomial(h) == Polynomial::from_roots(spectrum(h)));
    }
    // Nilpotent e_i on E: degree equals the nilpotency index.
    const auto g = natural_rep(LieType(Family::B, 2));
    const auto mp = minimal_polynomial(g.e[1]);
    CHECK(mp == Polynomial::monomial(3));
    CHECK_FALSE(matrix_power(g.e[1], 2).is_zero());
    CHECK(matrix_power(g.e[1], 3).is_zero());
}

TEST_CASE("closure dimensions") {
    CHECK(algebra_closure({ExactMatrix::identity(4)}).dimension == 1);
    CHECK_THROWS_AS(algebra_closure({ExactMatrix::identity(2), ExactMatrix::identity(3)}), std::invalid_argument);
    struct Case {
        LieType type;
        int r;
        std::size_t tower;
        std::size_t tensor;
    };
    for (const auto& c : {Case{LieType(Family::C, 1), 2, 10, 10}, Case{LieType(Family::C, 2), 2, 126, 126},
                          Case{LieType(Family::D, 2), 2, 100, 100}, Case{LieType(Family::B, 1), 1, 10, 9}}) {
        CHECK(algebra_closure(tower_generators(tower_rep(c.type, c.r)), false).dimension == c.tower);
        CHECK(algebra_closure(tensor_power_rep(c.type, c.r).gens.all(), false).dimension == c.tensor);
        const auto dims = schur_dimensions(c.type, c.r);
        CHECK(dims.s_pi == c.tower);
        CHECK(dims.schur == c.tensor);
    }
}

TEST_CASE("closure does not depend on generator order") {
    const auto rep = tower_rep(LieType(Family::C, 1), 3);
    auto gens = rep.gens.all();
    const auto a = algebra_closure(gens);
    std::reverse(gens.begin(), gens.end());
    const auto b = algebra_closure(gens);
    CHECK(a.dimension == b.dimension);
    CHECK(a.basis == b.basis);
    CHECK(a.dimension == schur_dimensions(LieType(Family::C, 1), 3).s_pi);
}

}
