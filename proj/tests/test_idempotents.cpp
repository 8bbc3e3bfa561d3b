#include "schurkit/decomposition.hpp"
#include "schurkit/idempotents.hpp"

#include <doctest.h>

using namespace schurkit;

namespace {

std::vector<LieType> small_types(int max_rank = 3) {
    std::vector<LieType> out;
    for (Family f : {Family::B, Family::C, Family::D})
        for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n)
            out.emplace_back(f, n);
    return out;
}

// Projector onto the lambda weight space, read off the weight index.
ExactMatrix indicator(const Representation& rep, const Weight& lam) {
    std::vector<Rational> d(rep.dim());
    for (std::size_t k = 0; k < rep.dim(); ++k)
        d[k] = rep.weight_index[k] == lam ? 1 : 0;
    return ExactMatrix::diagonal(d);
}

std::vector<ExactMatrix> sign_sums(const GeneratorSet& g) {
    const auto n = g.h.size();
    std::vector<ExactMatrix> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        ExactMatrix j = ExactMatrix::zero(g.space_dim, g.space_dim);
        for (std::size_t i = 0; i < n; ++i)
            j += (mask >> i & 1 ? Rational(-1) : Rational(1)) * g.h[i];
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace

TEST_SUITE("idempotents") {

TEST_CASE("annihilator polynomials") {
    CHECK(annihilator(AnnihilatorKind::P1, 2).roots == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(annihilator(AnnihilatorKind::P2, 3).roots == std::vector<int>{-3, -1, 1, 3});
    for (int r = 0; r <= 5; ++r) {
        CHECK(annihilator(AnnihilatorKind::P1, r).degree() == 2 * r + 1);
        CHECK(annihilator(AnnihilatorKind::P2, r).degree() == r + 1);
    }
}

TEST_CASE("deleted factor polynomials") {
    CHECK(deleted_factor_poly(1, 0) == Polynomial::from_roots({-1, 1}));
    CHECK(deleted_factor_poly(1, 1) == Polynomial::from_roots({-1, 0}));
    CHECK_THROWS_AS(deleted_factor_poly(1, 2), std::out_of_range);
    for (int r = 1; r <= 4; ++r) {
        const auto p1 = annihilator(AnnihilatorKind::P1, r).polynomial();
        for (int k = -r; k <= r; ++k) {
            const auto d = deleted_factor_poly(r, k);
            CHECK(d.degree() == 2 * r);
            CHECK(d * Polynomial::from_roots({k}) == p1);
            CHECK(d.evaluate(k) != Rational(0));
        }
    }
}

TEST_CASE("factored evaluation matches expanded evaluation") {
    const auto rep = tensor_power_rep(LieType(Family::B, 1), 2);
    const std::vector<int> roots{-2, 0, 1};
    std::vector<Rational> q(roots.begin(), roots.end());
    CHECK(evaluate_factored(roots, rep.gens.e[0] + rep.gens.h[0]) ==
          Polynomial::from_roots(q).evaluate(rep.gens.e[0] + rep.gens.h[0]));
}

TEST_CASE("idempotent family on small carriers") {
    const auto rep = tensor_power_rep(LieType(Family::C, 2), 2);
    const auto fam = build_idempotents(rep);
    CHECK(fam.table.size() == 9);
    CHECK(rank(*fam.find(Weight{2, 0})) == 1);
    CHECK(fam.find(Weight{3, 0}) == nullptr);
    const auto ladder = ladder_check(fam, rep);
    CHECK(ladder.ok());
    CHECK(ladder.checked > 0);
}

TEST_CASE("family identities on every tower") {
    for (const auto& t : small_types())
        for (int r = 1; r <= 3; ++r) {
            const auto rep = tower_rep(t, r);
            if (rep.dim() > 400)
                continue;
            CAPTURE(t.str());
            CAPTURE(r);
            const auto fam = build_idempotents(rep);
            const auto id = ExactMatrix::identity(rep.dim());
            ExactMatrix sum = ExactMatrix::zero(rep.dim(), rep.dim());
            for (const auto& [lam, p] : fam.table) {
                CHECK(p == indicator(rep, lam));
                CHECK(p * p == p);
                CHECK(p * rep.gens.h[0] == lam[0] * p);
                sum += p;
            }
            CHECK(sum == id);
            for (std::size_t i = 0; i < rep.gens.h.size(); ++i)
                CHECK(reconstruct_H(fam, i) == rep.gens.h[i]);
            CHECK(ladder_check(fam, rep).ok());
            // P1(H_i) = 0 and P1 or P2 of every sign sum J vanishes.
            const auto p1 = annihilator(AnnihilatorKind::P1, r);
            for (const auto& h : rep.gens.h)
                CHECK(evaluate_factored(p1.roots, h).is_zero());
            const auto pj = annihilator(t.family() == Family::B ? AnnihilatorKind::P1 : AnnihilatorKind::P2, r);
            for (const auto& j : sign_sums(rep.gens))
                CHECK(evaluate_factored(pj.roots, j).is_zero());
        }
}

TEST_CASE("commutation identity through the idempotents") {
    for (const auto& t : {LieType(Family::B, 2), LieType(Family::C, 2), LieType(Family::D, 3)}) {
        const auto rep = tower_rep(t, 2);
        const auto fam = build_idempotents(rep);
        const RootSystem rs(t);
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                ExactMatrix rhs = ExactMatrix::zero(rep.dim(), rep.dim());
                if (i == j)
                    for (const auto& [lam, p] : fam.table)
                        rhs += rs.pairing(lam, i) * p;
                CHECK(commutator(rep.gens.e[i], rep.gens.f[j]) == rhs);
            }
    }
}

TEST_CASE("ranks are weight multiplicities") {
    const auto t = LieType(Family::B, 2);
    const auto rep = tensor_power_rep(t, 2);
    const auto fam = build_idempotents(rep);
    const auto chi = tensor_power_character(t, 2);
    for (const auto& [lam, p] : fam.table)
        CHECK(static_cast<std::int64_t>(rank(p)) == chi.multiplicity(lam));
}

TEST_CASE("spectrum outside the carrier degree is rejected") {
    auto rep = tensor_power_rep(LieType(Family::C, 1), 1);
    rep.gens.h[0] = Rational(3) * rep.gens.h[0];
    CHECK_THROWS_AS(build_idempotents(rep), std::domain_error);
}

}
