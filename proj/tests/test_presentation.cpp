#include "schurkit/presentation.hpp"

#include <doctest.h>

using namespace schurkit;

namespace {

std::vector<std::string> labels(char x) {
    std::vector<std::string> out;
    for (int k = 1; k <= 7; ++k)
        out.push_back(std::string(1, x) + std::to_string(k));
    return out;
}

} // namespace

TEST_SUITE("presentation") {

TEST_CASE("serre presentations hold on towers") {
    struct Case {
        LieType type;
        int r;
    };
    for (const auto& c : {Case{LieType(Family::B, 2), 2}, Case{LieType(Family::C, 2), 3}, Case{LieType(Family::D, 3), 2},
                          Case{LieType(Family::B, 1), 3}, Case{LieType(Family::D, 2), 3}}) {
        CAPTURE(c.type.str());
        const auto rep = tower_rep(c.type, c.r);
        const auto report = verify_serre_presentation(c.type, c.r, rep);
        CHECK(report.ok());
        CHECK(report.presentation == family_letter(c.type.family()));
        std::vector<std::string> got;
        for (const auto& s : report.relations) {
            got.push_back(s.label);
            CHECK((s.instances > 0 || c.type.rank() == 1));
        }
        CHECK(got == labels(report.presentation));
        CHECK(report.reduced_word.size() == RootSystem(c.type).positive_roots().size());
    }
}

TEST_CASE("idempotent presentation holds on towers") {
    for (const auto& [t, r] : {std::pair{LieType(Family::D, 3), 2}, std::pair{LieType(Family::B, 2), 2},
                               std::pair{LieType(Family::C, 2), 3}}) {
        const auto rep = tower_rep(t, r);
        const auto fam = build_idempotents(rep);
        const auto report = verify_idempotent_presentation(t, r, rep, fam);
        CHECK(report.ok());
        CHECK(report.presentation == 'R');
        CHECK(report.relations.size() == 8);
        const auto audit = audit_idempotents(rep, fam);
        CHECK(audit.ok());
        CHECK(audit.ranks.size() == fam.table.size());
    }
}

TEST_CASE("odd type D carries a note on w0") {
    const auto t = LieType(Family::D, 3);
    const auto report = verify_serre_presentation(t, 1, tower_rep(t, 1));
    CHECK(report.notes.size() == 1);
    const auto even = LieType(Family::D, 2);
    CHECK(verify_serre_presentation(even, 1, tower_rep(even, 1)).notes.empty());
}

TEST_CASE("mismatched representation is rejected") {
    const auto rep = tower_rep(LieType(Family::C, 2), 2);
    CHECK_THROWS_AS(verify_serre_presentation(LieType(Family::B, 2), 2, rep), std::invalid_argument);
    CHECK_THROWS_AS(verify_serre_presentation(LieType(Family::C, 2), 3, rep), std::invalid_argument);
}

TEST_CASE("scaling f_n is caught by the second relation only") {
    const auto t = LieType(Family::C, 2);
    auto rep = tower_rep(t, 2);
    rep.gens.f.back() = Rational(2) * rep.gens.f.back();
    const auto report = verify_serre_presentation(t, 2, rep);
    CHECK(report.failed_labels() == std::vector<std::string>{"C2"});
    const auto* c2 = report.find("C2");
    REQUIRE(c2 != nullptr);
    CHECK(c2->failures == 1);
    REQUIRE(c2->witness.has_value());
    CHECK(c2->witness->instance == "i=2,j=2");
    CHECK(c2->witness->value != Rational(0));
}

TEST_CASE("dropping an idempotent is caught by R1 only") {
    const auto t = LieType(Family::C, 2);
    const auto rep = tower_rep(t, 2);
    auto fam = build_idempotents(rep);
    fam.table.erase(Weight{0, 0});
    const auto report = verify_idempotent_presentation(t, 2, rep, fam);
    CHECK(report.failed_labels() == std::vector<std::string>{"R1"});
    const auto audit = audit_idempotents(rep, fam);
    CHECK_FALSE(audit.complete);
    CHECK(audit.orthogonal);
}

TEST_CASE("R2 at i=j=n in type C") {
    const auto t = LieType(Family::C, 2);
    const auto rep = tower_rep(t, 2);
    auto fam = build_idempotents(rep);
    ExactMatrix rhs = ExactMatrix::zero(rep.dim(), rep.dim());
    for (const auto& [lam, p] : fam.table)
        rhs += lam[1] * p;
    CHECK((commutator(rep.gens.e[1], rep.gens.f[1]) - rhs).is_zero());
}

TEST_CASE("R7 and R8 match the serre relations") {
    const auto t = LieType(Family::B, 2);
    auto rep = tower_rep(t, 2);
    rep.gens.e[0] = rep.gens.e[0] + rep.gens.h[0];
    const auto fam = build_idempotents(rep);
    const auto serre = verify_serre_presentation(t, 2, rep);
    const auto idem = verify_idempotent_presentation(t, 2, rep, fam);
    CHECK(serre.find("B4")->holds == idem.find("R7")->holds);
    CHECK(serre.find("B5")->holds == idem.find("R8")->holds);
    CHECK_FALSE(idem.find("R7")->holds);
}

TEST_CASE("zero locus") {
    const auto c2 = LieType(Family::C, 2);
    for (bool flag : {true, false}) {
        const auto z = zero_locus(c2, 2, flag);
        CHECK(z.locus == tensor_weights_Pi(c2, 2));
        CHECK(z.equals_Pi);
    }
    const auto b2 = LieType(Family::B, 2);
    const auto with = zero_locus(b2, 2, true);
    CHECK(with.equals_Pi);
    CHECK_FALSE(with.half_integer_witness.has_value());
    const auto without = zero_locus(b2, 2, false);
    CHECK_FALSE(without.equals_Pi);
    CHECK(without.locus.size() > with.locus.size());
    CHECK(with.locus.minus(without.locus, "").empty());
    REQUIRE(without.half_integer_witness.has_value());
    CHECK(*without.half_integer_witness == Weight{Rational(3, 2), Rational(1, 2)});
    CHECK(zero_locus(LieType(Family::B, 1), 1, true).locus.elements() ==
          std::vector<Weight>{Weight{1}, Weight{0}, Weight{-1}});
    CHECK(zero_locus(LieType(Family::B, 1), 3, false).equals_Pi);
    CHECK_FALSE(p1hi_needed(LieType(Family::B, 1)));
    CHECK(p1hi_needed(LieType(Family::B, 3)));
    CHECK_FALSE(p1hi_needed(LieType(Family::D, 3)));
}

TEST_CASE("zero locus equals Pi with both equation families") {
    for (Family f : {Family::B, Family::C, Family::D})
        for (int n = f == Family::D ? 2 : 1; n <= 2; ++n)
            for (int r = 1; r <= 3; ++r) {
                const LieType t(f, n);
                const auto z = zero_locus(t, r, true);
                CHECK(z.equals_Pi);
                const auto dropped = zero_locus(t, r, false);
                CHECK(dropped.equals_Pi == !p1hi_needed(t));
            }
}

TEST_CASE("quotient witness") {
    const auto b2 = quotient_witness(LieType(Family::B, 2), 2);
    CHECK(b2.dim_tower == 322);
    CHECK(b2.dim_tensor == 297);
    CHECK(b2.predicted_difference == 25);
    CHECK(b2.consistent);
    CHECK(b2.pi_minus_pi0.elements() == std::vector<Weight>{Weight{1, 0}});
    const auto c2 = quotient_witness(LieType(Family::C, 2), 2);
    CHECK(c2.dim_tower == 126);
    CHECK(c2.dim_tensor == 126);
    CHECK(c2.consistent);
    const auto b1 = quotient_witness(LieType(Family::B, 1), 2);
    CHECK(b1.dim_tower == b1.dim_tensor);
    CHECK(b1.consistent);
}

TEST_CASE("both generating sets give one algebra") {
    for (const auto& t : {LieType(Family::C, 1), LieType(Family::B, 1), LieType(Family::C, 2)}) {
        const auto rep = tower_rep(t, 2);
        CHECK(same_operator_algebra(rep, build_idempotents(rep)));
    }
}

TEST_CASE("generator convention is described") {
    for (Family f : {Family::B, Family::C, Family::D})
        CHECK_FALSE(generator_convention(LieType(f, 2)).empty());
}

}
