#include "schurkit/presentation.hpp"

#include "schurkit/decomposition.hpp"

#include <algorithm>

namespace schurkit {

bool RelationReport::ok() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationStatus& s) { return s.holds; });
}

std::vector<std::string> RelationReport::failed_labels() const {
    std::vector<std::string> out;
    for (const auto& s : relations)
        if (!s.holds)
            out.push_back(s.label);
    return out;
}

const RelationStatus* RelationReport::find(const std::string& label) const {
    for (const auto& s : relations)
        if (s.label == label)
            return &s;
    return nullptr;
}

std::string generator_convention(const LieType& type) {
    std::string s = "H_i = E(i,i) - E(n+i,n+i); e_i = E(i,i+1) - E(n+i+1,n+i), f_i = e_i^T (i<n); ";
    switch (type.family()) {
    case Family::B:
        s += "e_n = E(n,2n+1) - E(2n+1,2n), f_n = 2(E(2n+1,n) - E(2n,2n+1))";
        break;
    case Family::C:
        s += "e_n = E(n,2n), f_n = E(2n,n)";
        break;
    case Family::D:
        s += "e_n = E(n-1,2n) - E(n,2n-1), f_n = e_n^T";
        break;
    }
    return s;
}

namespace {

// Accumulates instances of one relation.
class Tally {
public:
    explicit Tally(std::string label) { status_.label = std::move(label); }

    void check(const std::string& instance, const ExactMatrix& residual) {
        ++status_.instances;
        if (residual.is_zero())
            return;
        ++status_.failures;
        if (!status_.witness) {
            const auto e = *residual.max_magnitude_entry();
            status_.witness = RelationWitness{instance, e.row, e.col, e.value};
        }
    }

    RelationStatus done() {
        status_.holds = status_.failures == 0;
        return std::move(status_);
    }

private:
    RelationStatus status_;
};

std::string ij(std::size_t i, std::size_t j) {
    return "i=" + std::to_string(i + 1) + ",j=" + std::to_string(j + 1);
}

std::int64_t binomial(int n, int k) {
    std::int64_t b = 1;
    for (int t = 1; t <= k; ++t)
        b = b * (n - k + t) / t;
    return b;
}

// sum_s (-1)^s C(N,s) x_i^{N-s} x_j x_i^s with N = 1 - a_ij.
ExactMatrix serre_element(const std::vector<ExactMatrix>& x, std::size_t i, std::size_t j, int a_ij) {
    const int big = 1 - a_ij;
    const std::size_t dim = x[i].rows();
    std::vector<ExactMatrix> pow{ExactMatrix::identity(dim)};
    for (int k = 1; k <= big; ++k)
        pow.push_back(pow.back() * x[i]);
    ExactMatrix acc(dim, dim);
    for (int s = 0; s <= big; ++s) {
        const Rational c = Rational((s % 2 ? -1 : 1) * binomial(big, s));
        acc += c * (pow[static_cast<std::size_t>(big - s)] * x[j] * pow[static_cast<std::size_t>(s)]);
    }
    return acc;
}

RelationStatus serre_relation(const std::string& label, const RootSystem& rs, const std::vector<ExactMatrix>& x) {
    Tally t(label);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (i != j)
                t.check(ij(i, j), serre_element(x, i, j, rs.cartan()[i][j]));
    return t.done();
}

void fill_metadata(RelationReport& rep, const RootSystem& rs, const Representation& carrier) {
    rep.carrier = carrier.carrier.describe();
    rep.reduced_word = longest_element(rs).word_one_based();
    rep.generator_convention = generator_convention(rs.type());
    if (rs.type().family() == Family::D && rs.type().rank() % 2 == 1)
        rep.notes.push_back("w0 is not -1 here: it negates e_1..e_{n-1} and fixes e_n");
}

void require_match(const LieType& type, int r, const Representation& rep, const char* who) {
    if (!(rep.gens.type == type) || rep.carrier.r != r)
        throw std::invalid_argument(std::string(who) + ": representation was built for " + rep.gens.type.str() +
                                    " r=" + std::to_string(rep.carrier.r));
}

std::string sign_label(const std::vector<int>& signs) {
    std::string s;
    for (std::size_t i = 0; i < signs.size(); ++i)
        s += (signs[i] > 0 ? "+H" : "-H") + std::to_string(i + 1);
    return s;
}

// All 2^n sign vectors, + before -, first coordinate varying slowest.
std::vector<std::vector<int>> sign_vectors(std::size_t n) {
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> s(n);
        for (std::size_t i = 0; i < n; ++i)
            s[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

RelationReport verify_serre_presentation(const LieType& type, int r, const Representation& rep) {
    require_match(type, r, rep, "verify_serre_presentation");
    const RootSystem rs(type);
    const auto& g = rep.gens;
    const std::size_t n = rs.rank();
    const std::size_t dim = rep.dim();
    const char fam = family_letter(type.family());
    auto label = [fam](int k) { return std::string(1, fam) + std::to_string(k); };

    RelationReport out{fam, type, r, {}, {}, {}, {}, {}};
    fill_metadata(out, rs, rep);

    {
        Tally t(label(1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                t.check(ij(i, j), commutator(g.h[i], g.h[j]));
        out.relations.push_back(t.done());
    }
    {
        Tally t(label(2));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExactMatrix res = commutator(g.e[i], g.f[j]);
                if (i == j) {
                    if (i + 1 < n)
                        res -= g.h[i] - g.h[i + 1];
                    else if (type.family() == Family::B)
                        res -= Rational(2) * g.h[i];
                    else if (type.family() == Family::C)
                        res -= g.h[i];
                    else
                        res -= g.h[i - 1] + g.h[i];
                }
                t.check(ij(i, j), res);
            }
        out.relations.push_back(t.done());
    }
    {
        Tally t(label(3));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational c = dot(Weight::unit(n, i), rs.simple_root(j));
                t.check(ij(i, j) + ",e", commutator(g.h[i], g.e[j]) - c * g.e[j]);
                t.check(ij(i, j) + ",f", commutator(g.h[i], g.f[j]) + c * g.f[j]);
            }
        out.relations.push_back(t.done());
    }
    out.relations.push_back(serre_relation(label(4), rs, g.e));
    out.relations.push_back(serre_relation(label(5), rs, g.f));
    {
        Tally t(label(6));
        const auto p1 = annihilator(AnnihilatorKind::P1, r);
        for (std::size_t i = 0; i < n; ++i)
            t.check("i=" + std::to_string(i + 1), evaluate_factored(p1.roots, g.h[i]));
        out.relations.push_back(t.done());
    }
    {
        Tally t(label(7));
        const auto p = annihilator(type.family() == Family::B ? AnnihilatorKind::P1 : AnnihilatorKind::P2, r);
        for (const auto& signs : sign_vectors(n)) {
            ExactMatrix j(dim, dim);
            for (std::size_t i = 0; i < n; ++i)
                j += Rational(signs[i]) * g.h[i];
            t.check("J=" + sign_label(signs), evaluate_factored(p.roots, j));
        }
        out.relations.push_back(t.done());
    }
    return out;
}

RelationReport verify_idempotent_presentation(const LieType& type, int r, const Representation& rep,
                                              const IdempotentFamily& fam) {
    require_match(type, r, rep, "verify_idempotent_presentation");
    const RootSystem rs(type);
    const auto& g = rep.gens;
    const std::size_t n = rs.rank();
    const std::size_t dim = rep.dim();
    const ExactMatrix zero(dim, dim);
    const WeightSet pi_all = tensor_weights_Pi(type, r);

    RelationReport out{'R', type, r, {}, {}, {}, {}, {}};
    fill_metadata(out, rs, rep);

    {
        Tally t("R1");
        for (const auto& [lam, a] : fam.table)
            for (const auto& [mu, b] : fam.table) {
                ExactMatrix res = a * b;
                if (lam == mu)
                    res -= a;
                t.check("lambda=" + lam.str() + ",mu=" + mu.str(), res);
            }
        ExactMatrix sum(dim, dim);
        for (const auto& [lam, a] : fam.table)
            sum += a;
        t.check("completeness", sum - ExactMatrix::identity(dim));
        // A family indexed by the wrong weight set is itself an R1 failure;
        // the residual is the projector of the first offending weight.
        for (const auto& lam : pi_all)
            if (!fam.find(lam)) {
                ExactMatrix proj(dim, dim);
                for (std::size_t b = 0; b < dim; ++b)
                    if (rep.weight_index[b] == lam)
                        proj.set(b, b, 1);
                t.check("missing 1_" + lam.str(), proj.is_zero() ? ExactMatrix::identity(dim) : proj);
            }
        for (const auto& [lam, a] : fam.table)
            if (!pi_all.contains(lam))
                t.check("extra 1_" + lam.str(), a.is_zero() ? ExactMatrix::identity(dim) : a);
        out.relations.push_back(t.done());
    }
    {
        Tally t("R2");
        for (std::size_t i = 0; i < n; ++i) {
            const Weight cor = coroot(rs, i);
            for (std::size_t j = 0; j < n; ++j) {
                ExactMatrix res = commutator(g.e[i], g.f[j]);
                if (i == j)
                    for (const auto& [lam, one] : fam.table) {
                        const Rational c = dot(cor, lam);
                        if (!c.is_zero())
                            res -= c * one;
                    }
                t.check(ij(i, j), res);
            }
        }
        out.relations.push_back(t.done());
    }

    // sign +1: lambda + alpha_i, sign -1: lambda - alpha_i.
    auto ladder = [&](const std::string& label, const std::vector<ExactMatrix>& x, int sign, bool left) {
        Tally t(label);
        for (std::size_t i = 0; i < n; ++i) {
            const Weight shift = Rational(sign) * rs.simple_root(i);
            for (const auto& lam : pi_all) {
                const ExactMatrix* one = fam.find(lam);
                const Weight target = lam + shift;
                const bool inside = pi_all.contains(target);
                const ExactMatrix* other = inside ? fam.find(target) : nullptr;
                if (!one || (inside && !other))
                    continue;
                const std::string inst = "i=" + std::to_string(i + 1) + ",lambda=" + lam.str();
                // left: x 1_lam = 1_target x; right: 1_lam x = x 1_target.
                const ExactMatrix lhs = left ? x[i] * *one : *one * x[i];
                const ExactMatrix rhs = inside ? (left ? *other * x[i] : x[i] * *other) : zero;
                t.check(inst, lhs - rhs);
            }
        }
        return t.done();
    };
    out.relations.push_back(ladder("R3", g.e, +1, true));
    out.relations.push_back(ladder("R4", g.f, -1, true));
    out.relations.push_back(ladder("R5", g.e, -1, false));
    out.relations.push_back(ladder("R6", g.f, +1, false));
    out.relations.push_back(serre_relation("R7", rs, g.e));
    out.relations.push_back(serre_relation("R8", rs, g.f));
    return out;
}

IdempotentAudit audit_idempotents(const Representation& rep, const IdempotentFamily& fam) {
    const std::size_t dim = rep.dim();
    IdempotentAudit out;
    ExactMatrix sum(dim, dim);
    for (const auto& [lam, a] : fam.table) {
        sum += a;
        for (const auto& [mu, b] : fam.table)
            if (!(a * b == (lam == mu ? a : ExactMatrix(dim, dim))))
                out.orthogonal = false;
    }
    out.complete = sum == ExactMatrix::identity(dim);
    for (std::size_t i = 0; i < rep.gens.h.size(); ++i)
        if (!(reconstruct_H(fam, i) == rep.gens.h[i]))
            out.h_reconstructed = false;
    out.ladder = ladder_check(fam, rep);

    FormalCharacter carrier_char;
    for (int s : rep.carrier.powers)
        carrier_char.add_scaled(tensor_power_character(rep.gens.type, s), 1);
    for (const auto& [lam, a] : fam.table) {
        const std::size_t rk = rank(a);
        const std::int64_t mult = carrier_char.multiplicity(lam);
        out.ranks.emplace(lam, std::make_pair(rk, mult));
        if (static_cast<std::int64_t>(rk) != mult)
            out.ranks_match = false;
    }
    return out;
}

bool p1hi_needed(const LieType& type) {
    return type.family() == Family::B && type.rank() >= 2;
}

ZeroLocus zero_locus(const LieType& type, int r, bool include_P1Hi) {
    if (r < 1)
        throw std::invalid_argument("zero_locus: r must be at least 1");
    const auto n = static_cast<std::size_t>(type.rank());
    const bool is_b = type.family() == Family::B;
    const auto pj = annihilator(is_b ? AnnihilatorKind::P1 : AnnihilatorKind::P2, r);
    const auto p1 = annihilator(AnnihilatorKind::P1, r);

    ZeroLocus out{type, r, include_P1Hi, {}, {}, false, std::nullopt};
    out.equations.push_back(is_b ? "P1(J)" : "P2(J)");
    if (include_P1Hi)
        out.equations.push_back("P1(H_i)");

    auto vanishes = [](const std::vector<int>& roots, const Rational& x) {
        return std::any_of(roots.begin(), roots.end(), [&x](int c) { return x == Rational(c); });
    };
    const auto signs = sign_vectors(n);
    std::vector<Weight> found;
    std::vector<std::int64_t> twice(n, -2 * static_cast<std::int64_t>(r));
    for (;;) {
        Weight v = Weight::zero(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = Rational(twice[i], 2);
        bool ok = true;
        for (const auto& s : signs) {
            Rational j = 0;
            for (std::size_t i = 0; i < n; ++i)
                j += Rational(s[i]) * v[i];
            if (!vanishes(pj.roots, j)) {
                ok = false;
                break;
            }
        }
        if (ok && include_P1Hi)
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = vanishes(p1.roots, v[i]);
        if (ok)
            found.push_back(std::move(v));

        std::size_t k = n;
        while (k > 0 && twice[k - 1] == 2 * r)
            twice[--k] = -2 * static_cast<std::int64_t>(r);
        if (k == 0)
            break;
        ++twice[k - 1];
    }
    out.locus = WeightSet(std::move(found), std::string("V(") + family_letter(type.family()) + "," +
                                               std::to_string(n) + "," + std::to_string(r) + ")");
    out.equals_Pi = out.locus == tensor_weights_Pi(type, r);
    for (const auto& w : out.locus)
        if (!w.is_integral()) {
            out.half_integer_witness = w;
            break;
        }
    return out;
}

QuotientWitness quotient_witness(const LieType& type, int r, std::size_t max_dim) {
    const RootSystem rs(type);
    const auto tower = tower_rep(type, r, max_dim);
    const auto tensor = tensor_power_rep(type, r, max_dim);
    QuotientWitness out{type, r, 0, 0, {}, 0, false};
    out.dim_tower = algebra_closure(tower.gens.all(), false).dimension;
    out.dim_tensor = algebra_closure(tensor.gens.all(), false).dimension;
    const auto cmp = compare_pi0_pi(type, r);
    out.pi_minus_pi0 = cmp.pi.minus(cmp.pi0, "pi\\pi0");
    for (const auto& w : out.pi_minus_pi0) {
        const std::int64_t d = weyl_dimension(rs, w);
        out.predicted_difference += d * d;
    }
    out.consistent = out.dim_tower >= out.dim_tensor &&
                     static_cast<std::int64_t>(out.dim_tower - out.dim_tensor) == out.predicted_difference;
    return out;
}

bool same_operator_algebra(const Representation& rep, const IdempotentFamily& fam) {
    std::vector<ExactMatrix> a = rep.gens.all();
    std::vector<ExactMatrix> b = rep.gens.e;
    b.insert(b.end(), rep.gens.f.begin(), rep.gens.f.end());
    for (const auto& [lam, one] : fam.table)
        b.push_back(one);
    const auto x = algebra_closure(a);
    const auto y = algebra_closure(b);
    return x.dimension == y.dimension && x.basis == y.basis;
}

} // namespace schurkit
