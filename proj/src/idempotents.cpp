#include "schurkit/idempotents.hpp"

#include <stdexcept>

namespace schurkit {

Polynomial AnnihilatorPolynomial::polynomial() const {
    std::vector<Rational> rs;
    for (int c : roots)
        rs.emplace_back(c);
    return Polynomial::from_roots(rs);
}

std::string AnnihilatorPolynomial::label() const {
    return std::string(kind == AnnihilatorKind::P1 ? "P1" : "P2") + "[r=" + std::to_string(r) + "]";
}

AnnihilatorPolynomial annihilator(AnnihilatorKind kind, int r) {
    if (r < 0)
        throw std::invalid_argument("annihilator: r must be nonnegative");
    AnnihilatorPolynomial p{kind, r, {}};
    const int step = kind == AnnihilatorKind::P1 ? 1 : 2;
    for (int c = -r; c <= r; c += step)
        p.roots.push_back(c);
    return p;
}

Polynomial deleted_factor_poly(int r, int k) {
    if (k < -r || k > r)
        throw std::out_of_range("deleted_factor_poly: k=" + std::to_string(k) + " outside [-r, r]");
    std::vector<Rational> roots;
    for (int c = -r; c <= r; ++c)
        if (c != k)
            roots.emplace_back(c);
    return Polynomial::from_roots(roots);
}

ExactMatrix evaluate_factored(const std::vector<int>& roots, const ExactMatrix& x) {
    const auto id = ExactMatrix::identity(x.rows());
    ExactMatrix acc = id;
    for (int c : roots)
        acc = acc * (x - Rational(c) * id);
    return acc;
}

const ExactMatrix* IdempotentFamily::find(const Weight& lambda) const {
    auto it = table.find(lambda);
    return it == table.end() ? nullptr : &it->second;
}

IdempotentFamily build_idempotents(const Representation& rep) {
    const int r = rep.carrier.r;
    const auto& h = rep.gens.h;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i].is_diagonal())
            throw std::domain_error("build_idempotents: H_" + std::to_string(i + 1) + " is not diagonal");
        for (const auto& d : h[i].diagonal_entries())
            if (!d.is_integer() || d < Rational(-r) || d > Rational(r))
                throw std::domain_error("build_idempotents: eigenvalue " + d.str() + " of H_" + std::to_string(i + 1) +
                                        " escapes [-" + std::to_string(r) + ", " + std::to_string(r) + "]");
    }

    IdempotentFamily fam{rep.gens.type, r, {}};
    const std::size_t dim = rep.dim();
    for (const auto& lambda : tensor_weights_Pi(rep.gens.type, r)) {
        ExactMatrix one = ExactMatrix::identity(dim);
        for (std::size_t i = 0; i < h.size(); ++i) {
            const auto li = lambda[i].to_int64();
            std::vector<int> roots;
            Rational norm = 1;
            for (int c = -r; c <= r; ++c)
                if (c != li) {
                    roots.push_back(c);
                    norm *= Rational(li - c);
                }
            one = one * evaluate_factored(roots, h[i]);
            one *= norm.inverse();
        }
        std::vector<Rational> indicator(dim);
        for (std::size_t b = 0; b < dim; ++b)
            if (rep.weight_index[b] == lambda)
                indicator[b] = 1;
        if (!(one == ExactMatrix::diagonal(indicator)))
            throw std::logic_error("build_idempotents: interpolation formula disagrees with the weight projector at " +
                                   lambda.str());
        fam.table.emplace(lambda, std::move(one));
    }
    return fam;
}

ExactMatrix reconstruct_H(const IdempotentFamily& fam, std::size_t i) {
    if (fam.table.empty())
        throw std::invalid_argument("reconstruct_H: empty family");
    const std::size_t dim = fam.table.begin()->second.rows();
    ExactMatrix out(dim, dim);
    for (const auto& [lambda, one] : fam.table)
        if (!lambda[i].is_zero())
            out += lambda[i] * one;
    return out;
}

LadderReport ladder_check(const IdempotentFamily& fam, const Representation& rep) {
    const RootSystem rs(fam.type);
    const std::size_t dim = rep.dim();
    const ExactMatrix zero(dim, dim);
    LadderReport report;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        const Weight& alpha = rs.simple_root(i);
        for (const auto& [lambda, one] : fam.table) {
            for (char g : {'e', 'f'}) {
                const ExactMatrix& x = g == 'e' ? rep.gens.e[i] : rep.gens.f[i];
                const Weight target = g == 'e' ? lambda + alpha : lambda - alpha;
                const ExactMatrix* shifted = fam.find(target);
                const ExactMatrix lhs = x * one;
                const ExactMatrix rhs = shifted ? (*shifted) * x : zero;
                ++report.checked;
                if (!(lhs == rhs))
                    report.violations.push_back({g, i, lambda});
            }
        }
    }
    return report;
}

} // namespace schurkit
