#include "schurkit/replinalg.hpp"

#include <algorithm>

namespace schurkit {

CarrierTooLarge::CarrierTooLarge(std::size_t dim, std::size_t cap)
    : std::length_error("carrier dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap)),
      dim_(dim),
      cap_(cap) {}

std::vector<ExactMatrix> GeneratorSet::all() const {
    std::vector<ExactMatrix> out;
    out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), f.begin(), f.end());
    out.insert(out.end(), h.begin(), h.end());
    return out;
}

std::size_t Carrier::dimension(int natural_dim) const {
    std::size_t total = 0;
    for (int s : powers) {
        std::size_t d = 1;
        for (int k = 0; k < s; ++k)
            d *= static_cast<std::size_t>(natural_dim);
        total += d;
    }
    return total;
}

std::string Carrier::describe() const {
    std::string s;
    for (int p : powers) {
        if (!s.empty())
            s += " + ";
        s += "E^" + std::to_string(p);
    }
    return s;
}

ExactMatrix form_matrix(const LieType& type) {
    const auto n = static_cast<std::size_t>(type.rank());
    const auto m = static_cast<std::size_t>(type.natural_dim());
    ExactMatrix form(m, m);
    const Rational lower = type.family() == Family::C ? Rational(-1) : Rational(1);
    for (std::size_t i = 0; i < n; ++i) {
        form.set(i, n + i, 1);
        form.set(n + i, i, lower);
    }
    if (type.family() == Family::B)
        form.set(2 * n, 2 * n, 1);
    return form;
}

bool preserves_form(const ExactMatrix& x, const ExactMatrix& form) {
    return (x.transpose() * form + form * x).is_zero();
}

std::vector<Weight> natural_weights(const LieType& type) {
    const auto n = static_cast<std::size_t>(type.rank());
    std::vector<Weight> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Weight::unit(n, i));
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(-Weight::unit(n, i));
    if (type.family() == Family::B)
        out.push_back(Weight::zero(n));
    return out;
}

GeneratorSet natural_rep(const LieType& type) {
    const auto n = static_cast<std::size_t>(type.rank());
    const auto m = static_cast<std::size_t>(type.natural_dim());
    GeneratorSet g{type, {}, {}, {}, m};
    // 0-based: basis vector k stands for v_{k+1}.
    auto unit = [m](std::size_t i, std::size_t j, Rational c = 1) {
        ExactMatrix x(m, m);
        x.set(i, j, c);
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        g.h.push_back(unit(i, i) - unit(n + i, n + i));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ExactMatrix e = unit(i, i + 1) - unit(n + i + 1, n + i);
        g.f.push_back(e.transpose());
        g.e.push_back(std::move(e));
    }
    const std::size_t last = n - 1;
    switch (type.family()) {
    case Family::B:
        g.e.push_back(unit(last, 2 * n) - unit(2 * n, n + last));
        g.f.push_back(Rational(2) * (unit(2 * n, last) - unit(n + last, 2 * n)));
        break;
    case Family::C:
        g.e.push_back(unit(last, n + last));
        g.f.push_back(unit(n + last, last));
        break;
    case Family::D:
        g.e.push_back(unit(last - 1, n + last) - unit(last, n + last - 1));
        g.f.push_back(g.e.back().transpose());
        break;
    }
    return g;
}

ExactMatrix tensor_lift(const ExactMatrix& x, int r) {
    if (r < 1)
        throw std::invalid_argument("tensor_lift: r must be at least 1");
    if (!x.is_square())
        throw std::invalid_argument("tensor_lift: matrix is not square");
    const std::size_t m = x.rows();
    std::size_t dim = 1;
    for (int k = 0; k < r; ++k)
        dim *= m;
    std::vector<std::size_t> place(static_cast<std::size_t>(r));
    for (std::size_t k = 0, p = 1; k < place.size(); ++k, p *= m)
        place[place.size() - 1 - k] = p;

    ExactMatrix out(dim, dim);
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (std::size_t row = 0; row < dim; ++row) {
        entries.clear();
        for (std::size_t k = 0; k < place.size(); ++k) {
            const std::size_t digit = (row / place[k]) % m;
            for (const auto& [c, v] : x.row(digit)) {
                const std::size_t col = row + (c - digit) * place[k];
                entries.emplace_back(static_cast<std::uint32_t>(col), v);
            }
        }
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < entries.size();) {
            Rational sum = entries[i].second;
            std::size_t j = i + 1;
            for (; j < entries.size() && entries[j].first == entries[i].first; ++j)
                sum += entries[j].second;
            if (!sum.is_zero())
                out.set(row, entries[i].first, sum);
            i = j;
        }
    }
    return out;
}

namespace {

std::vector<Weight> tensor_weight_index(const std::vector<Weight>& base, int s, std::size_t n) {
    std::vector<Weight> out{Weight::zero(n)};
    for (int k = 0; k < s; ++k) {
        std::vector<Weight> next;
        next.reserve(out.size() * base.size());
        for (const auto& w : out)
            for (const auto& b : base)
                next.push_back(w + b);
        out = std::move(next);
    }
    return out;
}

Representation build_carrier(const LieType& type, Carrier carrier, std::size_t max_dim) {
    const std::size_t dim = carrier.dimension(type.natural_dim());
    if (dim > max_dim)
        throw CarrierTooLarge(dim, max_dim);
    const GeneratorSet nat = natural_rep(type);
    const auto n = static_cast<std::size_t>(type.rank());
    const auto base = natural_weights(type);

    auto lift_all = [&](const std::vector<ExactMatrix>& gens) {
        std::vector<ExactMatrix> out;
        for (const auto& g : gens) {
            std::vector<ExactMatrix> blocks;
            for (int s : carrier.powers)
                blocks.push_back(s == 0 ? ExactMatrix(1, 1) : tensor_lift(g, s));
            out.push_back(direct_sum(blocks));
        }
        return out;
    };

    std::vector<Weight> weight_index;
    for (int s : carrier.powers) {
        auto w = tensor_weight_index(base, s, n);
        weight_index.insert(weight_index.end(), w.begin(), w.end());
    }
    GeneratorSet gens{type, lift_all(nat.e), lift_all(nat.f), lift_all(nat.h), dim};
    return Representation{std::move(gens), std::move(carrier), std::move(weight_index)};
}

} // namespace

Representation tensor_power_rep(const LieType& type, int r, std::size_t max_dim) {
    if (r < 1)
        throw std::invalid_argument("tensor_power_rep: r must be at least 1");
    return build_carrier(type, Carrier{r, {r}}, max_dim);
}

Representation tower_rep(const LieType& type, int r, std::size_t max_dim) {
    if (r < 1)
        throw std::invalid_argument("tower_rep: r must be at least 1");
    Carrier c{r, {}};
    const int step = type.family() == Family::B ? 1 : 2;
    for (int s = r; s >= 0; s -= step)
        c.powers.push_back(s);
    return build_carrier(type, std::move(c), max_dim);
}

namespace {

using DenseVector = std::vector<Rational>;

bool all_zero(const DenseVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

DenseVector apply_polynomial(const Polynomial& p, const ExactMatrix& x, const DenseVector& v) {
    DenseVector acc(v.size());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = x.apply(acc);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero())
                acc[i] += *it * v[i];
    }
    return acc;
}

// Minimal polynomial of x relative to the vector w (the monic generator of
// the annihilator of w), by incremental elimination on the Krylov sequence.
Polynomial local_minimal_polynomial(const ExactMatrix& x, const DenseVector& w) {
    struct Row {
        DenseVector vec;
        std::size_t pivot;
        Polynomial combo; // vec = combo(x) w
    };
    std::vector<Row> rows;
    DenseVector v = w;
    for (unsigned k = 0;; ++k) {
        DenseVector cur = v;
        Polynomial combo = Polynomial::monomial(k);
        for (const auto& row : rows) {
            if (cur[row.pivot].is_zero())
                continue;
            const Rational c = cur[row.pivot];
            for (std::size_t i = 0; i < cur.size(); ++i)
                if (!row.vec[i].is_zero())
                    cur[i] -= c * row.vec[i];
            combo -= Polynomial::constant(c) * row.combo;
        }
        if (all_zero(cur))
            return combo;
        std::size_t pivot = 0;
        while (cur[pivot].is_zero())
            ++pivot;
        const Rational inv = cur[pivot].inverse();
        for (auto& e : cur)
            e *= inv;
        rows.push_back({std::move(cur), pivot, Polynomial::constant(inv) * combo});
        v = x.apply(v);
    }
}

} // namespace

Polynomial minimal_polynomial(const ExactMatrix& x) {
    if (!x.is_square())
        throw std::invalid_argument("minimal_polynomial: matrix is not square");
    // mu_x = lcm over basis vectors of the local minimal polynomials; the
    // product update below realizes that lcm incrementally.
    Polynomial p = Polynomial::constant(1);
    for (std::size_t j = 0; j < x.rows(); ++j) {
        DenseVector unit(x.rows());
        unit[j] = 1;
        DenseVector w = apply_polynomial(p, x, unit);
        if (all_zero(w))
            continue;
        p = p * local_minimal_polynomial(x, w);
    }
    return p.monic();
}

AlgebraClosure algebra_closure(const std::vector<ExactMatrix>& mats, bool want_basis) {
    if (mats.empty())
        throw std::invalid_argument("algebra_closure: no generators");
    const std::size_t n = mats.front().rows();
    for (const auto& m : mats)
        if (!m.is_square() || m.rows() != n)
            throw std::invalid_argument("algebra_closure: generators must be square of equal size");

    EchelonBasis span(n * n);
    std::vector<ExactMatrix> spanning;
    auto offer = [&](ExactMatrix m) {
        if (span.insert(m.vectorize()))
            spanning.push_back(std::move(m));
    };
    offer(ExactMatrix::identity(n));
    for (const auto& g : mats)
        offer(g);
    // Every word in the generators is a generator times a shorter word, so
    // closing the span under left multiplication reaches the whole algebra.
    for (std::size_t next = 0; next < spanning.size(); ++next)
        for (const auto& g : mats)
            offer(g * spanning[next]);

    AlgebraClosure out;
    out.dimension = span.size();
    if (want_basis) {
        for (const auto& row : span.reduced_rows()) {
            ExactMatrix b(n, n);
            for (const auto& [idx, v] : row)
                b.set(idx / n, idx % n, v);
            out.basis.push_back(std::move(b));
        }
    }
    return out;
}

} // namespace schurkit
