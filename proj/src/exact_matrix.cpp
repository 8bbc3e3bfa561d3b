#include "schurkit/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurkit {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string("ExactMatrix ") + op + ": shape mismatch");
}

} // namespace

SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto xi = x.begin();
    auto yi = y.begin();
    while (xi != x.end() || yi != y.end()) {
        if (yi == y.end() || (xi != x.end() && xi->first < yi->first)) {
            out.push_back(*xi++);
        } else if (xi == x.end() || yi->first < xi->first) {
            out.emplace_back(yi->first, c * yi->second);
            ++yi;
        } else {
            Rational v = xi->second + c * yi->second;
            if (!v.is_zero())
                out.emplace_back(xi->first, std::move(v));
            ++xi;
            ++yi;
        }
    }
    return out;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), Rational(1));
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& entries) {
    ExactMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!entries[i].is_zero())
            m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), entries[i]);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ExactMatrix::from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j)
            if (!rows[i][j].is_zero())
                m.rows_[i].emplace_back(static_cast<std::uint32_t>(j), rows[i][j]);
    }
    return m;
}

Rational ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (j >= cols_)
        throw std::out_of_range("ExactMatrix::at: column out of range");
    const Row& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : Rational();
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    if (j >= cols_)
        throw std::out_of_range("ExactMatrix::set: column out of range");
    Row& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        if (value.is_zero())
            r.erase(it);
        else
            it->second = value;
    } else if (!value.is_zero()) {
        r.insert(it, {static_cast<std::uint32_t>(j), value});
    }
}

void ExactMatrix::add(std::size_t i, std::size_t j, const Rational& value) { set(i, j, at(i, j) + value); }

std::size_t ExactMatrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

bool ExactMatrix::is_zero() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

bool ExactMatrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& e : rows_[i])
            if (e.first != i)
                return false;
    return true;
}

std::vector<Rational> ExactMatrix::diagonal_entries() const {
    std::vector<Rational> d(std::min(rows(), cols_));
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = at(i, i);
    return d;
}

Rational ExactMatrix::trace() const {
    if (!is_square())
        throw std::invalid_argument("ExactMatrix::trace: matrix is not square");
    Rational t;
    for (std::size_t i = 0; i < rows(); ++i)
        t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i])
            t.rows_[j].emplace_back(static_cast<std::uint32_t>(i), v);
    return t;
}

std::optional<MatrixEntry> ExactMatrix::max_magnitude_entry() const {
    std::optional<MatrixEntry> best;
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i])
            if (!best || v.abs() > best->value.abs())
                best = MatrixEntry{i, j, v};
    return best;
}

SparseVector ExactMatrix::vectorize() const {
    SparseVector out;
    out.reserve(nonzeros());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, v] : rows_[i])
            out.emplace_back(static_cast<std::uint32_t>(i * cols_ + j), v);
    return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("ExactMatrix::apply: dimension mismatch");
    std::vector<Rational> out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, a] : rows_[i])
            if (!v[j].is_zero())
                out[i] += a * v[j];
    return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
    require_same_shape(*this, rhs, "+");
    for (std::size_t i = 0; i < rows(); ++i)
        if (!rhs.rows_[i].empty())
            rows_[i] = axpy(rows_[i], Rational(1), rhs.rows_[i]);
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
    require_same_shape(*this, rhs, "-");
    for (std::size_t i = 0; i < rows(); ++i)
        if (!rhs.rows_[i].empty())
            rows_[i] = axpy(rows_[i], Rational(-1), rhs.rows_[i]);
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Rational& c) {
    if (c.is_zero()) {
        for (auto& r : rows_)
            r.clear();
        return *this;
    }
    for (auto& r : rows_)
        for (auto& e : r)
            e.second *= c;
    return *this;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out = *this;
    return out *= Rational(-1);
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("ExactMatrix *: inner dimension mismatch");
    ExactMatrix out(a.rows(), b.cols());
    std::vector<Rational> acc(b.cols());
    std::vector<char> used(b.cols(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        touched.clear();
        for (const auto& [k, av] : a.rows_[i])
            for (const auto& [j, bv] : b.rows_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                    acc[j] = av * bv;
                } else {
                    acc[j] += av * bv;
                }
            }
        std::sort(touched.begin(), touched.end());
        auto& row = out.rows_[i];
        for (auto j : touched) {
            if (!acc[j].is_zero())
                row.emplace_back(j, acc[j]);
            used[j] = 0;
        }
    }
    return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, av] : a.row(i))
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (const auto& [l, bv] : b.row(k))
                    out.set(i * b.rows() + k, j * b.cols() + l, av * bv);
    return out;
}

ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    ExactMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (const auto& [j, v] : b.row(i))
                out.set(r0 + i, c0 + j, v);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

ExactMatrix matrix_power(const ExactMatrix& a, unsigned k) {
    if (!a.is_square())
        throw std::invalid_argument("matrix_power: matrix is not square");
    ExactMatrix out = ExactMatrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i)
        out = out * a;
    return out;
}

std::size_t rank(const ExactMatrix& a) {
    EchelonBasis basis(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        basis.insert(a.row(i));
    return basis.size();
}

EchelonBasis::EchelonBasis(std::size_t length) : pivot_row_(length, -1) {}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        const auto idx = v[pos].first;
        const auto r = pivot_row_[idx];
        if (r < 0) {
            ++pos;
            continue;
        }
        // Entries before pos are untouched; the pivot entry cancels.
        const Rational c = -v[pos].second;
        const SparseVector& row = rows_[static_cast<std::size_t>(r)];
        SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
        SparseVector merged = axpy(tail, c, row);
        v.resize(pos);
        v.insert(v.end(), merged.begin(), merged.end());
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v) {
    for (const auto& e : v)
        if (e.first >= length())
            throw std::out_of_range("EchelonBasis::insert: index beyond vector length");
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const Rational scale = v.front().second.inverse();
    for (auto& e : v)
        e.second *= scale;
    pivot_row_[v.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
    std::vector<SparseVector> sorted = rows_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
    // Back substitution from the last pivot upwards.
    std::vector<std::int64_t> pivot_of(length(), -1);
    for (std::size_t k = sorted.size(); k-- > 0;) {
        SparseVector& row = sorted[k];
        std::size_t pos = 1;
        while (pos < row.size()) {
            const auto p = pivot_of[row[pos].first];
            if (p < 0) {
                ++pos;
                continue;
            }
            const Rational c = -row[pos].second;
            SparseVector tail(row.begin() + static_cast<std::ptrdiff_t>(pos), row.end());
            SparseVector merged = axpy(tail, c, sorted[static_cast<std::size_t>(p)]);
            row.resize(pos);
            row.insert(row.end(), merged.begin(), merged.end());
        }
        pivot_of[row.front().first] = static_cast<std::int64_t>(k);
    }
    return sorted;
}

} // namespace schurkit
