#pragma once

#include "schurkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace schurkit {

// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    Rational value;
};

// Matrix over Q.  Entries are exact; storage is row-compressed because the
// operators built here (Chevalley generators on tensor spaces, weight
// projectors) are overwhelmingly zero.  Equality is exact entrywise equality.
class ExactMatrix {
public:
    using Row = SparseVector;

    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<Rational>& entries);
    // Row-major dense input; mostly for tests.
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows() == cols_; }

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    void add(std::size_t i, std::size_t j, const Rational& value);
    const Row& row(std::size_t i) const { return rows_.at(i); }

    std::size_t nonzeros() const noexcept;
    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;
    std::vector<Rational> diagonal_entries() const;
    Rational trace() const;
    ExactMatrix transpose() const;
    // Entry of largest absolute value (first in row-major order on ties).
    std::optional<MatrixEntry> max_magnitude_entry() const;
    // Row-major vectorization (index i * cols + j).
    SparseVector vectorize() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    ExactMatrix& operator+=(const ExactMatrix& rhs);
    ExactMatrix& operator-=(const ExactMatrix& rhs);
    ExactMatrix& operator*=(const Rational& c);
    ExactMatrix operator-() const;

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const Rational& c, ExactMatrix a) { return a *= c; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks);
ExactMatrix matrix_power(const ExactMatrix& a, unsigned k);
std::size_t rank(const ExactMatrix& a);

// Sparse vector arithmetic shared by the echelon routines.
// Returns x + c * y.
SparseVector axpy(const SparseVector& x, const Rational& c, const SparseVector& y);

// Row echelon basis of a growing subspace of Q^length.  Rows are kept with
// their leading entry equal to 1 at a distinct pivot index.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length);

    std::size_t length() const noexcept { return pivot_row_.size(); }
    std::size_t size() const noexcept { return rows_.size(); }
    // Remainder of v after elimination against the basis (zero iff v is in the span).
    SparseVector reduce(SparseVector v) const;
    // Adds v if it is independent of the basis; returns whether it was added.
    bool insert(SparseVector v);
    // Canonical basis of the span: reduced row echelon form ordered by pivot.
    std::vector<SparseVector> reduced_rows() const;

private:
    std::vector<SparseVector> rows_;
    std::vector<std::int64_t> pivot_row_;
};

} // namespace schurkit
