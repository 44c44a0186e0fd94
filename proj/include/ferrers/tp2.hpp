#pragma once

#include "ferrers/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ferrers {

// Dense row-major matrix of nonnegative integers, at least 1x1.
class MatrixNN {
public:
    // Zero matrix. Throws InvalidMatrix on a zero dimension.
    MatrixNN(std::size_t rows, std::size_t cols);

    // Throws InvalidMatrix on empty or ragged input or a negative entry.
    explicit MatrixNN(const std::vector<std::vector<BigInt>>& rows);
    MatrixNN(std::initializer_list<std::initializer_list<long>> rows);

    static MatrixNN identity(std::size_t n);

    // Ones on and above the diagonal: right-multiplying a row by it gives
    // the row's partial sums.
    static MatrixNN upper_triangular_ones(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    // Throws InvalidMatrix for a negative value.
    void set(std::size_t i, std::size_t j, BigInt value);

    std::vector<std::vector<BigInt>> to_rows() const;

    friend bool operator==(const MatrixNN&, const MatrixNN&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

// Exact product. Throws DimensionMismatch unless a.cols() == b.rows().
MatrixNN matrix_multiply(const MatrixNN& a, const MatrixNN& b);

// Order-2 minor on rows row1 < row2 and columns col1 < col2.
struct Minor {
    std::size_t row1;
    std::size_t row2;
    std::size_t col1;
    std::size_t col2;
    BigInt determinant;
};

enum class Tp2Method {
    // Two-row matrices use the adjacent-column reduction, others check
    // every minor.
    Auto,
    AllMinors,
    // Auto, then cross-checked against AllMinors; disagreement throws
    // std::logic_error.
    Verified,
};

// A negative order-2 minor, or nullopt when the matrix is TP2. AllMinors
// returns the first one in lexicographic (row pair, column pair) order;
// the two-row reduction returns a pair of consecutive nonzero columns.
std::optional<Minor> find_negative_minor(const MatrixNN& m, Tp2Method method = Tp2Method::Auto);

// Every order-2 minor is nonnegative.
bool is_tp2(const MatrixNN& m, Tp2Method method = Tp2Method::Auto);

// Rows (x_0 .. x_l) and (0, x_0 .. x_{l-1}). Throws PreconditionViolated
// on an empty sequence or a nonpositive entry.
MatrixNN two_row_lift(std::span<const BigInt> x);

// Smallest interior index i with x_{i-1} x_{i+1} > x_i^2. Throws
// PreconditionViolated on a nonpositive entry.
std::optional<std::size_t> log_concavity_violation(std::span<const BigInt> x);

bool is_log_concave(std::span<const BigInt> x);

// Index of the first strict rise after a strict fall.
std::optional<std::size_t> unimodality_violation(std::span<const BigInt> x);

bool is_unimodal(std::span<const BigInt> x);

// X_m = x_0 + ... + x_m.
std::vector<BigInt> partial_sums(std::span<const BigInt> x);

// A nonnegative sequence a and a positive sequence x of equal length,
// together with their partial sums A and X.
class SequencePair {
public:
    // Throws PreconditionViolated on length mismatch, empty input,
    // negative a_i or nonpositive x_i.
    SequencePair(std::vector<BigInt> a, std::vector<BigInt> x);

    const std::vector<BigInt>& a() const noexcept { return a_; }
    const std::vector<BigInt>& x() const noexcept { return x_; }
    const std::vector<BigInt>& a_sums() const noexcept { return a_sums_; }
    const std::vector<BigInt>& x_sums() const noexcept { return x_sums_; }
    std::size_t size() const noexcept { return a_.size(); }

private:
    std::vector<BigInt> a_;
    std::vector<BigInt> x_;
    std::vector<BigInt> a_sums_;
    std::vector<BigInt> x_sums_;
};

// First i with a_i x_{i+1} > a_{i+1} x_i.
std::optional<std::size_t> ratio_dominance_violation(const SequencePair& p);
bool check_ratio_dominance(const SequencePair& p);

// First m with A_m X_{m+1} > A_{m+1} X_m.
std::optional<std::size_t> partial_sum_dominance_violation(const SequencePair& p);
bool partial_sum_dominance(const SequencePair& p);

// Requires a log-concave x (throws PreconditionViolated otherwise) and
// reports whether its partial sums are log-concave too. A false result
// means something is broken.
bool partial_sums_preserve_log_concavity(std::span<const BigInt> x);

} // namespace ferrers
