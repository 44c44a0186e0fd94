#include "ferrers/tp2.hpp"

#include "ferrers/errors.hpp"

#include <stdexcept>
#include <string>

namespace ferrers {

MatrixNN::MatrixNN(std::size_t rows, std::size_t cols)
    : rows_(rows)
    , cols_(cols)
    , entries_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw InvalidMatrix("matrix needs at least one row and one column");
}

MatrixNN::MatrixNN(const std::vector<std::vector<BigInt>>& rows)
    : MatrixNN(rows.size(), rows.empty() ? 0 : rows.front().size())
{
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_)
            throw InvalidMatrix("row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                                + " entries, expected " + std::to_string(cols_));
        for (std::size_t j = 0; j < cols_; ++j)
            set(i, j, rows[i][j]);
    }
}

MatrixNN::MatrixNN(std::initializer_list<std::initializer_list<long>> rows)
    : MatrixNN([&] {
        std::vector<std::vector<BigInt>> out;
        for (const auto& r : rows)
            out.emplace_back(r.begin(), r.end());
        return out;
    }())
{
}

MatrixNN MatrixNN::identity(std::size_t n)
{
    MatrixNN m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.entries_[i * n + i] = 1;
    return m;
}

MatrixNN MatrixNN::upper_triangular_ones(std::size_t n)
{
    MatrixNN m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            m.entries_[i * n + j] = 1;
    return m;
}

void MatrixNN::set(std::size_t i, std::size_t j, BigInt value)
{
    if (sgn(value) < 0)
        throw InvalidMatrix("negative entry " + to_decimal(value) + " at (" + std::to_string(i) + ","
                            + std::to_string(j) + ")");
    entries_[i * cols_ + j] = std::move(value);
}

std::vector<std::vector<BigInt>> MatrixNN::to_rows() const
{
    std::vector<std::vector<BigInt>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i].assign(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return out;
}

MatrixNN matrix_multiply(const MatrixNN& a, const MatrixNN& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols())
                                + " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    MatrixNN out(a.rows(), b.cols());
    BigInt acc;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc += a(i, k) * b(k, j);
            out.set(i, j, acc);
        }
    }
    return out;
}

namespace {

BigInt minor_det(const MatrixNN& m, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2)
{
    return m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
}

std::optional<Minor> all_minors(const MatrixNN& m)
{
    for (std::size_t r1 = 0; r1 < m.rows(); ++r1)
        for (std::size_t r2 = r1 + 1; r2 < m.rows(); ++r2)
            for (std::size_t c1 = 0; c1 < m.cols(); ++c1)
                for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2) {
                    auto det = minor_det(m, r1, r2, c1, c2);
                    if (sgn(det) < 0)
                        return Minor{r1, r2, c1, c2, std::move(det)};
                }
    return std::nullopt;
}

// For two rows of nonnegative entries, each nonzero column is a vector in
// the closed first quadrant and the minor on columns j < k is negative
// iff column k points at a smaller angle than column j. Zero columns
// make every minor through them vanish, so dropping them leaves a chain
// where consecutive checks suffice.
std::optional<Minor> two_row_reduction(const MatrixNN& m)
{
    std::optional<std::size_t> prev;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sgn(m(0, c)) == 0 && sgn(m(1, c)) == 0)
            continue;
        if (prev) {
            auto det = minor_det(m, 0, 1, *prev, c);
            if (sgn(det) < 0)
                return Minor{0, 1, *prev, c, std::move(det)};
        }
        prev = c;
    }
    return std::nullopt;
}

void require_positive(std::span<const BigInt> x, const char* what)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) <= 0)
            throw PreconditionViolated(std::string(what) + ": entry " + std::to_string(i) + " ("
                                       + to_decimal(x[i]) + ") is not positive");
}

} // namespace

std::optional<Minor> find_negative_minor(const MatrixNN& m, Tp2Method method)
{
    if (method == Tp2Method::AllMinors || m.rows() != 2)
        return all_minors(m);
    auto fast = two_row_reduction(m);
    if (method == Tp2Method::Verified && fast.has_value() != all_minors(m).has_value())
        throw std::logic_error("two-row TP2 reduction disagrees with the full minor check");
    return fast;
}

bool is_tp2(const MatrixNN& m, Tp2Method method)
{
    return !find_negative_minor(m, method).has_value();
}

MatrixNN two_row_lift(std::span<const BigInt> x)
{
    if (x.empty())
        throw PreconditionViolated("two_row_lift: empty sequence");
    require_positive(x, "two_row_lift");
    MatrixNN out(2, x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out.set(0, j, x[j]);
        if (j > 0)
            out.set(1, j, x[j - 1]);
    }
    return out;
}

std::optional<std::size_t> log_concavity_violation(std::span<const BigInt> x)
{
    require_positive(x, "log-concavity check");
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (x[i - 1] * x[i + 1] > x[i] * x[i])
            return i;
    return std::nullopt;
}

bool is_log_concave(std::span<const BigInt> x) { return !log_concavity_violation(x).has_value(); }

std::optional<std::size_t> unimodality_violation(std::span<const BigInt> x)
{
    require_positive(x, "unimodality check");
    bool fallen = false;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] < x[i - 1])
            fallen = true;
        else if (x[i] > x[i - 1] && fallen)
            return i;
    }
    return std::nullopt;
}

bool is_unimodal(std::span<const BigInt> x) { return !unimodality_violation(x).has_value(); }

std::vector<BigInt> partial_sums(std::span<const BigInt> x)
{
    std::vector<BigInt> out;
    out.reserve(x.size());
    BigInt running = 0;
    for (const auto& v : x) {
        running += v;
        out.push_back(running);
    }
    return out;
}

SequencePair::SequencePair(std::vector<BigInt> a, std::vector<BigInt> x)
    : a_(std::move(a))
    , x_(std::move(x))
{
    if (a_.empty() || a_.size() != x_.size())
        throw PreconditionViolated("sequence pair needs equal nonzero lengths, got "
                                   + std::to_string(a_.size()) + " and " + std::to_string(x_.size()));
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (sgn(a_[i]) < 0)
            throw PreconditionViolated("a[" + std::to_string(i) + "] = " + to_decimal(a_[i]) + " is negative");
    require_positive(x_, "sequence pair x");
    a_sums_ = partial_sums(a_);
    x_sums_ = partial_sums(x_);
}

std::optional<std::size_t> ratio_dominance_violation(const SequencePair& p)
{
    const auto& a = p.a();
    const auto& x = p.x();
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (a[i] * x[i + 1] > a[i + 1] * x[i])
            return i;
    return std::nullopt;
}

bool check_ratio_dominance(const SequencePair& p) { return !ratio_dominance_violation(p).has_value(); }

std::optional<std::size_t> partial_sum_dominance_violation(const SequencePair& p)
{
    const auto& sa = p.a_sums();
    const auto& sx = p.x_sums();
    for (std::size_t m = 0; m + 1 < p.size(); ++m)
        if (sa[m] * sx[m + 1] > sa[m + 1] * sx[m])
            return m;
    return std::nullopt;
}

bool partial_sum_dominance(const SequencePair& p) { return !partial_sum_dominance_violation(p).has_value(); }

bool partial_sums_preserve_log_concavity(std::span<const BigInt> x)
{
    if (auto bad = log_concavity_violation(x))
        throw PreconditionViolated("sequence is not log-concave at index " + std::to_string(*bad));
    return is_log_concave(partial_sums(x));
}

} // namespace ferrers
