#include "ferrers/random.hpp"

#include <algorithm>
#include <numeric>

namespace ferrers {

namespace {

unsigned uniform(Rng& rng, unsigned lo, unsigned hi)
{
    return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

std::vector<std::size_t> sorted_subset(Rng& rng, std::size_t from, std::size_t count)
{
    std::vector<std::size_t> idx(from);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

Partition random_partition_in_box(Rng& rng, std::size_t rows, std::size_t cols)
{
    // Walk the diagram's boundary from the lower-left corner of the box to
    // the upper-right: the row passed by an Up step has as many removed
    // cells as Right steps taken so far.
    std::vector<bool> up(rows + cols, false);
    std::fill(up.begin(), up.begin() + static_cast<std::ptrdiff_t>(rows), true);
    std::shuffle(up.begin(), up.end(), rng);
    std::vector<Partition::Part> parts;
    Partition::Part rights = 0;
    for (bool is_up : up) {
        if (is_up)
            parts.push_back(rights);
        else
            ++rights;
    }
    // bottom-to-top order is nondecreasing
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

std::vector<BigInt> random_positive_sequence(Rng& rng, std::size_t length, unsigned max_entry)
{
    std::vector<BigInt> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        out.emplace_back(uniform(rng, 1, max_entry));
    return out;
}

std::vector<BigInt> random_tent_sequence(Rng& rng, std::size_t length, unsigned factors)
{
    std::vector<BigInt> out(length, BigInt(1));
    for (unsigned f = 0; f < factors; ++f) {
        const unsigned base = uniform(rng, 1, 9);
        const unsigned slope = uniform(rng, 0, 5);
        const bool rising = uniform(rng, 0, 1) == 1;
        for (std::size_t i = 0; i < length; ++i) {
            const std::size_t t = rising ? i : length - 1 - i;
            out[i] *= static_cast<unsigned long>(base + slope * t);
        }
    }
    return out;
}

std::vector<BigInt> random_bounded_log_concave(Rng& rng, std::size_t length, unsigned max_entry)
{
    while (true) {
        std::vector<BigInt> out;
        out.reserve(length);
        bool stuck = false;
        for (std::size_t i = 0; i < length && !stuck; ++i) {
            unsigned hi = max_entry;
            if (i >= 2) {
                BigInt bound = out[i - 1] * out[i - 1] / out[i - 2];
                if (bound < hi)
                    hi = static_cast<unsigned>(bound.get_ui());
            }
            if (hi == 0)
                stuck = true;
            else
                out.emplace_back(uniform(rng, 1, hi));
        }
        if (!stuck)
            return out;
    }
}

MatrixNN random_tp2_matrix(Rng& rng, std::size_t rows, std::size_t cols)
{
    const std::size_t n = std::max(rows, cols) + uniform(rng, 0, 2);
    MatrixNN acc = MatrixNN::identity(n);
    const unsigned factors = uniform(rng, 1, 2 * static_cast<unsigned>(n));
    for (unsigned f = 0; f < factors; ++f) {
        MatrixNN factor = MatrixNN::identity(n);
        const unsigned kind = uniform(rng, 0, 2);
        if (kind == 2) {
            for (std::size_t i = 0; i < n; ++i)
                factor.set(i, i, uniform(rng, 1, 3));
        } else if (n > 1) {
            const std::size_t i = uniform(rng, 0, static_cast<unsigned>(n - 2));
            const unsigned weight = uniform(rng, 1, 4);
            if (kind == 0)
                factor.set(i, i + 1, weight);
            else
                factor.set(i + 1, i, weight);
        }
        acc = matrix_multiply(acc, factor);
    }
    const auto keep_rows = sorted_subset(rng, n, rows);
    const auto keep_cols = sorted_subset(rng, n, cols);
    MatrixNN out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.set(i, j, acc(keep_rows[i], keep_cols[j]));
    return out;
}

SequencePair random_ratio_dominant_pair(Rng& rng, std::size_t length, unsigned max_entry)
{
    auto x = random_positive_sequence(rng, length, max_entry);
    std::vector<BigInt> a;
    a.reserve(length);
    a.emplace_back(uniform(rng, 0, max_entry));
    for (std::size_t i = 1; i < length; ++i) {
        // smallest a_i with a_{i-1} x_i <= a_i x_{i-1}
        BigInt need = a[i - 1] * x[i];
        BigInt least;
        mpz_cdiv_q(least.get_mpz_t(), need.get_mpz_t(), x[i - 1].get_mpz_t());
        a.push_back(least + uniform(rng, 0, 3));
    }
    return SequencePair(std::move(a), std::move(x));
}

} // namespace ferrers
