#pragma once

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ferrers {

// The rectangle R(m, n) (m rows, n columns) with the Ferrers diagram of a
// partition removed from its upper-left corner.
//
// Coordinates put the lower-left corner at (0, 0) and the upper-right at
// (n, m). Row i (1-based, counted from the top) spans y in [m-i, m-i+1];
// column j spans x in [j-1, j]. A path may touch the lower and right
// boundary of the removed cells but may not use any other edge of them,
// including the outer walls beside them:
//
//   horizontal edge (x-1, y) -> (x, y) is admissible iff y <= m - lambda'_x
//   vertical edge   (x, y-1) -> (x, y) is admissible iff x >= lambda_{m-y+1}
class GridRegion {
public:
    // Throws OutOfDomain unless the partition fits in the rows x cols box.
    GridRegion(unsigned rows, unsigned cols, Partition removed);

    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    const Partition& removed() const noexcept { return removed_; }

    // Edge (x-1, y) -> (x, y); requires 1 <= x <= cols, y <= rows.
    bool horizontal_edge_admissible(unsigned x, unsigned y) const noexcept
    {
        return y + column_heights_[x - 1] <= rows_;
    }

    // Edge (x, y-1) -> (x, y); requires 1 <= y <= rows, x <= cols.
    bool vertical_edge_admissible(unsigned x, unsigned y) const noexcept
    {
        return x >= removed_.part(rows_ - y);
    }

    // Swaps the roles of rows and columns and conjugates the partition.
    // Path counts are invariant under this map.
    GridRegion transpose() const;

    friend bool operator==(const GridRegion& a, const GridRegion& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.removed_ == b.removed_;
    }

private:
    unsigned rows_;
    unsigned cols_;
    Partition removed_;
    std::vector<Partition::Part> column_heights_; // lambda'_j, padded with zeros to cols
};

enum class Step : char { Up = 'U', Right = 'R' };

using LatticePath = std::vector<Step>;

// "RU"-style rendering, one letter per step.
std::string to_string(const LatticePath& path);

enum class DpMemory {
    Rolling,   // one row of cols+1 integers
    FullTable, // the whole (rows+1) x (cols+1) table is kept
};

// N(m, n, lambda) by the vertex recurrence
//   f(x, y) = [h-edge ok] f(x-1, y) + [v-edge ok] f(x, y-1),  f(0, 0) = 1.
PathCount count_dp(const GridRegion& region, DpMemory memory = DpMemory::Rolling);

// Full vertex table: table[y][x] is the number of admissible paths from
// the origin to (x, y). table[rows][cols] equals count_dp(region).
std::vector<std::vector<PathCount>> count_table(const GridRegion& region);

// N(m, n, lambda) by peeling the first column of the diagram:
//   N(m, n, lambda) = sum_{k = lambda'_1}^{m} N(k, n-1, mu),
// with mu the partition left after removing the first column, and
// N(m, n, {}) = C(m+n, n). Memoized per call.
PathCount count_recursive(const GridRegion& region);

// True iff the path has rows Up and cols Right steps and every edge it
// uses is admissible.
bool is_admissible_path(const GridRegion& region, const LatticePath& path);

// Lists every admissible path (depth-first, Right before Up). Each path is
// validated edge by edge. Throws CapExceeded when C(m+n, n) > cap.
std::vector<LatticePath> enumerate_paths(const GridRegion& region, std::uint64_t cap);

} // namespace ferrers
