#include "ferrers/pathgrid.hpp"

#include "ferrers/errors.hpp"

#include <map>
#include <tuple>

namespace ferrers {

GridRegion::GridRegion(unsigned rows, unsigned cols, Partition removed)
    : rows_(rows)
    , cols_(cols)
    , removed_(std::move(removed))
{
    if (!removed_.fits_in_box(rows, cols))
        throw OutOfDomain("partition (" + removed_.to_text() + ") does not fit in a "
                          + std::to_string(rows) + "x" + std::to_string(cols) + " grid");
    column_heights_ = removed_.conjugate().parts();
    column_heights_.resize(cols_, 0);
}

GridRegion GridRegion::transpose() const
{
    return GridRegion(cols_, rows_, removed_.conjugate());
}

std::string to_string(const LatticePath& path)
{
    std::string s;
    s.reserve(path.size());
    for (auto step : path)
        s += static_cast<char>(step);
    return s;
}

PathCount count_dp(const GridRegion& region, DpMemory memory)
{
    if (memory == DpMemory::FullTable)
        return count_table(region).back().back();

    const unsigned m = region.rows();
    const unsigned n = region.cols();
    std::vector<PathCount> row(n + 1);
    for (unsigned y = 0; y <= m; ++y) {
        for (unsigned x = 0; x <= n; ++x) {
            PathCount& cell = row[x]; // holds f(x, y-1) on entry
            if (y == 0)
                cell = (x == 0) ? 1 : 0;
            else if (!region.vertical_edge_admissible(x, y))
                cell = 0;
            if (x > 0 && region.horizontal_edge_admissible(x, y))
                cell += row[x - 1];
        }
    }
    return row[n];
}

std::vector<std::vector<PathCount>> count_table(const GridRegion& region)
{
    const unsigned m = region.rows();
    const unsigned n = region.cols();
    std::vector<std::vector<PathCount>> table(m + 1, std::vector<PathCount>(n + 1));
    table[0][0] = 1;
    for (unsigned y = 0; y <= m; ++y) {
        for (unsigned x = 0; x <= n; ++x) {
            auto& cell = table[y][x];
            if (x > 0 && region.horizontal_edge_admissible(x, y))
                cell += table[y][x - 1];
            if (y > 0 && region.vertical_edge_admissible(x, y))
                cell += table[y - 1][x];
        }
    }
    return table;
}

namespace {

class RecursiveCounter {
public:
    PathCount count(unsigned m, unsigned n, const Partition& lambda)
    {
        if (lambda.empty())
            return binomial(m + n, n);
        auto key = std::make_tuple(m, n, lambda);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // width >= 1 and the diagram fits, so n >= 1 here.
        const Partition mu = lambda.remove_first_column();
        PathCount total = 0;
        for (auto k = static_cast<unsigned>(lambda.length()); k <= m; ++k)
            total += count(k, n - 1, mu);
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::tuple<unsigned, unsigned, Partition>, PathCount> memo_;
};

void extend_paths(const GridRegion& region, unsigned x, unsigned y, LatticePath& current,
                  std::vector<LatticePath>& out)
{
    if (x == region.cols() && y == region.rows()) {
        if (!is_admissible_path(region, current))
            throw std::logic_error("enumerated path " + to_string(current) + " failed validation");
        out.push_back(current);
        return;
    }
    if (x < region.cols() && region.horizontal_edge_admissible(x + 1, y)) {
        current.push_back(Step::Right);
        extend_paths(region, x + 1, y, current, out);
        current.pop_back();
    }
    if (y < region.rows() && region.vertical_edge_admissible(x, y + 1)) {
        current.push_back(Step::Up);
        extend_paths(region, x, y + 1, current, out);
        current.pop_back();
    }
}

} // namespace

PathCount count_recursive(const GridRegion& region)
{
    RecursiveCounter counter;
    return counter.count(region.rows(), region.cols(), region.removed());
}

bool is_admissible_path(const GridRegion& region, const LatticePath& path)
{
    unsigned x = 0;
    unsigned y = 0;
    for (auto step : path) {
        if (step == Step::Right) {
            if (x == region.cols() || !region.horizontal_edge_admissible(x + 1, y))
                return false;
            ++x;
        } else {
            if (y == region.rows() || !region.vertical_edge_admissible(x, y + 1))
                return false;
            ++y;
        }
    }
    return x == region.cols() && y == region.rows();
}

std::vector<LatticePath> enumerate_paths(const GridRegion& region, std::uint64_t cap)
{
    const auto unrestricted = binomial(region.rows() + region.cols(), region.cols());
    if (cmp(unrestricted, BigInt(std::to_string(cap))) > 0)
        throw CapExceeded("unrestricted path count C(" + std::to_string(region.rows() + region.cols())
                          + "," + std::to_string(region.cols()) + ") = " + to_decimal(unrestricted)
                          + " exceeds cap " + std::to_string(cap));
    std::vector<LatticePath> out;
    LatticePath current;
    current.reserve(region.rows() + region.cols());
    extend_paths(region, 0, 0, current, out);
    return out;
}

} // namespace ferrers
