#pragma once

#include "ferrers/partition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ferrers {

enum class SweepMode { Exhaustive, Random };
enum class SweepTarget { Theorem, Chain, All };

struct SweepConfig {
    unsigned box_m = 0; // partitions have at most box_m parts
    unsigned box_n = 0; // and largest part at most box_n
    unsigned ell_max = 0;
    SweepMode mode = SweepMode::Exhaustive;
    SweepTarget what = SweepTarget::All;

    // Exhaustive mode evaluates the inequalities at every (m, n) with
    // m <= grid_m_max and n <= grid_n_max. Defaults: box_m + ell_max and
    // box_n + ell_max.
    std::optional<unsigned> grid_m_max;
    std::optional<unsigned> grid_n_max;

    // Random mode only. Each sample draws a partition uniformly from the
    // box, ell uniformly from [0, ell_max], and a chain point
    // (lambda'_1 + 1 + a, lambda_1 + 1 + b) with a, b in [0, ell_max].
    std::uint64_t seed = 0;
    std::size_t samples = 0;

    unsigned threads = 1;

    // Called as (finished, total) after each work unit, serialized.
    std::function<void(std::size_t, std::size_t)> progress;

    unsigned effective_grid_m_max() const { return grid_m_max.value_or(box_m + ell_max); }
    unsigned effective_grid_n_max() const { return grid_n_max.value_or(box_n + ell_max); }
};

// One evaluated sequence or inequality, for CSV output and drill-down.
struct InstanceRecord {
    std::string kind;    // "sequence" or an inequality name
    std::string lambda;  // text form
    std::optional<unsigned> ell;
    std::optional<unsigned> m;
    std::optional<unsigned> n;
    std::vector<std::string> values; // sequence terms or the four factors
    bool ok = true;
};

// Everything needed to recheck a failure by hand: all counts in decimal.
struct Violation {
    std::string kind;
    std::string lambda;
    std::optional<unsigned> ell;
    std::optional<unsigned> m;
    std::optional<unsigned> n;
    std::vector<std::string> counts;
    std::string comparison;
};

struct SweepReport {
    std::size_t partitions = 0;
    std::size_t sequences_checked = 0;
    std::size_t inequalities_checked = 0;
    std::size_t chains_checked = 0;
    std::size_t skipped_out_of_domain = 0;
    std::vector<InstanceRecord> instances;
    std::vector<Violation> violations;
};

// Runs the campaign. Violations are reported, never thrown. Instances and
// violations appear in enumeration order whatever the thread count:
// partitions lexicographically (exhaustive) or in sample order (random),
// then sequences by ell, then inequalities by (m, n, id).
SweepReport sweep(const SweepConfig& config);

} // namespace ferrers
