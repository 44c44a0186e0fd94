#pragma once

#include "ferrers/bigint.hpp"
#include "ferrers/partition.hpp"

#include <array>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace ferrers {

// Memoized N(m, n, lambda) for one fixed lambda, computed with count_dp.
// Not thread-safe; give each worker its own.
class CountCache {
public:
    explicit CountCache(Partition lambda) : lambda_(std::move(lambda)) {}

    const Partition& lambda() const noexcept { return lambda_; }

    // Throws OutOfDomain if lambda does not fit in the m x n grid.
    const PathCount& operator()(unsigned m, unsigned n);

private:
    Partition lambda_;
    std::map<std::pair<unsigned, unsigned>, PathCount> counts_;
};

// The anti-diagonal N(r+i, w+ell-i, lambda), i = 0..ell, where r is the
// number of parts and w the largest part.
struct SimionSequence {
    Partition lambda;
    unsigned ell = 0;
    std::vector<PathCount> values;
};

SimionSequence simion_sequence(const Partition& lambda, unsigned ell);
SimionSequence simion_sequence(CountCache& cache, unsigned ell);

struct TheoremVerdict {
    bool log_concave = false;
    bool unimodal = false;
};

TheoremVerdict verify_theorem(const Partition& lambda, unsigned ell);
TheoremVerdict verify_theorem(const SimionSequence& seq);

// The inequalities whose chain gives log-concavity along anti-diagonals,
// each of the form lhs <= rhs with N = N(., ., lambda):
//   Eq1:   N(m,n+1)   N(m+1,n)   <= N(m,n)   N(m+1,n+1)
//   Eq2:   N(m-1,n+1) N(m+1,n+1) <= N(m,n+1)^2
//   Eq3:   N(m-1,n+1) N(m+1,n)   <= N(m,n)   N(m,n+1)
//   Eq4:   N(m+1,n-1) N(m,n+1)   <= N(m,n)   N(m+1,n)
//   Final: N(m+1,n-1) N(m-1,n+1) <= N(m,n)^2
enum class InequalityId { Eq1, Eq2, Eq3, Eq4, LogConcaveFinal };

inline constexpr std::array<InequalityId, 5> all_inequalities{
    InequalityId::Eq1, InequalityId::Eq2, InequalityId::Eq3, InequalityId::Eq4, InequalityId::LogConcaveFinal};

std::string_view to_string(InequalityId id);

// Grid offset (dm, dn) from (m, n); a side is the product of two grids.
struct GridOffset {
    int dm;
    int dn;
};

struct InequalityShape {
    std::array<GridOffset, 2> lhs;
    std::array<GridOffset, 2> rhs;
};

const InequalityShape& shape_of(InequalityId id);

// True when every grid the inequality references contains lambda.
bool in_domain(InequalityId id, unsigned m, unsigned n, const Partition& lambda);

struct IneqReport {
    InequalityId id;
    unsigned m;
    unsigned n;
    Partition lambda;
    // Counts in the order lhs[0], lhs[1], rhs[0], rhs[1].
    std::array<PathCount, 4> factors;
    PathCount lhs;
    PathCount rhs;
    bool holds;
};

// Throws OutOfDomain when a referenced grid does not contain lambda.
IneqReport check_inequality(InequalityId id, unsigned m, unsigned n, const Partition& lambda);
IneqReport check_inequality(InequalityId id, unsigned m, unsigned n, CountCache& cache);

struct ChainReport {
    std::array<IneqReport, 5> reports; // in all_inequalities order
    bool eq3_follows = true;           // Eq1 && Eq2 implies Eq3
    bool final_follows = true;         // Eq3 && Eq4 implies Final

    const IneqReport& operator[](InequalityId id) const { return reports[static_cast<std::size_t>(id)]; }
    bool all_hold() const;
};

// Needs m-1 >= lambda'_1 and n-1 >= lambda_1; throws OutOfDomain otherwise.
ChainReport derive_chain(unsigned m, unsigned n, const Partition& lambda);
ChainReport derive_chain(unsigned m, unsigned n, CountCache& cache);

bool chain_in_domain(unsigned m, unsigned n, const Partition& lambda);

} // namespace ferrers
