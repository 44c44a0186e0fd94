#include "ferrers/simion.hpp"

#include "ferrers/errors.hpp"
#include "ferrers/pathgrid.hpp"
#include "ferrers/tp2.hpp"

namespace ferrers {

const PathCount& CountCache::operator()(unsigned m, unsigned n)
{
    auto key = std::make_pair(m, n);
    if (auto it = counts_.find(key); it != counts_.end())
        return it->second;
    return counts_.emplace(key, count_dp(GridRegion(m, n, lambda_))).first->second;
}

SimionSequence simion_sequence(CountCache& cache, unsigned ell)
{
    const Partition& lambda = cache.lambda();
    const auto r = static_cast<unsigned>(lambda.length());
    const unsigned w = lambda.width();
    SimionSequence seq{lambda, ell, {}};
    seq.values.reserve(ell + 1);
    for (unsigned i = 0; i <= ell; ++i)
        seq.values.push_back(cache(r + i, w + ell - i));
    return seq;
}

SimionSequence simion_sequence(const Partition& lambda, unsigned ell)
{
    CountCache cache(lambda);
    return simion_sequence(cache, ell);
}

TheoremVerdict verify_theorem(const SimionSequence& seq)
{
    return {is_log_concave(seq.values), is_unimodal(seq.values)};
}

TheoremVerdict verify_theorem(const Partition& lambda, unsigned ell)
{
    return verify_theorem(simion_sequence(lambda, ell));
}

std::string_view to_string(InequalityId id)
{
    switch (id) {
    case InequalityId::Eq1:
        return "Eq1";
    case InequalityId::Eq2:
        return "Eq2";
    case InequalityId::Eq3:
        return "Eq3";
    case InequalityId::Eq4:
        return "Eq4";
    case InequalityId::LogConcaveFinal:
        return "LogConcaveFinal";
    }
    return "?";
}

const InequalityShape& shape_of(InequalityId id)
{
    static const std::array<InequalityShape, 5> shapes{{
        {{{{0, 1}, {1, 0}}}, {{{0, 0}, {1, 1}}}},
        {{{{-1, 1}, {1, 1}}}, {{{0, 1}, {0, 1}}}},
        {{{{-1, 1}, {1, 0}}}, {{{0, 0}, {0, 1}}}},
        {{{{1, -1}, {0, 1}}}, {{{0, 0}, {1, 0}}}},
        {{{{1, -1}, {-1, 1}}}, {{{0, 0}, {0, 0}}}},
    }};
    return shapes[static_cast<std::size_t>(id)];
}

namespace {

bool grid_ok(unsigned m, unsigned n, GridOffset off, const Partition& lambda)
{
    const long gm = static_cast<long>(m) + off.dm;
    const long gn = static_cast<long>(n) + off.dn;
    return gm >= 0 && gn >= 0 && lambda.fits_in_box(static_cast<std::size_t>(gm), static_cast<std::size_t>(gn));
}

} // namespace

bool in_domain(InequalityId id, unsigned m, unsigned n, const Partition& lambda)
{
    const auto& s = shape_of(id);
    for (const auto& side : {s.lhs, s.rhs})
        for (auto off : side)
            if (!grid_ok(m, n, off, lambda))
                return false;
    return true;
}

IneqReport check_inequality(InequalityId id, unsigned m, unsigned n, CountCache& cache)
{
    const Partition& lambda = cache.lambda();
    if (!in_domain(id, m, n, lambda))
        throw OutOfDomain(std::string(to_string(id)) + " at m=" + std::to_string(m) + ", n=" + std::to_string(n)
                          + " references a grid not containing (" + lambda.to_text() + ")");
    const auto& s = shape_of(id);
    auto at = [&](GridOffset off) { return cache(m + off.dm, n + off.dn); };
    IneqReport rep{id, m, n, lambda, {at(s.lhs[0]), at(s.lhs[1]), at(s.rhs[0]), at(s.rhs[1])}, {}, {}, false};
    rep.lhs = rep.factors[0] * rep.factors[1];
    rep.rhs = rep.factors[2] * rep.factors[3];
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

IneqReport check_inequality(InequalityId id, unsigned m, unsigned n, const Partition& lambda)
{
    CountCache cache(lambda);
    return check_inequality(id, m, n, cache);
}

bool chain_in_domain(unsigned m, unsigned n, const Partition& lambda)
{
    for (auto id : all_inequalities)
        if (!in_domain(id, m, n, lambda))
            return false;
    return true;
}

bool ChainReport::all_hold() const
{
    for (const auto& r : reports)
        if (!r.holds)
            return false;
    return eq3_follows && final_follows;
}

ChainReport derive_chain(unsigned m, unsigned n, CountCache& cache)
{
    if (!chain_in_domain(m, n, cache.lambda()))
        throw OutOfDomain("inequality chain at m=" + std::to_string(m) + ", n=" + std::to_string(n)
                          + " needs m-1 >= " + std::to_string(cache.lambda().length())
                          + " and n-1 >= " + std::to_string(cache.lambda().width()));
    ChainReport chain{{check_inequality(InequalityId::Eq1, m, n, cache),
                       check_inequality(InequalityId::Eq2, m, n, cache),
                       check_inequality(InequalityId::Eq3, m, n, cache),
                       check_inequality(InequalityId::Eq4, m, n, cache),
                       check_inequality(InequalityId::LogConcaveFinal, m, n, cache)}};
    const auto holds = [&](InequalityId id) { return chain[id].holds; };
    chain.eq3_follows = !(holds(InequalityId::Eq1) && holds(InequalityId::Eq2)) || holds(InequalityId::Eq3);
    chain.final_follows =
        !(holds(InequalityId::Eq3) && holds(InequalityId::Eq4)) || holds(InequalityId::LogConcaveFinal);
    return chain;
}

ChainReport derive_chain(unsigned m, unsigned n, const Partition& lambda)
{
    CountCache cache(lambda);
    return derive_chain(m, n, cache);
}

} // namespace ferrers
