#include "ferrers/sweep.hpp"

#include "ferrers/bigint.hpp"
#include "ferrers/random.hpp"
#include "ferrers/simion.hpp"
#include "ferrers/tp2.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace ferrers {

namespace {

struct ChainPoint {
    unsigned m;
    unsigned n;
};

// One partition's share of the campaign.
struct WorkUnit {
    Partition lambda;
    std::vector<unsigned> ells;
    std::vector<ChainPoint> points;
};

struct UnitResult {
    std::size_t sequences = 0;
    std::size_t inequalities = 0;
    std::size_t chains = 0;
    std::size_t skipped = 0;
    std::vector<InstanceRecord> instances;
    std::vector<Violation> violations;
};

std::string join_product(const std::vector<std::string>& c, std::size_t a, std::size_t b)
{
    return c[a] + "*" + c[b];
}

void run_sequences(const WorkUnit& unit, CountCache& cache, UnitResult& out)
{
    const std::string text = unit.lambda.to_text();
    for (auto ell : unit.ells) {
        const auto seq = simion_sequence(cache, ell);
        auto values = to_decimal(seq.values);
        const auto lc_bad = log_concavity_violation(seq.values);
        const auto uni_bad = unimodality_violation(seq.values);
        ++out.sequences;
        out.instances.push_back({"sequence", text, ell, std::nullopt, std::nullopt, values, !lc_bad && !uni_bad});
        if (lc_bad) {
            const auto i = *lc_bad;
            out.violations.push_back({"theorem-log-concave", text, ell, std::nullopt, std::nullopt, values,
                                      "x[" + std::to_string(i - 1) + "]*x[" + std::to_string(i + 1) + "] = "
                                          + to_decimal(seq.values[i - 1] * seq.values[i + 1]) + " > x["
                                          + std::to_string(i) + "]^2 = " + to_decimal(seq.values[i] * seq.values[i])});
        }
        if (uni_bad) {
            const auto i = *uni_bad;
            out.violations.push_back({lc_bad ? "conjecture-unimodal" : "log-concave-not-unimodal", text, ell,
                                      std::nullopt, std::nullopt, values,
                                      "x[" + std::to_string(i) + "] = " + values[i] + " rises after a strict fall"});
        }
    }
}

void run_inequalities(const WorkUnit& unit, CountCache& cache, UnitResult& out)
{
    const std::string text = unit.lambda.to_text();
    for (auto [m, n] : unit.points) {
        std::array<std::optional<bool>, 5> held;
        for (auto id : all_inequalities) {
            if (!in_domain(id, m, n, unit.lambda)) {
                ++out.skipped;
                continue;
            }
            const auto rep = check_inequality(id, m, n, cache);
            ++out.inequalities;
            held[static_cast<std::size_t>(id)] = rep.holds;
            auto counts = to_decimal(rep.factors);
            if (!rep.holds) {
                out.violations.push_back({std::string(to_string(id)), text, std::nullopt, m, n, counts,
                                          join_product(counts, 0, 1) + " = " + to_decimal(rep.lhs) + " > "
                                              + join_product(counts, 2, 3) + " = " + to_decimal(rep.rhs)});
            }
            out.instances.push_back({std::string(to_string(id)), text, std::nullopt, m, n, std::move(counts), rep.holds});
        }
        if (!chain_in_domain(m, n, unit.lambda))
            continue;
        ++out.chains;
        auto h = [&](InequalityId id) { return *held[static_cast<std::size_t>(id)]; };
        if (h(InequalityId::Eq1) && h(InequalityId::Eq2) && !h(InequalityId::Eq3))
            out.violations.push_back({"implication-eq3", text, std::nullopt, m, n, {},
                                      "Eq1 and Eq2 hold but Eq3 fails"});
        if (h(InequalityId::Eq3) && h(InequalityId::Eq4) && !h(InequalityId::LogConcaveFinal))
            out.violations.push_back({"implication-final", text, std::nullopt, m, n, {},
                                      "Eq3 and Eq4 hold but LogConcaveFinal fails"});
    }
}

UnitResult run_unit(const WorkUnit& unit)
{
    CountCache cache(unit.lambda);
    UnitResult out;
    run_sequences(unit, cache, out);
    run_inequalities(unit, cache, out);
    return out;
}

std::vector<WorkUnit> plan(const SweepConfig& cfg)
{
    const bool theorem = cfg.what != SweepTarget::Chain;
    const bool chain = cfg.what != SweepTarget::Theorem;
    std::vector<WorkUnit> units;

    if (cfg.mode == SweepMode::Exhaustive) {
        const unsigned gm = cfg.effective_grid_m_max();
        const unsigned gn = cfg.effective_grid_n_max();
        for (auto& lambda : partitions_in_box(cfg.box_m, cfg.box_n)) {
            WorkUnit u{std::move(lambda), {}, {}};
            if (theorem)
                for (unsigned ell = 0; ell <= cfg.ell_max; ++ell)
                    u.ells.push_back(ell);
            if (chain)
                for (unsigned m = 0; m <= gm; ++m)
                    for (unsigned n = 0; n <= gn; ++n)
                        u.points.push_back({m, n});
            units.push_back(std::move(u));
        }
        return units;
    }

    Rng rng(cfg.seed);
    std::uniform_int_distribution<unsigned> ell_dist(0, cfg.ell_max);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        WorkUnit u{random_partition_in_box(rng, cfg.box_m, cfg.box_n), {}, {}};
        const unsigned ell = ell_dist(rng);
        const unsigned dm = ell_dist(rng);
        const unsigned dn = ell_dist(rng);
        if (theorem)
            u.ells.push_back(ell);
        if (chain)
            u.points.push_back({static_cast<unsigned>(u.lambda.length()) + 1 + dm, u.lambda.width() + 1 + dn});
        units.push_back(std::move(u));
    }
    return units;
}

} // namespace

SweepReport sweep(const SweepConfig& config)
{
    const auto units = plan(config);
    std::vector<UnitResult> results(units.size());

    std::atomic<std::size_t> next{0};
    std::size_t finished = 0;
    std::mutex progress_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            results[i] = run_unit(units[i]);
            if (config.progress) {
                std::lock_guard lock(progress_mutex);
                config.progress(++finished, units.size());
            }
        }
    };
    const unsigned threads = std::max(1u, config.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    SweepReport report;
    report.partitions = units.size();
    for (auto& r : results) {
        report.sequences_checked += r.sequences;
        report.inequalities_checked += r.inequalities;
        report.chains_checked += r.chains;
        report.skipped_out_of_domain += r.skipped;
        std::move(r.instances.begin(), r.instances.end(), std::back_inserter(report.instances));
        std::move(r.violations.begin(), r.violations.end(), std::back_inserter(report.violations));
    }
    return report;
}

} // namespace ferrers
