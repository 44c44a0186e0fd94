#include "doctest.h"

#include "ferrers/sweep.hpp"

#include <set>

using ferrers::SweepConfig;
using ferrers::SweepMode;
using ferrers::SweepTarget;

namespace {

bool same(const ferrers::SweepReport& a, const ferrers::SweepReport& b)
{
    if (a.instances.size() != b.instances.size() || a.violations.size() != b.violations.size())
        return false;
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        const auto& x = a.instances[i];
        const auto& y = b.instances[i];
        if (x.kind != y.kind || x.lambda != y.lambda || x.ell != y.ell || x.m != y.m || x.n != y.n
            || x.values != y.values || x.ok != y.ok)
            return false;
    }
    return a.sequences_checked == b.sequences_checked && a.inequalities_checked == b.inequalities_checked
           && a.skipped_out_of_domain == b.skipped_out_of_domain && a.chains_checked == b.chains_checked;
}

} // namespace

TEST_CASE("exhaustive 2x2 box")
{
    SweepConfig cfg;
    cfg.box_m = 2;
    cfg.box_n = 2;
    cfg.ell_max = 2;
    cfg.what = SweepTarget::Theorem;
    const auto rep = ferrers::sweep(cfg);
    CHECK(rep.partitions == 6);
    CHECK(rep.sequences_checked == 18);
    CHECK(rep.inequalities_checked == 0);
    CHECK(rep.violations.empty());
    std::set<std::string> seen;
    for (const auto& inst : rep.instances)
        seen.insert(inst.lambda);
    CHECK(seen == std::set<std::string>{"", "1", "2", "1,1", "2,1", "2,2"});
    // lexicographic partition order, empty first
    CHECK(rep.instances.front().lambda == "");
    CHECK(rep.instances[3].lambda == "1");
    CHECK(rep.instances[6].lambda == "1,1");
}

TEST_CASE("exhaustive 0x0 box gives binomial rows")
{
    SweepConfig cfg;
    cfg.ell_max = 3;
    cfg.what = SweepTarget::Theorem;
    const auto rep = ferrers::sweep(cfg);
    REQUIRE(rep.instances.size() == 4);
    CHECK(rep.instances[3].values == std::vector<std::string>{"1", "3", "3", "1"});
    CHECK(rep.violations.empty());
}

TEST_CASE("chain sweep counts skips")
{
    SweepConfig cfg;
    cfg.box_m = 1;
    cfg.box_n = 1;
    cfg.ell_max = 0;
    cfg.what = SweepTarget::Chain;
    cfg.grid_m_max = 2;
    cfg.grid_n_max = 2;
    const auto rep = ferrers::sweep(cfg);
    // 2 partitions x 9 grid points x 5 inequalities
    CHECK(rep.inequalities_checked + rep.skipped_out_of_domain == 90);
    CHECK(rep.chains_checked == 4 + 1); // (1..2)^2 for the empty partition, (2,2) for (1)
    CHECK(rep.violations.empty());
}

TEST_CASE("random sweep is deterministic and thread-count independent")
{
    SweepConfig cfg;
    cfg.mode = SweepMode::Random;
    cfg.seed = 42;
    cfg.samples = 100;
    cfg.box_m = 20;
    cfg.box_n = 20;
    cfg.ell_max = 10;
    const auto a = ferrers::sweep(cfg);
    const auto b = ferrers::sweep(cfg);
    cfg.threads = 4;
    const auto c = ferrers::sweep(cfg);
    CHECK(a.violations.empty());
    CHECK(a.partitions == 100);
    CHECK(a.sequences_checked == 100);
    CHECK(a.chains_checked == 100);
    CHECK(same(a, b));
    CHECK(same(a, c));

    cfg.seed = 43;
    CHECK_FALSE(same(a, ferrers::sweep(cfg)));
}

TEST_CASE("progress callback sees every unit")
{
    SweepConfig cfg;
    cfg.box_m = 3;
    cfg.box_n = 3;
    cfg.ell_max = 2;
    cfg.threads = 3;
    std::size_t calls = 0;
    std::size_t last_total = 0;
    cfg.progress = [&](std::size_t, std::size_t total) {
        ++calls;
        last_total = total;
    };
    ferrers::sweep(cfg);
    CHECK(calls == 20);
    CHECK(last_total == 20);
}
