#include "ferrers/cli.hpp"

#include "ferrers/errors.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/pathgrid.hpp"
#include "ferrers/simion.hpp"
#include "ferrers/sweep.hpp"
#include "ferrers/tp2.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace ferrers::cli {

namespace {

using json = nlohmann::ordered_json;
using CsvRow = std::vector<std::string>;

// Aborts a command with a diagnostic and no envelope.
struct Failure {
    ExitCode code;
    std::string message;
};

struct Outcome {
    json parameters = json::object();
    json results = json::object();
    json violations = json::array();
    std::vector<CsvRow> csv;
    ExitCode code = ExitCode::Ok;
    std::string diagnostic; // printed to the error stream when nonempty
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            s += sep;
        s += items[i];
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(s);
    while (std::getline(in, field, sep))
        out.push_back(field);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

BigInt parse_integer(std::string field)
{
    auto first = field.find_first_not_of(" \t");
    auto last = field.find_last_not_of(" \t");
    field = first == std::string::npos ? "" : field.substr(first, last - first + 1);
    const std::size_t digits_from = (!field.empty() && field[0] == '-') ? 1 : 0;
    if (field.size() == digits_from
        || field.find_first_not_of("0123456789", digits_from) != std::string::npos)
        throw Failure{ExitCode::Usage, "malformed integer '" + field + "'"};
    return BigInt(field, 10);
}

std::vector<BigInt> parse_sequence(const std::string& text)
{
    std::vector<BigInt> out;
    for (const auto& f : split(text, ','))
        out.push_back(parse_integer(f));
    if (out.empty())
        throw Failure{ExitCode::Usage, "empty sequence"};
    return out;
}

MatrixNN parse_matrix(const std::string& text)
{
    std::vector<std::vector<BigInt>> rows;
    for (const auto& r : split(text, ';'))
        rows.push_back(parse_sequence(r));
    if (rows.empty())
        throw Failure{ExitCode::Usage, "empty matrix"};
    return MatrixNN(rows);
}

json decimal_array(std::span<const BigInt> values)
{
    json a = json::array();
    for (const auto& v : values)
        a.push_back(to_decimal(v));
    return a;
}

json matrix_json(const MatrixNN& m)
{
    json rows = json::array();
    for (const auto& r : m.to_rows())
        rows.push_back(decimal_array(r));
    return rows;
}

json minor_json(const std::optional<Minor>& minor)
{
    if (!minor)
        return nullptr;
    return json{{"rows", {minor->row1, minor->row2}},
                {"cols", {minor->col1, minor->col2}},
                {"determinant", to_decimal(minor->determinant)}};
}

json violation_json(const Violation& v)
{
    json j{{"kind", v.kind}, {"lambda", v.lambda}};
    if (v.ell)
        j["ell"] = *v.ell;
    if (v.m)
        j["m"] = *v.m;
    if (v.n)
        j["n"] = *v.n;
    j["counts"] = v.counts;
    j["comparison"] = v.comparison;
    return j;
}

template <class T>
json optional_json(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::string optional_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : ""; }

// Option storage for every subcommand.
struct Options {
    std::string format;
    // count / enumerate / sequence
    unsigned m = 0;
    unsigned n = 0;
    std::string partition;
    std::string engine = "dp";
    std::uint64_t cap = 1'000'000;
    bool full_table = false;
    long long ell = 0;
    std::vector<std::string> checks;
    // verify
    unsigned box_m = 0;
    unsigned box_n = 0;
    unsigned ell_max = 0;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::string what = "all";
    std::optional<unsigned> grid_m_max;
    std::optional<unsigned> grid_n_max;
    unsigned threads = 1;
    bool list_instances = false;
    bool progress = false;
    // tp2
    std::string payload;
    std::string a_text;
    std::string x_text;
    std::string method = "auto";
};

GridRegion make_region(const Options& o)
{
    return GridRegion(o.m, o.n, parse_partition(o.partition));
}

Outcome cmd_count(const Options& o, bool list_paths)
{
    Outcome out;
    const auto region = make_region(o);
    const std::string engine = list_paths ? "enumerate" : o.engine;
    out.parameters = {{"m", o.m}, {"n", o.n}, {"partition", region.removed().to_text()}, {"engine", engine}};
    if (engine == "enumerate")
        out.parameters["cap"] = o.cap;

    PathCount count;
    std::vector<LatticePath> paths;
    if (engine == "dp") {
        count = count_dp(region, o.full_table ? DpMemory::FullTable : DpMemory::Rolling);
    } else if (engine == "recursive") {
        count = count_recursive(region);
    } else {
        paths = enumerate_paths(region, o.cap);
        count = static_cast<unsigned long>(paths.size());
    }
    out.results["count"] = to_decimal(count);

    if (list_paths) {
        json listed = json::array();
        out.csv.push_back({"index", "path"});
        for (std::size_t i = 0; i < paths.size(); ++i) {
            listed.push_back(to_string(paths[i]));
            out.csv.push_back({std::to_string(i), to_string(paths[i])});
        }
        out.results["paths"] = std::move(listed);
    } else {
        out.csv.push_back({"m", "n", "partition", "engine", "count"});
        out.csv.push_back({std::to_string(o.m), std::to_string(o.n), region.removed().to_text(), engine,
                           to_decimal(count)});
    }
    return out;
}

Outcome cmd_sequence(const Options& o)
{
    if (o.ell < 0)
        throw Failure{ExitCode::Domain, "ell must be nonnegative, got " + std::to_string(o.ell)};
    const auto lambda = parse_partition(o.partition);
    const auto ell = static_cast<unsigned>(o.ell);
    bool want_lc = false;
    bool want_uni = false;
    for (const auto& c : o.checks) {
        if (c == "log-concave")
            want_lc = true;
        else if (c == "unimodal")
            want_uni = true;
        else
            throw Failure{ExitCode::Usage, "unknown check '" + c + "' (expected log-concave or unimodal)"};
    }

    Outcome out;
    json checks = json::array();
    if (want_lc)
        checks.push_back("log-concave");
    if (want_uni)
        checks.push_back("unimodal");
    out.parameters = {{"partition", lambda.to_text()}, {"ell", ell}, {"checks", checks}};

    const auto seq = simion_sequence(lambda, ell);
    const auto values = to_decimal(seq.values);
    const auto r = static_cast<unsigned>(lambda.length());
    json grids = json::array();
    out.csv.push_back({"i", "m", "n", "value"});
    for (unsigned i = 0; i <= ell; ++i) {
        grids.push_back({r + i, lambda.width() + ell - i});
        out.csv.push_back({std::to_string(i), std::to_string(r + i), std::to_string(lambda.width() + ell - i),
                           values[i]});
    }
    out.results["values"] = values;
    out.results["grids"] = std::move(grids);

    json verdicts = json::object();
    if (want_lc) {
        const auto bad = log_concavity_violation(seq.values);
        verdicts["log-concave"] = !bad;
        if (bad)
            out.violations.push_back({{"kind", "theorem-log-concave"},
                                      {"lambda", lambda.to_text()},
                                      {"ell", ell},
                                      {"index", *bad},
                                      {"counts", values},
                                      {"comparison", "x[i-1]*x[i+1] > x[i]^2 at i=" + std::to_string(*bad)}});
    }
    if (want_uni) {
        const auto bad = unimodality_violation(seq.values);
        verdicts["unimodal"] = !bad;
        if (bad)
            out.violations.push_back({{"kind", "conjecture-unimodal"},
                                      {"lambda", lambda.to_text()},
                                      {"ell", ell},
                                      {"index", *bad},
                                      {"counts", values},
                                      {"comparison", "rise after a strict fall at i=" + std::to_string(*bad)}});
    }
    out.results["verdicts"] = std::move(verdicts);
    return out;
}

Outcome cmd_verify(const Options& o, std::ostream& err)
{
    SweepConfig cfg;
    cfg.box_m = o.box_m;
    cfg.box_n = o.box_n;
    cfg.ell_max = o.ell_max;
    cfg.mode = o.mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
    cfg.what = o.what == "theorem" ? SweepTarget::Theorem : o.what == "chain" ? SweepTarget::Chain : SweepTarget::All;
    cfg.grid_m_max = o.grid_m_max;
    cfg.grid_n_max = o.grid_n_max;
    cfg.threads = o.threads;
    if (cfg.mode == SweepMode::Random) {
        if (!o.seed || !o.samples)
            throw Failure{ExitCode::Usage, "--mode random requires --seed and --samples"};
        cfg.seed = *o.seed;
        cfg.samples = *o.samples;
    }
    if (o.progress)
        cfg.progress = [&err](std::size_t done, std::size_t total) {
            err << "progress " << done << "/" << total << "\n";
        };

    Outcome out;
    out.parameters = {{"box_m", cfg.box_m}, {"box_n", cfg.box_n}, {"ell_max", cfg.ell_max},
                      {"mode", o.mode},     {"what", o.what}};
    if (cfg.mode == SweepMode::Exhaustive) {
        out.parameters["grid_m_max"] = cfg.effective_grid_m_max();
        out.parameters["grid_n_max"] = cfg.effective_grid_n_max();
    } else {
        out.parameters["seed"] = cfg.seed;
        out.parameters["samples"] = cfg.samples;
    }

    const auto report = sweep(cfg);
    out.results["totals"] = {{"partitions", report.partitions},
                             {"sequences_checked", report.sequences_checked},
                             {"inequalities_checked", report.inequalities_checked},
                             {"chains_checked", report.chains_checked},
                             {"skipped_out_of_domain", report.skipped_out_of_domain},
                             {"violations", report.violations.size()}};

    json instances = json::array();
    out.csv.push_back({"kind", "lambda", "ell", "m", "n", "values", "ok"});
    for (const auto& inst : report.instances) {
        out.csv.push_back({inst.kind, inst.lambda, optional_text(inst.ell), optional_text(inst.m),
                           optional_text(inst.n), join(inst.values, ';'), inst.ok ? "true" : "false"});
        if (o.list_instances)
            instances.push_back({{"kind", inst.kind},
                                 {"lambda", inst.lambda},
                                 {"ell", optional_json(inst.ell)},
                                 {"m", optional_json(inst.m)},
                                 {"n", optional_json(inst.n)},
                                 {"values", inst.values},
                                 {"ok", inst.ok}});
    }
    if (o.list_instances)
        out.results["instances"] = std::move(instances);
    for (const auto& v : report.violations)
        out.violations.push_back(violation_json(v));
    return out;
}

Tp2Method parse_method(const std::string& s)
{
    if (s == "all-minors")
        return Tp2Method::AllMinors;
    if (s == "verified")
        return Tp2Method::Verified;
    return Tp2Method::Auto;
}

Outcome cmd_tp2_check(const Options& o)
{
    Outcome out;
    const auto m = parse_matrix(o.payload);
    out.parameters = {{"matrix", o.payload}, {"method", o.method}};
    const auto witness = find_negative_minor(m, parse_method(o.method));
    out.results = {{"rows", m.rows()}, {"cols", m.cols()}, {"tp2", !witness}, {"witness", minor_json(witness)}};
    out.csv = {{"key", "value"}, {"tp2", witness ? "false" : "true"}};
    if (witness)
        out.csv.push_back({"witness", "rows " + std::to_string(witness->row1) + "," + std::to_string(witness->row2)
                                          + " cols " + std::to_string(witness->col1) + ","
                                          + std::to_string(witness->col2) + " det "
                                          + to_decimal(witness->determinant)});
    return out;
}

Outcome cmd_tp2_lift(const Options& o)
{
    Outcome out;
    const auto x = parse_sequence(o.payload);
    out.parameters = {{"sequence", o.payload}};
    const auto lifted = two_row_lift(x);
    const auto witness = find_negative_minor(lifted, parse_method(o.method));
    const auto lc_bad = log_concavity_violation(x);
    out.results = {{"sequence", decimal_array(x)},
                   {"matrix", matrix_json(lifted)},
                   {"tp2", !witness},
                   {"witness", minor_json(witness)},
                   {"log_concave", !lc_bad}};
    if (witness.has_value() != lc_bad.has_value())
        out.violations.push_back({{"kind", "lift-characterization"},
                                  {"comparison", "log-concavity and TP2 of the lift disagree"}});
    out.csv = {{"key", "value"}, {"tp2", witness ? "false" : "true"}, {"log_concave", lc_bad ? "false" : "true"}};
    return out;
}

std::string ratio_text(const std::vector<BigInt>& a, const std::vector<BigInt>& x, std::size_t i)
{
    return to_decimal(a[i]) + "*" + to_decimal(x[i + 1]) + " > " + to_decimal(a[i + 1]) + "*" + to_decimal(x[i]);
}

Outcome cmd_tp2_corollary_i(const Options& o)
{
    Outcome out;
    const SequencePair pair(parse_sequence(o.a_text), parse_sequence(o.x_text));
    out.parameters = {{"a", o.a_text}, {"x", o.x_text}};
    const auto hyp = ratio_dominance_violation(pair);
    const auto concl = partial_sum_dominance_violation(pair);
    json hyp_failure = nullptr;
    json concl_failure = nullptr;
    if (hyp)
        hyp_failure = {{"index", *hyp}, {"comparison", ratio_text(pair.a(), pair.x(), *hyp)}};
    if (concl)
        concl_failure = {{"index", *concl}, {"comparison", ratio_text(pair.a_sums(), pair.x_sums(), *concl)}};
    out.results = {{"a", decimal_array(pair.a())},
                   {"x", decimal_array(pair.x())},
                   {"A", decimal_array(pair.a_sums())},
                   {"X", decimal_array(pair.x_sums())},
                   {"hypothesis_holds", !hyp},
                   {"hypothesis_failure", hyp_failure},
                   {"conclusion_holds", !concl},
                   {"conclusion_failure", concl_failure}};
    out.csv = {{"key", "value"}, {"hypothesis_holds", hyp ? "false" : "true"}, {"conclusion_holds", concl ? "false" : "true"}};
    if (hyp) {
        out.code = ExitCode::Precondition;
        out.diagnostic = "precondition fails at i=" + std::to_string(*hyp) + ": " + ratio_text(pair.a(), pair.x(), *hyp);
    } else if (concl) {
        out.violations.push_back({{"kind", "corollary-i"},
                                  {"index", *concl},
                                  {"comparison", "A[m]*X[m+1] > A[m+1]*X[m]: "
                                                     + ratio_text(pair.a_sums(), pair.x_sums(), *concl)}});
    }
    return out;
}

Outcome cmd_tp2_corollary_ii(const Options& o)
{
    Outcome out;
    const auto x = parse_sequence(o.payload);
    out.parameters = {{"sequence", o.payload}};
    const auto sums = partial_sums(x);
    const auto in_bad = log_concavity_violation(x);
    const auto out_bad = log_concavity_violation(sums);
    out.results = {{"sequence", decimal_array(x)},
                   {"partial_sums", decimal_array(sums)},
                   {"input_log_concave", !in_bad},
                   {"input_failure_index", optional_json(in_bad)},
                   {"partial_sums_log_concave", !out_bad}};
    out.csv = {{"key", "value"},
               {"input_log_concave", in_bad ? "false" : "true"},
               {"partial_sums_log_concave", out_bad ? "false" : "true"}};
    if (in_bad) {
        const auto i = *in_bad;
        out.code = ExitCode::Precondition;
        out.diagnostic = "precondition fails at i=" + std::to_string(i) + ": " + to_decimal(x[i - 1]) + "*"
                         + to_decimal(x[i + 1]) + " > " + to_decimal(x[i]) + "^2";
    } else if (out_bad) {
        out.violations.push_back({{"kind", "corollary-ii"},
                                  {"index", *out_bad},
                                  {"comparison", "partial sums are not log-concave"}});
    }
    return out;
}

void emit(const std::string& command, Outcome& outcome, const std::string& format, std::ostream& out)
{
    if (format == "csv") {
        for (const auto& row : outcome.csv) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << "\n";
        }
        return;
    }
    json envelope{{"schema_version", schema_version},
                  {"command", command},
                  {"parameters", std::move(outcome.parameters)},
                  {"results", std::move(outcome.results)},
                  {"violations", std::move(outcome.violations)}};
    out << envelope.dump(2) << "\n";
}

} // namespace

Environment Environment::from_process()
{
    Environment env;
    if (const char* v = std::getenv(format_env_var))
        env.default_format = v;
    return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env)
{
    Options o;
    CLI::App app{"Exact lattice path counts in a rectangle with a Ferrers diagram removed, and "
                 "log-concavity checks on them",
                 "ferrers"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format (default from " + std::string(format_env_var) + ", else json)")
        ->check(CLI::IsMember({"json", "csv"}));

    auto add_grid = [&o](CLI::App* sub) {
        sub->add_option("--m", o.m, "Rows of the rectangle")->required();
        sub->add_option("--n", o.n, "Columns of the rectangle")->required();
        sub->add_option("--partition", o.partition, "Removed partition, e.g. \"3,1\"; empty for none");
    };

    auto* count = app.add_subcommand("count", "Count admissible paths N(m,n,lambda)");
    add_grid(count);
    count->add_option("--engine", o.engine, "Counting engine")->check(CLI::IsMember({"dp", "recursive", "enumerate"}));
    count->add_option("--cap", o.cap, "Largest C(m+n,n) the enumerate engine accepts");
    count->add_flag("--full-table", o.full_table, "dp engine keeps the full vertex table");

    auto* enumerate = app.add_subcommand("enumerate", "List every admissible path");
    add_grid(enumerate);
    enumerate->add_option("--cap", o.cap, "Largest C(m+n,n) accepted");

    auto* sequence = app.add_subcommand("sequence", "Anti-diagonal sequence N(r+i, w+ell-i, lambda)");
    sequence->add_option("--partition", o.partition, "Partition, e.g. \"3,1\"");
    sequence->add_option("--ell", o.ell, "Sequence length minus one")->required();
    sequence->add_option("--checks", o.checks, "Comma list of log-concave, unimodal")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "Sweep the log-concavity theorem and inequality chain");
    verify->add_option("--box-m", o.box_m, "Maximum number of parts");
    verify->add_option("--box-n", o.box_n, "Maximum part size");
    verify->add_option("--ell-max", o.ell_max, "Largest ell checked");
    verify->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--seed", o.seed, "Random mode seed");
    verify->add_option("--samples", o.samples, "Random mode sample count");
    verify->add_option("--what", o.what)->check(CLI::IsMember({"theorem", "chain", "all"}));
    verify->add_option("--grid-m-max", o.grid_m_max, "Exhaustive chain grid rows bound (default box-m + ell-max)");
    verify->add_option("--grid-n-max", o.grid_n_max, "Exhaustive chain grid columns bound (default box-n + ell-max)");
    verify->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--list-instances", o.list_instances, "Include every instance in the JSON results");
    verify->add_flag("--progress", o.progress, "Report progress on stderr");

    auto* tp2 = app.add_subcommand("tp2", "Order-2 total positivity utilities");
    tp2->require_subcommand(1);
    auto* check_matrix = tp2->add_subcommand("check-matrix", "Check every order-2 minor");
    check_matrix->add_option("matrix", o.payload, "Rows separated by ';', entries by ','")->required();
    check_matrix->add_option("--method", o.method)->check(CLI::IsMember({"auto", "all-minors", "verified"}));
    auto* lift = tp2->add_subcommand("lift-sequence", "Two-row lift of a positive sequence");
    lift->add_option("sequence", o.payload)->required();
    auto* cor_i = tp2->add_subcommand("corollary-i", "Ratio dominance implies partial-sum dominance");
    cor_i->add_option("--a", o.a_text, "Nonnegative sequence")->required();
    cor_i->add_option("--x", o.x_text, "Positive sequence")->required();
    auto* cor_ii = tp2->add_subcommand("corollary-ii", "Partial sums of a log-concave sequence");
    cor_ii->add_option("sequence", o.payload)->required();

    std::vector<std::string> argv_storage{"ferrers"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return static_cast<int>(ExitCode::Usage);
    }

    std::string format = !o.format.empty() ? o.format : env.default_format.value_or("json");
    if (format != "json" && format != "csv") {
        err << "error: " << format_env_var << " must be json or csv, got '" << format << "'\n";
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        std::string command;
        Outcome outcome;
        if (count->parsed()) {
            command = "count";
            outcome = cmd_count(o, false);
        } else if (enumerate->parsed()) {
            command = "enumerate";
            outcome = cmd_count(o, true);
        } else if (sequence->parsed()) {
            command = "sequence";
            outcome = cmd_sequence(o);
        } else if (verify->parsed()) {
            command = "verify";
            outcome = cmd_verify(o, err);
        } else if (check_matrix->parsed()) {
            command = "tp2 check-matrix";
            outcome = cmd_tp2_check(o);
        } else if (lift->parsed()) {
            command = "tp2 lift-sequence";
            outcome = cmd_tp2_lift(o);
        } else if (cor_i->parsed()) {
            command = "tp2 corollary-i";
            outcome = cmd_tp2_corollary_i(o);
        } else {
            command = "tp2 corollary-ii";
            outcome = cmd_tp2_corollary_ii(o);
        }
        if (outcome.code == ExitCode::Ok && !outcome.violations.empty())
            outcome.code = ExitCode::Violation;
        const auto code = outcome.code;
        if (!outcome.diagnostic.empty())
            err << "error: " << outcome.diagnostic << "\n";
        emit(command, outcome, format, out);
        return static_cast<int>(code);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return static_cast<int>(f.code);
    } catch (const InvalidPartition& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    } catch (const InvalidMatrix& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    } catch (const OutOfDomain& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Domain);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::CapExceeded);
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Precondition);
    }
}

} // namespace ferrers::cli
