#include "doctest.h"

#include "ferrers/cli.hpp"

#include "json.hpp"

#include <sstream>

using ferrers::cli::ExitCode;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json envelope() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, ferrers::cli::Environment env = {})
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = ferrers::cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
}

int code(ExitCode c) { return static_cast<int>(c); }

} // namespace

TEST_CASE("count")
{
    auto r = run({"count", "--m", "2", "--n", "2", "--partition", "1"});
    REQUIRE(r.code == 0);
    const auto e = r.envelope();
    CHECK(e["results"]["count"] == "5");
    CHECK(e["schema_version"] == "1.0");
    CHECK(e["command"] == "count");
    CHECK(e["violations"].empty());

    CHECK(run({"count", "--m", "3", "--n", "3", "--partition", ""}).envelope()["results"]["count"] == "20");
    for (auto engine : {"dp", "recursive", "enumerate"})
        CHECK(run({"count", "--m", "2", "--n", "2", "--partition", "2,1", "--engine", engine})
                  .envelope()["results"]["count"]
              == "2");
    CHECK(run({"count", "--m", "4", "--n", "4", "--partition", "2,1", "--full-table"}).envelope()["results"]["count"]
          == run({"count", "--m", "4", "--n", "4", "--partition", "2,1"}).envelope()["results"]["count"]);
}

TEST_CASE("count keys are emitted in envelope order")
{
    const auto out = run({"count", "--m", "1", "--n", "1"}).out;
    const auto pos = [&](const char* key) { return out.find(std::string("\"") + key + "\""); };
    CHECK(pos("schema_version") < pos("command"));
    CHECK(pos("command") < pos("parameters"));
    CHECK(pos("parameters") < pos("results"));
    CHECK(pos("results") < pos("violations"));
}

TEST_CASE("count error codes")
{
    auto r = run({"count", "--m", "1", "--n", "1", "--partition", "2"});
    CHECK(r.code == code(ExitCode::Domain));
    CHECK(r.out.empty());
    CHECK(r.err.find("does not fit") != std::string::npos);

    CHECK(run({"count", "--m", "1", "--n", "1", "--partition", "1,2"}).code == code(ExitCode::Usage));
    CHECK(run({"count", "--m", "1", "--n", "1", "--partition", "x"}).code == code(ExitCode::Usage));
    CHECK(run({"count", "--m", "20", "--n", "20", "--engine", "enumerate"}).code == code(ExitCode::CapExceeded));
    CHECK(run({"count", "--n", "2"}).code == code(ExitCode::Usage));
    CHECK(run({}).code == code(ExitCode::Usage));
}

TEST_CASE("enumerate lists paths")
{
    auto r = run({"enumerate", "--m", "1", "--n", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.envelope()["results"]["paths"] == json::array({"RU", "UR"}));
    CHECK(r.envelope()["results"]["count"] == "2");
    CHECK(run({"enumerate", "--m", "1", "--n", "1", "--partition", "1"}).envelope()["results"]["paths"]
          == json::array({"RU"}));
    CHECK(run({"enumerate", "--m", "3", "--n", "3", "--cap", "10"}).code == code(ExitCode::CapExceeded));
}

TEST_CASE("sequence")
{
    auto r = run({"sequence", "--partition", "1", "--ell", "2", "--checks", "log-concave,unimodal"});
    REQUIRE(r.code == 0);
    auto e = r.envelope();
    CHECK(e["results"]["values"] == json::array({"3", "5", "3"}));
    CHECK(e["results"]["verdicts"]["log-concave"] == true);
    CHECK(e["results"]["verdicts"]["unimodal"] == true);
    CHECK(e["results"]["grids"] == json::array({{1, 3}, {2, 2}, {3, 1}}));

    e = run({"sequence", "--partition", "", "--ell", "3"}).envelope();
    CHECK(e["results"]["values"] == json::array({"1", "3", "3", "1"}));
    CHECK(e["results"]["verdicts"].empty());

    CHECK(run({"sequence", "--partition", "1", "--ell", "-1"}).code == code(ExitCode::Domain));
    CHECK(run({"sequence", "--partition", "1", "--ell", "2", "--checks", "convex"}).code == code(ExitCode::Usage));
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--box-m", "4", "--box-n", "4", "--ell-max", "4", "--mode", "exhaustive", "--what", "all"});
    REQUIRE(r.code == 0);
    const auto e = r.envelope();
    CHECK(e["violations"].empty());
    CHECK(e["results"]["totals"]["partitions"] == 70);
    CHECK(e["results"]["totals"]["sequences_checked"] == 70 * 5);
    CHECK(e["parameters"]["grid_m_max"] == 8);
    CHECK_FALSE(e["results"].contains("instances"));

    auto rnd = run({"verify", "--mode", "random", "--seed", "7", "--samples", "50", "--box-m", "15", "--box-n", "15",
                    "--ell-max", "6"});
    REQUIRE(rnd.code == 0);
    auto again = run({"verify", "--mode", "random", "--seed", "7", "--samples", "50", "--box-m", "15", "--box-n", "15",
                      "--ell-max", "6", "--threads", "3"});
    CHECK(rnd.out == again.out);

    CHECK(run({"verify", "--box-m", "-1"}).code == code(ExitCode::Usage));
    CHECK(run({"verify", "--mode", "random", "--samples", "3"}).code == code(ExitCode::Usage));
    CHECK(run({"verify", "--mode", "sideways"}).code == code(ExitCode::Usage));
}

TEST_CASE("verify instances and progress")
{
    auto r = run({"verify", "--box-m", "1", "--box-n", "1", "--ell-max", "1", "--list-instances", "--progress"});
    REQUIRE(r.code == 0);
    const auto inst = r.envelope()["results"]["instances"];
    CHECK(inst.size() > 0);
    CHECK(inst[0]["kind"] == "sequence");
    CHECK(r.err.find("progress 2/2") != std::string::npos);
    CHECK(r.out.find("progress") == std::string::npos);
}

TEST_CASE("csv output via flag and environment")
{
    ferrers::cli::Environment csv_env{"csv"};
    auto r = run({"count", "--m", "2", "--n", "2", "--partition", "1"}, csv_env);
    CHECK(r.out == "m,n,partition,engine,count\n2,2,1,dp,5\n");
    // flag beats environment
    r = run({"--format", "json", "count", "--m", "2", "--n", "2"}, csv_env);
    CHECK(r.envelope()["results"]["count"] == "6");
    r = run({"count", "--m", "2", "--n", "2", "--partition", "2,1", "--format", "csv"});
    CHECK(r.out == "m,n,partition,engine,count\n2,2,\"2,1\",dp,2\n");

    r = run({"verify", "--box-m", "1", "--box-n", "1", "--ell-max", "0", "--what", "theorem", "--format", "csv"});
    CHECK(r.out == "kind,lambda,ell,m,n,values,ok\nsequence,,0,,,1,true\nsequence,1,0,,,1,true\n");

    CHECK(run({"count", "--m", "1", "--n", "1"}, ferrers::cli::Environment{"xml"}).code == code(ExitCode::Usage));
}

TEST_CASE("tp2 subcommands")
{
    auto r = run({"tp2", "check-matrix", "1,2;1,3"});
    REQUIRE(r.code == 0);
    CHECK(r.envelope()["results"]["tp2"] == true);
    CHECK(r.envelope()["results"]["witness"].is_null());

    r = run({"tp2", "check-matrix", "1,2;3,1", "--method", "all-minors"});
    REQUIRE(r.code == 0);
    CHECK(r.envelope()["results"]["tp2"] == false);
    CHECK(r.envelope()["results"]["witness"]["determinant"] == "-5");

    r = run({"tp2", "lift-sequence", "3,5,3"});
    REQUIRE(r.code == 0);
    CHECK(r.envelope()["results"]["matrix"] == json::array({{"3", "5", "3"}, {"0", "3", "5"}}));
    CHECK(r.envelope()["results"]["tp2"] == true);

    r = run({"tp2", "corollary-i", "--a", "2,1", "--x", "1,1"});
    CHECK(r.code == code(ExitCode::Precondition));
    CHECK(r.err.find("i=0") != std::string::npos);
    CHECK(r.envelope()["results"]["hypothesis_failure"]["index"] == 0);

    r = run({"tp2", "corollary-i", "--a", "1,2", "--x", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.envelope()["results"]["conclusion_holds"] == true);

    r = run({"tp2", "corollary-ii", "1,2,1"});
    CHECK(r.code == 0);
    CHECK(r.envelope()["results"]["partial_sums"] == json::array({"1", "3", "4"}));
    r = run({"tp2", "corollary-ii", "1,2,5"});
    CHECK(r.code == code(ExitCode::Precondition));
    CHECK(r.envelope()["results"]["input_failure_index"] == 1);

    CHECK(run({"tp2", "check-matrix", "1,2;1"}).code == code(ExitCode::Usage));
    CHECK(run({"tp2", "check-matrix", "1,-2;1,1"}).code == code(ExitCode::Usage));
    CHECK(run({"tp2", "check-matrix", "1,a"}).code == code(ExitCode::Usage));
    CHECK(run({"tp2", "lift-sequence", "1,0"}).code == code(ExitCode::Precondition));
    CHECK(run({"tp2"}).code == code(ExitCode::Usage));
}

TEST_CASE("big integers survive the payload round trip")
{
    auto r = run({"tp2", "lift-sequence", "123456789012345678901234567890,1"});
    REQUIRE(r.code == 0);
    CHECK(r.envelope()["results"]["sequence"][0] == "123456789012345678901234567890");
}
