// Runs the built command-line tool on files in a scratch directory.

#include "kposet/io.hpp"
#include "support.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace kposet;
using namespace kposet::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("kposet_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        write("left.json", serialize_poset(figure_left_chain()));
        write("right.json", serialize_poset(figure_right_chain()));
        write("product.json", serialize_poset(figure_product()));
        write("c010.json", serialize_poset(chain({0, 1, 0}, "a")));
        write("c101.json", serialize_poset(chain({1, 0, 1}, "b")));
        write("up.json", serialize_poset(chain({0, 1}, "u")));
        write("bounded.json",
            serialize_poset(poset(3, {{"lo", 0}, {"x", 1}, {"hi", 2}}, {{"lo", "x"}, {"x", "hi"}})));
        write("graph.json", serialize_digraph(figure_graph()));
        write("loop.json", serialize_digraph(digraph({"a"}, {{"a", "a"}})));
        write("broken.json", "{\"k\": 2, \"elements\": [");
    }

    void TearDown() override { fs::remove_all(dir_); }

    void write(const std::string & name, const std::string & text) { std::ofstream(dir_ / name) << text; }

    auto path(const std::string & name) const -> std::string { return (dir_ / name).string(); }

    auto run(const std::string & args, const std::string & env = "") const -> Outcome
    {
        std::string command = env + " " + KPOSET_CLI_PATH + " " + args + " 2>/dev/null";
        Outcome result;
        auto * pipe = ::popen(command.c_str(), "r");
        if (pipe == nullptr)
            return result;
        char buffer[4096];
        std::size_t n;
        while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
            result.out.append(buffer, n);
        auto status = ::pclose(pipe);
        result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return result;
    }

    auto run_json(const std::string & args) const -> nlohmann::json
    {
        auto r = run(args);
        return nlohmann::json::parse(r.out);
    }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, Validate)
{
    auto r = run("validate " + path("left.json"));
    EXPECT_EQ(r.status, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["is_chain"], true);
    EXPECT_EQ(doc["is_lattice"], true);
    EXPECT_EQ(run("validate " + path("broken.json")).status, 2);
    EXPECT_EQ(run("validate " + path("missing.json")).status, 2);
}

TEST_F(Cli, HomExitCodes)
{
    EXPECT_EQ(run("hom " + path("product.json") + " " + path("left.json")).status, 0);
    EXPECT_EQ(run("hom " + path("c010.json") + " " + path("c101.json")).status, 1);
    auto doc = run_json("hom --witness " + path("product.json") + " " + path("right.json"));
    EXPECT_EQ(doc["exists"], true);
    EXPECT_EQ(doc["witness"]["t"], "f4");
    EXPECT_EQ(run("hom --oracle " + path("up.json") + " " + path("left.json")).status, 0);
    EXPECT_EQ(run("hom " + path("up.json")).status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(Cli, BudgetFromFlagAndEnvironment)
{
    auto args = "meet " + path("left.json") + " " + path("right.json");
    EXPECT_EQ(run(args).status, 0);
    EXPECT_EQ(run(args + " --budget 4").status, 2);
    EXPECT_EQ(run(args, "KPOSET_BUDGET=4").status, 2);
    EXPECT_EQ(run(args, "KPOSET_BUDGET=5").status, 0);
    EXPECT_EQ(run("hom --oracle --budget 3 " + path("left.json") + " " + path("right.json")).status, 2);
}

TEST_F(Cli, CompareAndEquiv)
{
    EXPECT_EQ(run_json("compare " + path("up.json") + " " + path("c010.json"))["verdict"], "strictly-less");
    EXPECT_EQ(run("equiv " + path("up.json") + " " + path("c010.json")).status, 1);
    EXPECT_EQ(run("equiv " + path("left.json") + " " + path("left.json")).status, 0);
}

TEST_F(Cli, CoreAndIsCore)
{
    write("double.json", run("join " + path("c010.json") + " " + path("c010.json")).out);
    EXPECT_EQ(run("is-core " + path("double.json")).status, 1);
    EXPECT_EQ(run("is-core " + path("c010.json")).status, 0);
    auto core = parse_poset(run("core " + path("double.json")).out);
    EXPECT_TRUE(is_isomorphic(core, chain({0, 1, 0})));
    auto trace = run_json("core --trace " + path("double.json"));
    ASSERT_TRUE(trace.contains("retractions"));
    ASSERT_FALSE(trace["retractions"].empty());
    EXPECT_EQ(trace["retractions"].front()["from_size"], 6);
    EXPECT_EQ(trace["retractions"].back()["to_size"], 3);
    EXPECT_EQ(trace["core"]["elements"].size(), 3U);
}

TEST_F(Cli, EncodeAndDot)
{
    auto p = parse_poset(run("encode --poset " + path("graph.json")).out);
    EXPECT_EQ(p.size(), 18U);
    EXPECT_EQ(p.covers().size(), 19U);
    auto l = parse_poset(run("encode --lattice " + path("loop.json")).out);
    EXPECT_TRUE(is_isomorphic(l, figure_loop()));
    EXPECT_EQ(run("encode --poset --lattice " + path("graph.json")).status, 2);

    auto dot = run("dot " + path("graph.json"));
    EXPECT_EQ(dot.status, 0);
    EXPECT_EQ(dot.out, export_dot(figure_graph()));
    EXPECT_EQ(run("dot " + path("product.json")).out, export_dot(figure_product()));
    EXPECT_EQ(run("meet " + path("left.json") + " " + path("right.json") + " --format dot").out.rfind("graph hasse", 0),
        0U);
}

TEST_F(Cli, AlgebraCommands)
{
    auto m = parse_poset(run("meet " + path("left.json") + " " + path("right.json")).out);
    EXPECT_TRUE(is_isomorphic(m, figure_product()));
    auto j = parse_poset(run("join " + path("left.json") + " " + path("right.json") + " " + path("up.json")).out);
    EXPECT_EQ(j.size(), 10U);
    auto g = parse_poset(
        run("glue " + path("bounded.json") + " " + path("bounded.json") + " --top-label 2 --bottom-label 0").out);
    EXPECT_EQ(g.size(), 4U);
    EXPECT_EQ(run("glue " + path("bounded.json") + " " + path("up.json") + " --top-label 2 --bottom-label 0").status, 2);
    EXPECT_EQ(run("irreducible " + path("c010.json")).status, 0);
    write("pair.json", run("join " + path("c010.json") + " " + path("c101.json")).out);
    EXPECT_EQ(run("irreducible " + path("pair.json")).status, 1);
    auto laws = run("check-laws " + path("left.json") + " " + path("right.json") + " " + path("up.json"));
    EXPECT_EQ(laws.status, 0);
    EXPECT_EQ(nlohmann::json::parse(laws.out)["laws"].size(), 7U);
}

TEST_F(Cli, ChainCommands)
{
    auto alt = run_json("alt " + path("left.json"));
    EXPECT_EQ(alt["count"], 4);
    EXPECT_EQ(alt["witness"].size(), 4U);
    EXPECT_EQ(run("two-lattice " + path("up.json") + " " + path("c010.json")).status, 0);
    EXPECT_EQ(run("two-lattice " + path("c010.json") + " " + path("c101.json")).status, 1);
    EXPECT_EQ(run("two-lattice " + path("product.json") + " " + path("up.json")).status, 2);
}

TEST_F(Cli, StandardInput)
{
    auto r = run("validate - < " + path("up.json"));
    EXPECT_EQ(r.status, 0);
}
