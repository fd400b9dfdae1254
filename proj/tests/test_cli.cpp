#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "starcolor/cli.hpp"
#include "starcolor/constructions.hpp"
#include "starcolor/io.hpp"
#include "support.hpp"

using namespace starcolor;
namespace fs = std::filesystem;
namespace t = starcolor::testing;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("starcolor_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenColorVerifyPipeline) {
    const CliRun gen = cli({"gen", "--family", "figure5"});
    ASSERT_EQ(gen.code, 0);
    const std::string gpath = write("f5.json", gen.out);
    const CliRun color = cli({"color", "--delta", "6"}, gen.out);
    ASSERT_EQ(color.code, 0) << color.err;
    const json j = json::parse(color.out);
    EXPECT_TRUE(j["report"]["valid"].get<bool>());
    EXPECT_LE(j["report"]["colors_used"].get<int>(), 10);
    const CliRun verify = cli({"verify", gpath, "-"}, color.out);
    EXPECT_EQ(verify.code, 0) << verify.err;
}

TEST_F(CliTest, PipelineOverFamilies) {
    const std::vector<std::vector<std::string>> fams{{"--family", "cycle", "--n", "11"},
                                                     {"--family", "tree", "--delta", "5", "--height", "3"},
                                                     {"--family", "tight-odd", "--delta", "5"},
                                                     {"--family", "random", "--seed", "4", "--blocks", "60", "--delta-cap", "7"}};
    for (auto f : fams) {
        f.insert(f.begin(), "gen");
        const CliRun gen = cli(f);
        ASSERT_EQ(gen.code, 0);
        const std::string gpath = write("g.json", gen.out);
        for (const char* mode : {"cactus", "ucc"}) {
            const CliRun color = cli({"color", "--mode", mode, gpath});
            if (std::string(mode) == "ucc" && color.code == 2) continue;  // not a UCC
            ASSERT_EQ(color.code, 0) << color.err;
            EXPECT_EQ(cli({"verify", gpath}, color.out).code, 0);
        }
    }
}

TEST_F(CliTest, UccModeOnUnicyclic) {
    const std::string gpath = write("u.json", graph_to_json(t::semiregular_ucc(5, 8)).dump());
    const CliRun r = cli({"color", "--mode", "ucc", gpath});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_LE(json::parse(r.out)["report"]["colors_used"].get<int>(), 8);
    const std::string two = write("b.json", graph_to_json(t::two_block_cactus(3, 3)).dump());
    EXPECT_EQ(cli({"color", "--mode", "ucc", two}).code, 2);
}

TEST_F(CliTest, VerifyReportsViolation) {
    const std::string gpath = write("p.json", graph_to_json(t::path_graph(4)).dump());
    const CliRun r = cli({"verify", gpath}, R"({"palette": 2, "colors": [1, 2, 1, 2]})");
    EXPECT_EQ(r.code, 1);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["violation"]["kind"], "bicolored_segment");
    EXPECT_EQ(j["violation"]["edges"], json({0, 1, 2, 3}));
    EXPECT_EQ(cli({"verify", gpath}, R"({"palette": 3, "colors": [1, null, -1, 2]})").code, 0);
}

TEST_F(CliTest, ExactExitCodes) {
    const std::string gpath = write("t.json", cli({"gen", "--family", "tight-odd", "--delta", "3"}).out);
    const CliRun no = cli({"exact", "--k", "4", gpath});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(json::parse(no.out)["verdict"], "No");
    const CliRun yes = cli({"exact", "--k", "5", gpath});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(cli({"verify", gpath}, json::parse(yes.out)["witness"].dump()).code, 0);
    const CliRun idx = cli({"--threads", "2", "exact", gpath});
    EXPECT_EQ(json::parse(idx.out)["index"], 5);
    const std::string f5 = write("f5.json", cli({"gen", "--family", "figure5"}).out);
    EXPECT_EQ(cli({"exact", "--k", "9", "--budget-nodes", "1", f5}).code, 3);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"gen", "--family", "hypercube"}).code, 2);
    const CliRun bad = cli({"color"}, "{\"vertices\": 3, \"edges\": [[0,1],");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("byte"), std::string::npos);
    const std::string k5 = write("k.json", graph_to_json(t::star_graph(5)).dump());
    EXPECT_EQ(cli({"color", "--delta", "3", k5}).code, 2);
    EXPECT_EQ(cli({"color", "/nonexistent/graph.json"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, OutputIsDeterministic) {
    const std::vector<std::string> gen{"gen", "--family", "random", "--seed", "42", "--blocks", "80"};
    EXPECT_EQ(cli(gen).out, cli(gen).out);
    const std::string g = cli(gen).out;
    EXPECT_EQ(cli({"color"}, g).out, cli({"color"}, g).out);
}

TEST_F(CliTest, DotOutputs) {
    const CliRun gen = cli({"gen", "--family", "cycle", "--n", "5", "--format", "dot"});
    EXPECT_EQ(gen.out.rfind("graph G {", 0), 0u);
    const std::string gpath = write("c.json", graph_to_json(t::cycle_graph(5)).dump());
    const std::string dot = (dir_ / "c.dot").string();
    ASSERT_EQ(cli({"color", "--dot", dot, gpath}).code, 0);
    std::stringstream ss;
    ss << std::ifstream(dot).rdbuf();
    EXPECT_NE(ss.str().find("label=\"4\""), std::string::npos);
}

TEST_F(CliTest, AuditAndBlocks) {
    const CliRun a = cli({"audit", "--delta", "3", "--budget-secs", "60"});
    EXPECT_EQ(a.code, 0);
    const json j = json::parse(a.out);
    EXPECT_EQ(j["counterexample_count"], 0);
    EXPECT_TRUE(j["complete"].get<bool>());

    const CliRun b = cli({"blocks"}, graph_to_json(t::two_block_cactus(3, 4)).dump());
    ASSERT_EQ(b.code, 0);
    const json bj = json::parse(b.out);
    EXPECT_EQ(bj["blocks"].size(), 2u);
    EXPECT_EQ(bj["sigma"], json({0, 1}));
}

TEST_F(CliTest, BenchCsv) {
    const fs::path corpus = dir_ / "corpus";
    fs::create_directories(corpus);
    std::ofstream(corpus / "a.json") << graph_to_json(t::cycle_graph(7)).dump();
    std::ofstream(corpus / "b.json") << graph_to_json(gen_figure5()).dump();
    std::ofstream(corpus / "notes.txt") << "ignored";
    const CliRun r = cli({"bench", "--corpus", corpus.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "file,edges,delta,colors_used,bound,valid,runtime_ms");
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("a.json,7,2,", 0), 0u);
    std::getline(lines, line);
    EXPECT_EQ(line.rfind("b.json,89,6,", 0), 0u);
    EXPECT_NE(line.find(",10,true,"), std::string::npos);
}
