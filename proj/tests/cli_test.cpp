#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result rnl(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const code = revcount::cli::run(args, out, err, false);
  return {code, out.str(), err.str()};
}

std::string last_line(std::string const& s)
{
  auto t = s;
  while (!t.empty() && t.back() == '\n') {
    t.pop_back();
  }
  return t.substr(t.rfind('\n') + 1);
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("rnl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(std::string const& name) const { return (dir_ / name).string(); }

  std::string synth(std::vector<std::string> args, std::string const& name)
  {
    args.insert(args.begin(), "synth");
    args.push_back("--out");
    args.push_back(path(name));
    auto const r = rnl(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  void write(std::string const& name, std::string const& text)
  {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, synth_prints_cost)
{
  auto const r = rnl({"synth", "--kind", "counter", "--bits", "4", "--mode", "async"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gates 8\nquantum_cost 23\ndelay 23\ngarbage 4\nconstants 11\n");
}

TEST_F(CliTest, synth_writes_file)
{
  auto const file = synth({"--kind", "mstff"}, "ms.rnl");
  ASSERT_TRUE(fs::exists(file));
  auto const r = rnl({"cost", file, "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gates,quantum_cost,delay,garbage,constants\n4,10,10,2,1\n");
}

TEST_F(CliTest, cost_json)
{
  auto const file = synth({"--kind", "counter", "--bits", "4", "--mode", "sync"}, "s4.rnl");
  auto const r = rnl({"cost", file, "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("quantum_cost"), 32);
  EXPECT_EQ(j.at("garbage"), 4);
}

TEST_F(CliTest, synth_usage_errors)
{
  EXPECT_EQ(rnl({"synth", "--kind", "counter", "--bits", "0", "--mode", "async"}).code, 2);
  EXPECT_EQ(rnl({"synth", "--kind", "counter", "--bits", "4"}).code, 2);
  EXPECT_EQ(rnl({"synth", "--kind", "tff", "--bits", "4"}).code, 2);
  EXPECT_EQ(rnl({"synth", "--kind", "jk"}).code, 2);
  EXPECT_EQ(rnl({"synth", "--kind", "counter", "--bits", "4", "--mode", "up"}).code, 2);
  EXPECT_EQ(rnl({}).code, 2);
  EXPECT_EQ(rnl({"frobnicate"}).code, 2);
  EXPECT_EQ(rnl({"--help"}).code, 0);
}

TEST_F(CliTest, malformed_file_is_located_error)
{
  write("bad.rnl", ".rnl 1\n.lines 2\n.input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\ngate XYZ 0 1\n.end\n");
  auto const r = rnl({"cost", path("bad.rnl")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.rnl:7:6:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("unknown gate"), std::string::npos);
  EXPECT_EQ(rnl({"cost", path("missing.rnl")}).code, 2);
}

TEST_F(CliTest, sim_async_counter)
{
  auto const file = synth({"--kind", "counter", "--bits", "4", "--mode", "async"}, "a4.rnl");
  auto const r = rnl({"sim", file, "--pulses", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0000\n1 0001\n2 0010\n3 0011\n4 0100\n5 0101\n");
}

TEST_F(CliTest, sim_trace_and_sync)
{
  auto const a = synth({"--kind", "counter", "--bits", "3", "--mode", "async"}, "a3.rnl");
  auto const r = rnl({"sim", a, "--pulses", "4", "--trace"});
  EXPECT_NE(r.out.find("# fired: 0 1 2\n4 100\n"), std::string::npos) << r.out;

  auto const s = synth({"--kind", "counter", "--bits", "3", "--mode", "sync"}, "s3.rnl");
  EXPECT_EQ(last_line(rnl({"sim", s, "--pulses", "8"}).out), "8 000");
  EXPECT_EQ(last_line(rnl({"sim", s, "--pulses", "5"}).out), "5 101");
}

TEST_F(CliTest, sim_inputs)
{
  auto const file = synth({"--kind", "ctff-a"}, "c.rnl");
  EXPECT_EQ(last_line(rnl({"sim", file, "--pulses", "3", "--set", "T=1"}).out), "3 1");
  EXPECT_EQ(last_line(rnl({"sim", file, "--pulses", "3"}).out), "3 0");
  EXPECT_EQ(rnl({"sim", file, "--pulses", "3", "--set", "X=1"}).code, 2);
  EXPECT_EQ(rnl({"sim", file, "--pulses", "3", "--set", "T=2"}).code, 2);
}

TEST_F(CliTest, sim_rejects_combinational_file)
{
  write("comb.rnl", ".rnl 1\n.lines 2\n.input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\ngate FG 0 1\n.end\n");
  auto const r = rnl({"sim", path("comb.rnl"), "--pulses", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not sequential"), std::string::npos);
}

TEST_F(CliTest, verify_modes)
{
  EXPECT_EQ(rnl({"verify", "--theorems", "--max-bits", "8"}).code, 0);
  EXPECT_EQ(rnl({"verify", "--theorems", "--max-bits", "3"}).code, 2);
  EXPECT_EQ(rnl({"verify", "--gates"}).code, 0);
  EXPECT_EQ(rnl({"verify"}).code, 2);
  EXPECT_EQ(rnl({"verify", "--gates", "--theorems"}).code, 2);

  auto const file = synth({"--kind", "counter", "--bits", "4", "--mode", "sync"}, "s4.rnl");
  auto const ok = rnl({"verify", file, "--exhaustive"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("[PASS] well-formed"), std::string::npos);
  EXPECT_EQ(rnl({"verify", file}).code, 2);

  write("dup.rnl", ".rnl 1\n.lines 2\n.input 0 A\n.input 1 B\n.output 0 A\n.output 1 B\ngate FG 0 0\n.end\n");
  auto const bad = rnl({"verify", path("dup.rnl"), "--exhaustive", "--format", "json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(nlohmann::json::parse(bad.out).at("all_passed"), false);
}

TEST_F(CliTest, report_output)
{
  std::ifstream in(std::string(REVCOUNT_GOLDEN_DIR) + "/tables.txt", std::ios::binary);
  std::ostringstream golden;
  golden << in.rdbuf();
  auto const t = rnl({"report", "--tables"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, golden.str());

  auto const s = rnl({"report", "--scaling", "--max-bits", "4", "--mode", "async"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(last_line(s.out), "async,4,8,23,23,23,4");
  EXPECT_EQ(rnl({"report", "--scaling"}).code, 2);
  EXPECT_EQ(rnl({"report"}).code, 2);
  EXPECT_EQ(rnl({"report", "--tables", "--max-bits", "3"}).code, 2);
}
