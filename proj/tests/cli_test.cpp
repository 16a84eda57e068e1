#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dbseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string lines(const char* listing) {
  std::string s;
  for (const auto& w : oracle::parse_list(listing)) s += dbseq::to_string(w) + "\n";
  return s;
}

}  // namespace

TEST(CliTest, GenerateWords) {
  auto r = run({"generate", "--method", "cycle-join", "--variant", "rpmx", "-n", "3", "-k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, lines(golden::kRpmx33));

  r = run({"generate", "--method", "greedy", "-n", "1", "-k", "2"});
  EXPECT_EQ(r.out, "1\n0\n");

  r = run({"generate", "--method", "shift-rule", "--variant", "rpmn", "-n", "3", "-k", "3"});
  EXPECT_EQ(r.out, lines(golden::kRpmn33));
}

TEST(CliTest, GenerateSymbols) {
  auto r = run({"generate", "--method", "fkm", "-n", "3", "-k", "3", "--format", "symbols"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "000100201101202102211121222\n");
  r = run({"generate", "--method", "cycle-join", "-n", "1", "-k", "12", "--format", "symbols"});
  EXPECT_EQ(r.out, "0,1,2,3,4,5,6,7,8,9,10,11\n");
}

TEST(CliTest, EveryMethodAgreesOnEachVariant) {
  for (const char* variant : {"pmx", "pmn", "rpmx", "rpmn"}) {
    std::string first;
    for (const char* method : {"greedy", "cycle-join", "shift-rule", "fkm"}) {
      auto r = run({"generate", "--method", method, "--variant", variant, "-n", "4", "-k", "3"});
      ASSERT_EQ(r.code, 0) << r.err;
      if (first.empty()) first = r.out;
      ASSERT_EQ(r.out, first) << method << " " << variant;
    }
  }
}

TEST(CliTest, JsonTrace) {
  auto r = run({"generate", "--method", "cycle-join", "-n", "3", "-k", "3", "--format",
                "json-trace"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["k"], 3);
  ASSERT_EQ(j["cycles"].size(), 11u);
  const auto& c5 = j["cycles"][5];
  EXPECT_EQ(c5["key"], "102");
  EXPECT_EQ(c5["first"], "021");
  EXPECT_EQ(c5["last"], "102");
  EXPECT_EQ(c5["anchor"], "002");
  EXPECT_EQ(c5["open_position"], 9);
  EXPECT_EQ(c5["close_position"], 11);
  EXPECT_TRUE(j["cycles"][0]["anchor"].is_null());
  EXPECT_EQ(j["order"].size(), 27u);
  EXPECT_EQ(j["order"][26], "200");

  r = run({"generate", "--method", "fkm", "-n", "3", "-k", "3", "--format", "json-trace"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTest, Stream) {
  auto r = run({"stream", "-n", "1", "--limit", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n1\n2\n3\n4\n");
  r = run({"stream", "-n", "3", "--limit", "27"});
  EXPECT_EQ(r.out, lines(golden::kRpmx33));
  r = run({"stream", "-n", "2", "--limit", "9", "--format", "symbols"});
  EXPECT_EQ(r.out, "011021220\n");
  r = run({"stream", "-n", "1", "--limit", "12", "--format", "symbols"});
  EXPECT_EQ(r.out, "0,1,2,3,4,5,6,7,8,9,10,11\n");
  EXPECT_EQ(run({"stream", "-n", "1", "--limit", "0"}).code, 2);
}

TEST(CliTest, Verify) {
  auto r = run({"verify", "-n", "3", "-k", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS db:fkm:pmn n=3 k=3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS structure:parenthesis n=3 k=3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS onion n=3 k=3"), std::string::npos);
  EXPECT_NE(r.out.find("PASS equal:greedy=fkm n=3 k=3"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run({"verify", "-n", "2", "-k", "2", "--suite", "db", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["name"], "db:greedy:pmx");
  EXPECT_EQ(j[0]["pass"], true);

  EXPECT_EQ(run({"verify", "-n", "0", "-k", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "-n", "3", "-k", "3", "--suite", "bogus"}).code, 2);
}

TEST(CliTest, Compare) {
  auto r = run({"compare", "-n", "3", "-k", "3", "--methods", "greedy,cycle-join,shift-rule,fkm"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "PASS equal:greedy=cycle-join n=3 k=3\n"
            "PASS equal:greedy=shift-rule n=3 k=3\n"
            "PASS equal:greedy=fkm n=3 k=3\n");
  EXPECT_EQ(run({"compare", "-n", "3", "-k", "3", "--methods", "fkm"}).code, 2);
  EXPECT_EQ(run({"compare", "-n", "3", "-k", "3", "--methods", "fkm,fkm"}).code, 2);
  EXPECT_EQ(run({"compare", "-n", "3", "-k", "3", "--methods", "fkm,nope"}).code, 2);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"generate", "-n", "3", "-k", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--method", "nope", "-n", "3", "-k", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--method", "fkm", "--variant", "xyz", "-n", "3", "-k", "3"}).code,
            2);
  EXPECT_EQ(run({"generate", "--method", "fkm", "-n", "3", "-k", "0"}).code, 2);
  EXPECT_EQ(run({"generate", "--method", "fkm", "-n", "three", "-k", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTest, ResourceGuard) {
  auto r = run({"generate", "--method", "fkm", "-n", "30", "-k", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--allow-large"), std::string::npos);
  EXPECT_EQ(run({"generate", "--method", "fkm", "-n", "200", "-k", "7"}).code, 3);
  EXPECT_EQ(run({"stream", "-n", "3", "--limit", "100000000"}).code, 3);
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args = {"generate", "--method", "shift-rule", "--variant", "pmn",
                                         "-n", "5", "-k", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliTest, BinaryExitCodes) {
  const std::string bin = DBSEQ_BINARY;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("verify -n 3 -k 3"), 0);
  EXPECT_EQ(status("verify -n 0 -k 3"), 2);
  EXPECT_EQ(status("generate --method fkm -n 40 -k 2"), 3);

  FILE* pipe = popen((bin + " generate --method greedy -n 1 -k 2").c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[64] = {};
  const std::size_t got = std::fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  EXPECT_EQ(std::string(buf, got), "1\n0\n");
}
