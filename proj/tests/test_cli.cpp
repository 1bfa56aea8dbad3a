#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "alphaseq/cli.hpp"

namespace alphaseq::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, Limits limits = {}) {
  args.insert(args.begin(), "alphaseq");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err, limits);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

TEST(CliList, DnEight) {
  const auto r = invoke({"list", "--set", "dn", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 20u);
  EXPECT_EQ(rows.front(), "0");
  EXPECT_EQ(rows[3], "2,1,1,2,1");
  EXPECT_EQ(rows.back(), "7");
}

TEST(CliList, LnSevenText) {
  const auto r = invoke({"list", "--set", "ln", "7"});
  EXPECT_EQ(r.out,
            "2,1,1,1,1\n2,1,2,1\n3,2,1\n3,1,1,1\n3,1,2\n4,2\n4,1,1\n5,1\n6\n");
}

TEST(CliList, LimitIsPrefix) {
  const auto full = invoke({"list", "--set", "an", "6"});
  const auto head = invoke({"list", "--set", "an", "6", "--limit", "5"});
  ASSERT_EQ(head.code, kExitOk);
  EXPECT_EQ(lines(head.out).size(), 5u);
  EXPECT_EQ(full.out.substr(0, head.out.size()), head.out);
}

TEST(CliList, DescendingReversesAscending) {
  for (const char* set : {"an", "ln", "dn"}) {
    auto up = lines(invoke({"list", "--set", set, "12"}).out);
    const auto down = lines(invoke({"list", "--set", set, "12", "--desc"}).out);
    std::ranges::reverse(up);
    EXPECT_EQ(down, up) << set;
  }
  const auto top3 = lines(invoke({"list", "--set", "dn", "8", "--desc", "--limit", "3"}).out);
  EXPECT_EQ(top3, (std::vector<std::string>{"7", "6,1", "5,1,1"}));
}

TEST(CliList, CsvMatchesText) {
  EXPECT_EQ(invoke({"list", "--set", "ln", "9", "--format", "csv"}).out,
            invoke({"list", "--set", "ln", "9"}).out);
}

TEST(CliList, JsonRoundTrip) {
  for (const char* set : {"an", "ln", "dn"}) {
    const auto r = invoke({"list", "--set", set, "8", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_FALSE(r.out.empty());
    const std::string body = r.out.substr(0, r.out.size() - 1);
    const auto items = items_from_json(body);
    EXPECT_EQ(to_json_record(8, parse_set(set), items), body);
  }
  const auto d4 = invoke({"list", "--set", "dn", "4", "--format", "json"});
  EXPECT_EQ(d4.out, "{\"count\":4,\"items\":[[],[1],[2,1],[3]],\"n\":4,\"set\":\"dn\"}\n");
}

TEST(CliSucc, Ln) {
  const auto r = invoke({"succ", "--set", "ln", "11", "3,2,3,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "3,1,1,3,2\n");
  EXPECT_EQ(invoke({"succ", "--set", "ln", "8", "3,1,2,1"}).out, "4,3\n");
}

TEST(CliSucc, AnAndDn) {
  EXPECT_EQ(invoke({"succ", "--set", "an", "4", "2,2"}).out, "2,1,1\n");
  // (3,1,2,1) closes the star chain: the meet (3), then its first harmonic.
  EXPECT_EQ(invoke({"succ", "--set", "dn", "8", "3,1,2,1"}).out, "3\n4,3\n");
}

TEST(CliSucc, MaximalIsDomainError) {
  const auto r = invoke({"succ", "--set", "ln", "7", "6"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("maximal element"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliPred, LnAndAn) {
  EXPECT_EQ(invoke({"pred", "--set", "ln", "8", "4,3"}).out, "3,1,2,1\n");
  EXPECT_EQ(invoke({"pred", "--set", "an", "4", "1,1,1,1"}).out, "1,2,1\n");
  EXPECT_EQ(invoke({"pred", "--set", "ln", "8", "2,1,1,2,1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"pred", "--set", "an", "4", "1,2"}).code, kExitDomain);
}

TEST(CliQueries, Lexical) {
  EXPECT_EQ(invoke({"lexical", "3,1,2,1"}).out, "true\n");
  EXPECT_EQ(invoke({"lexical", "2,1,2"}).out, "false\n");
}

TEST(CliQueries, CompareMeetStarHarmonic) {
  EXPECT_EQ(invoke({"compare", "3,1,2,1", "4,3"}).out, "less\n");
  EXPECT_EQ(invoke({"compare", "2", "2,1"}).out, "greater\n");
  EXPECT_EQ(invoke({"compare", "0", "0"}).out, "equal\n");
  EXPECT_EQ(invoke({"meet", "3,1,2,1", "3,1,1,2"}).out, "3,1,1\n");
  EXPECT_EQ(invoke({"star", "2,1", "1"}).out, "2,1,1,2,1\n");
  EXPECT_EQ(invoke({"harmonic", "3", "0"}).out, "2,1,1,2,1\n");
  EXPECT_EQ(invoke({"least", "8"}).out, "2,1,1,2,1\n");
  EXPECT_EQ(invoke({"meet", "3,1", "3,1,2"}).code, kExitDomain);
}

TEST(CliVerify, SmallRange) {
  const auto r = invoke({"verify", "1", "6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[9], "an 4: ok (8)");
}

TEST(CliUsage, BadInvocationsExitOne) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"list", "8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"list", "--set", "xn", "8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"list", "--set", "ln", "eight"}).code, kExitUsage);
  EXPECT_EQ(invoke({"pred", "--set", "dn", "8", "2,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lexical", "2,,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"lexical", "2,0,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliLimits, CapsAreDomainErrors) {
  EXPECT_EQ(invoke({"list", "--set", "an", "31"}).code, kExitDomain);
  const Limits tight{10, 8};
  EXPECT_EQ(invoke({"list", "--set", "ln", "11"}, tight).code, kExitDomain);
  EXPECT_EQ(invoke({"verify", "1", "9"}, tight).code, kExitDomain);
  EXPECT_EQ(invoke({"least", "0"}).code, kExitDomain);
}

TEST(CliBench, ReportsBothTimings) {
  const auto r = invoke({"bench", "10", "--repeat", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "n=10 repeat=2");
  EXPECT_EQ(rows[1].rfind("adjacency: count=51 ", 0), 0u) << rows[1];
  EXPECT_EQ(rows[2].rfind("oracle:    count=51 ", 0), 0u) << rows[2];
}

}  // namespace
}  // namespace alphaseq::cli
