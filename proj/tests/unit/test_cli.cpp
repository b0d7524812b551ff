#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "common/oracles.hpp"
#include "verify.hpp"

using polyseq::Rational;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = polyseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  return rows;
}

// Rebuilds the value grid from `n,col,value` rows. The column field is an
// absolute shift or an evaluation point, so rows are grouped by n in order.
std::vector<std::vector<Rational>> csv_grid(const std::string &text) {
  std::vector<std::vector<Rational>> grid;
  const auto rows = csv_rows(text);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto n = std::stoul(rows[r].at(0));
    if (grid.size() <= n) {
      grid.resize(n + 1);
    }
    grid[n].push_back(Rational::parse(rows[r].at(2)));
  }
  return grid;
}

std::vector<std::vector<Rational>> json_grid(const std::string &text) {
  const auto doc = nlohmann::json::parse(text);
  std::vector<std::vector<Rational>> grid;
  for (const auto &row : doc.at("values")) {
    grid.emplace_back();
    for (const auto &v : row) {
      grid.back().push_back(Rational::parse(v.get<std::string>()));
    }
  }
  return grid;
}

} // namespace

TEST(Cli, GoldenTableCsv) {
  const auto r = call({"table", "--family", "cauchy1", "--k", "1", "--a", "1", "--q", "1", "--l",
                       "1", "--n-max", "4", "--m-max", "3", "--format", "csv"});
  ASSERT_EQ(r.code, polyseq::cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "m", "value"}));
  EXPECT_EQ(rows[20], (std::vector<std::string>{"4", "3", "-83/210"}));
  EXPECT_EQ(rows[10], (std::vector<std::string>{"2", "1", "-1/6"}));
}

TEST(Cli, BernoulliClassicText) {
  const auto r = call({"bernoulli-classic", "--n-max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1, 1/2, 1/6\n");
}

TEST(Cli, BernoulliClassicFormatsAgree) {
  const auto csv = call({"bernoulli-classic", "--n-max", "12", "--format", "csv"});
  const auto json = call({"bernoulli-classic", "--n-max", "12", "--format", "json"});
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto rows = csv_rows(csv.out);
  const auto doc = nlohmann::json::parse(json.out);
  const auto reference = oracle::akiyama_tanigawa(12);
  ASSERT_EQ(rows.size(), 14u);
  ASSERT_EQ(doc.at("values").size(), 13u);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(Rational::parse(rows[n + 1].at(1)), reference[n]);
    EXPECT_EQ(Rational::parse(doc.at("values")[n].get<std::string>()), reference[n]);
  }
}

TEST(Cli, CsvAndJsonAreValueIdentical) {
  const std::vector<std::vector<std::string>> queries = {
      {"table", "--family", "cauchy1", "--a", "2", "--q", "1/2", "--L", "3,1/5", "--k", "2"},
      {"table", "--family", "cauchy2", "--k", "-2", "--m", "1", "--n-max", "5"},
      {"table", "--family", "bernoulli", "--a", "-3", "--m", "4", "--k", "1"},
      {"table", "--family", "h", "--q", "-1/3", "--k", "-1", "--p-max", "4"},
      {"poly", "--family", "cauchy1", "--n-max", "4"},
      {"poly", "--family", "bernoulli", "--n-max", "5", "--x0", "2/3"},
      {"poly", "--family", "h", "--n-max", "3", "--p", "2"},
      {"gregory", "--n-max", "5", "--m-max", "2"},
  };
  for (auto q : queries) {
    auto qc = q;
    qc.insert(qc.end(), {"--format", "csv"});
    auto qj = q;
    qj.insert(qj.end(), {"--format", "json"});
    const auto c = call(qc);
    const auto j = call(qj);
    ASSERT_EQ(c.code, 0) << q[0] << " " << q[2] << ": " << c.err;
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_EQ(csv_grid(c.out), json_grid(j.out)) << q[0] << " " << q[2];
  }
}

TEST(Cli, TableValuesMatchOracle) {
  const auto r = call({"table", "--family", "bernoulli", "--a", "2", "--q", "1/2", "--L", "3",
                       "--k", "2", "--m", "1", "--n-max", "6", "--m-max", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto grid = json_grid(r.out);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t j = 0; j <= 2; ++j) {
      EXPECT_EQ(grid[n][j], oracle::bernoulli(n, {2, Rational(1, 2), Rational(3), 2,
                                                  1 + static_cast<long>(j)}));
    }
  }
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("params").at("l"), "3");
  EXPECT_EQ(doc.at("params").at("a"), 2);
}

TEST(Cli, LowerAndUpperLAreEquivalent) {
  const auto a = call({"table", "--family", "cauchy2", "--l", "6/5", "--k", "3"});
  const auto b = call({"table", "--family", "cauchy2", "--L", "3,2/5", "--k", "3"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PolyAtPoint) {
  const auto r = call({"poly", "--family", "cauchy1", "--n-max", "1", "--x0", "-1"});
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "x", "value"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"1", "-1", "3/2"}));
}

TEST(Cli, VerifyPasses) {
  const auto r = call({"verify", "--identity", "AN1", "--n-max", "6", "--a", "1", "--q", "1",
                       "--l", "1"});
  EXPECT_EQ(r.code, polyseq::cli::kSuccess) << r.out;
  EXPECT_EQ(r.out.rfind("PASS AN1", 0), 0u);
}

TEST(Cli, VerifyJson) {
  const auto r = call({"verify", "--identity", "Q1,Gregory", "--n-max", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0].at("identity"), "Q1");
  EXPECT_EQ(doc[1].at("identity"), "Gregory");
  EXPECT_TRUE(doc[0].at("pass").get<bool>());
  EXPECT_GT(doc[0].at("passed").get<int>(), 0);
}

TEST(Cli, VerifyListCoversRegistry) {
  const auto r = call({"verify", "--list"});
  ASSERT_EQ(r.code, 0);
  std::string expected;
  for (const auto &id : polyseq::verify::identity_ids()) {
    expected += id + "\n";
  }
  EXPECT_EQ(r.out, expected);
  for (const char *id : {"Q1", "Re1", "Re2", "AN1", "AN2", "Gq1", "TGQ1", "TGQ11", "Alg1", "GGF",
                         "ws", "zR1", "zR2", "For5", "For6", "For13", "For14", "thm14",
                         "thm200:For9", "thm200:For12", "DGF-C1", "DGF-C2", "DGF-B"}) {
    EXPECT_TRUE(polyseq::verify::is_identity(id)) << id;
  }
}

TEST(Cli, UsageErrors) {
  using polyseq::cli::kUsageError;
  EXPECT_EQ(call({}).code, kUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(call({"table"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy3"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--k", "0"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--a", "0"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--q", "1/0"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--q", "x"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--L", "1,0"}).code, kUsageError);
  EXPECT_EQ(call({"table", "--family", "cauchy1", "--l", "2", "--L", "2"}).code, kUsageError);
  EXPECT_EQ(call({"verify"}).code, kUsageError);
  EXPECT_EQ(call({"verify", "--identity", "Nope"}).code, kUsageError);
}

TEST(Cli, PoleReportsIndex) {
  const auto r = call({"table", "--family", "cauchy1", "--a", "-2", "--m", "0", "--n-max", "3"});
  EXPECT_EQ(r.code, polyseq::cli::kUsageError);
  EXPECT_NE(r.err.find("pole at index"), std::string::npos) << r.err;
}

TEST(Cli, HelpSucceeds) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
