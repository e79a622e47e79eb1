#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qrsum/bigint.hpp"
#include "qrsum/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qrsum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  }
  return lines;
}

}  // namespace

TEST_CASE("count examples") {
  auto r = run({"count", "--p", "7", "--k", "2", "--b", "3", "--json"});
  CHECK(r.code == qrsum::cli::kOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["count"] == "1");
  CHECK(lines[0]["quantity"] == "subset");

  r = run({"count", "--p", "5", "--k", "2", "--b", "0", "--json"});
  CHECK(json_lines(r.out).at(0)["count"] == "1");

  // 2 is a square in F_9, since all of F_3 is.
  r = run({"count", "--p", "3", "--s", "2", "--k", "1", "--b", "2", "--json"});
  CHECK(json_lines(r.out).at(0)["count"] == "1");

  r = run({"count", "--p", "7", "--k", "2", "--b", "3", "--quantity", "diagonal", "--coeffs", "1", "1",
           "--method", "both", "--json"});
  CHECK(r.code == qrsum::cli::kOk);
  lines = json_lines(r.out);
  CHECK(lines.at(0)["count"] == lines.at(0)["oracle_count"]);
  CHECK(lines.at(0)["match"] == true);

  r = run({"count", "--p", "7", "--k", "2", "--b", "3"});
  CHECK(r.code == qrsum::cli::kOk);
  CHECK(r.out.find("subset") != std::string::npos);
}

TEST_CASE("table examples") {
  auto r = run({"table", "--p", "7", "--k", "2", "--json"});
  CHECK(r.code == qrsum::cli::kOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 8);
  std::vector<std::string> nonzero;
  for (std::size_t i = 0; i < 7; ++i) {
    if (lines[i]["count"] != "0") nonzero.push_back(lines[i]["b"]);
  }
  CHECK(nonzero == std::vector<std::string>{"3", "5", "6"});
  CHECK(lines[7]["summary"] == "table");
  CHECK(lines[7]["total"] == "3");
  CHECK(lines[7]["ok"] == true);

  r = run({"table", "--p", "5", "--k", "1", "--json"});
  lines = json_lines(r.out);
  CHECK(lines.at(1)["count"] == "1");
  CHECK(lines.at(4)["count"] == "1");
  CHECK(lines.at(5)["total"] == "2");

  r = run({"table", "--p", "7", "--k", "0", "--json"});
  lines = json_lines(r.out);
  CHECK(lines.at(0)["count"] == "1");
  for (std::size_t i = 1; i < 7; ++i) CHECK(lines.at(i)["count"] == "0");
}

TEST_CASE("table output is deterministic and methods agree") {
  const auto a = run({"table", "--p", "3", "--s", "3", "--k", "4", "--json"});
  const auto b = run({"table", "--p", "3", "--s", "3", "--k", "4", "--json"});
  CHECK(a.out == b.out);
  const auto oracle = run({"table", "--p", "3", "--s", "3", "--k", "4", "--method", "oracle", "--json"});
  const auto x = json_lines(a.out);
  const auto y = json_lines(oracle.out);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    CHECK(x[i]["b"] == y[i]["b"]);
    CHECK(x[i]["count"] == y[i]["count"]);
  }
}

TEST_CASE("verify examples") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"verify", "--p", "7", "--max-k", "3"},
                                                                {"verify", "--p", "3", "--s", "3", "--max-k", "4"},
                                                                {"verify", "--p", "3", "--s", "2", "--max-k", "4"},
                                                                {"verify", "--p", "5", "--max-k", "3",
                                                                 "--quantity", "distinct"}}) {
    const auto r = run(args);
    CHECK(r.code == qrsum::cli::kOk);
  }
  const auto r = run({"verify", "--p", "11", "--max-k", "3", "--json"});
  const auto lines = json_lines(r.out);
  CHECK(lines.back()["summary"] == "verify");
  CHECK(lines.back()["mismatches"] == 0);
  CHECK(lines.back()["checked"] == 44);
}

TEST_CASE("character sum examples") {
  auto r = run({"charsums", "gauss", "--p", "5", "--json"});
  CHECK(r.code == qrsum::cli::kOk);
  auto lines = json_lines(r.out);
  CHECK(lines.at(0)["closed"] == "ω [ω²=5]");
  CHECK(lines.at(0)["approx"][0].get<double>() == doctest::Approx(2.2360679).epsilon(1e-7));
  CHECK(lines.at(0)["match"] == true);

  r = run({"charsums", "jacobi", "--p", "5", "--e", "2", "--variant", "J", "--json"});
  CHECK(json_lines(r.out).at(0)["closed"] == "-1");
  CHECK(json_lines(r.out).at(0)["match"] == true);
  r = run({"charsums", "jacobi", "--p", "5", "--e", "2", "--variant", "J0", "--json"});
  CHECK(json_lines(r.out).at(0)["closed"] == "4");
  CHECK(json_lines(r.out).at(0)["direct"] == "4");
}

TEST_CASE("large counts survive JSON as exact decimal strings") {
  const auto r = run({"count", "--p", "1009", "--k", "40", "--b", "5", "--json"});
  REQUIRE(r.code == qrsum::cli::kOk);
  const auto line = json_lines(r.out).at(0);
  const std::string text = line["count"];
  CHECK(text.size() > 20);
  CHECK(qrsum::Integer(text).get_str() == text);
  // Re-serializing the parsed line reproduces the input byte for byte.
  CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "--p", "9", "--k", "1"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"count", "--p", "2", "--k", "1"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"count", "--p", "7", "--k", "4"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"count", "--p", "7", "--k", "1", "--b", "x"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"count", "--p", "7", "--k", "1", "--quantity", "nope"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"bogus"}).code == qrsum::cli::kInvalidInput);
  CHECK(run({"count", "--k", "1"}).code == qrsum::cli::kInvalidInput);

  const auto r = run({"table", "--p", "101", "--k", "9", "--method", "oracle", "--budget", "100"});
  CHECK(r.code == qrsum::cli::kBudgetExceeded);
  CHECK(r.err.find("BudgetExceeded") != std::string::npos);
  CHECK(run({"verify", "--p", "101", "--max-k", "9", "--budget", "1000"}).code == qrsum::cli::kBudgetExceeded);
}
