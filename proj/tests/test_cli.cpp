#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = clans::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto r11 = run({"enumerate", "--p", "1", "--q", "1"});
  CHECK(r11.code == 0);
  CHECK(r11.out == "clan\tdim\tclosed\trationally_smooth\n+,-\t0\tyes\tyes\n-,+\t0\tyes\tyes\n1,1\t1\tno\tyes\n");

  const auto r22 = run({"enumerate", "--p", "2", "--q", "2"});
  const auto rows = lines(r22.out);
  CHECK(rows.size() == 22);
  std::vector<std::string> singular;
  for (const auto& row : rows) {
    if (row.ends_with("\tno") && row != rows.front()) singular.push_back(row.substr(0, row.find('\t')));
  }
  CHECK(singular == std::vector<std::string>{"1,+,-,1", "1,-,+,1", "1,2,1,2"});

  const auto r02 = run({"enumerate", "--p", "0", "--q", "2"});
  CHECK(r02.out == "clan\tdim\tclosed\trationally_smooth\n-,-\t1\tyes\tyes\n");

  const auto json = nlohmann::json::parse(run({"enumerate", "--p", "2", "--q", "1", "--format", "json"}).out);
  CHECK(json.size() == 6);
  const auto top = std::find_if(json.begin(), json.end(), [](const auto& row) { return row["clan"] == "1,+,1"; });
  REQUIRE(top != json.end());
  CHECK((*top)["dimension"] == 3);
  CHECK((*top)["closed"] == false);
}

TEST_CASE("classify") {
  const auto bad = run({"classify", "--clan", "1,2,1,2"});
  CHECK(bad.code == 0);
  const auto doc = nlohmann::json::parse(bad.out);
  CHECK(doc["rationally_smooth"] == false);
  CHECK(doc["witness_pattern"] == "1,2,1,2");
  CHECK(doc["witness_positions"] == nlohmann::json::array({1, 2, 3, 4}));
  CHECK(doc["p"] == 2);
  CHECK(doc["dimension"] == 5);

  const auto good = nlohmann::json::parse(run({"classify", "--clan", "1,2,2,1", "--p", "2", "--q", "2"}).out);
  CHECK(good["rationally_smooth"] == true);
  CHECK(good["certificate"]["kind"] == "outer_strip");
  CHECK(good["certificate"]["interior"]["kind"] == "outer_strip");
  CHECK_FALSE(good.contains("witness_pattern"));

  const auto invalid = run({"classify", "--clan", "1,+,-,2"});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("error") != std::string::npos);
  CHECK(run({"classify", "--clan", "1,+,1,-", "--p", "1", "--q", "2"}).code == 2);
  CHECK(run({"classify"}).code == 2);

  const auto springer = nlohmann::json::parse(run({"classify", "--clan", "1,+,-,1", "--springer"}).out);
  CHECK(springer["springer_witness"]["closed"] == "+,+,-,-");
  CHECK(springer["springer_witness"]["count"] == 4);
  const auto smooth = nlohmann::json::parse(run({"classify", "--clan", "1,1", "--springer"}).out);
  CHECK(smooth["springer_witness"].is_null());
}

TEST_CASE("poset") {
  const auto dot = run({"poset", "--p", "1", "--q", "1", "--format", "dot"});
  CHECK(dot.code == 0);
  std::size_t nodes = 0, edges = 0;
  for (const auto& l : lines(dot.out)) {
    if (l.find("[label=") != std::string::npos) ++nodes;
    if (l.find("->") != std::string::npos) ++edges;
  }
  CHECK(nodes == 3);
  CHECK(edges == 2);

  const auto tsv = run({"poset", "--p", "2", "--q", "1", "--format", "tsv"});
  CHECK(lines(tsv.out).size() == 7);

  const auto big = run({"poset", "--p", "5", "--q", "5"});
  CHECK(big.code == 2);
  CHECK(big.err.find("bound") != std::string::npos);
  CHECK(run({"poset", "--p", "1", "--q", "1", "--format", "json"}).code == 2);
}

TEST_CASE("stats") {
  CHECK(run({"stats", "--p", "2", "--q", "2"}).out ==
        "total\t21\nclosed\t6\nsmooth\t18\nsingular\t3\ndim 2\t6\ndim 3\t6\ndim 4\t5\ndim 5\t3\ndim 6\t1\n");
  const auto s11 = nlohmann::json::parse(run({"stats", "--p", "1", "--q", "1", "--format", "json"}).out);
  CHECK(s11["total"] == 3);
  CHECK(s11["closed"] == 2);
  CHECK(s11["smooth"] == 3);
  CHECK(s11["singular"] == 0);
  const auto s21 = nlohmann::json::parse(run({"stats", "--p", "2", "--q", "1", "--format", "json"}).out);
  CHECK(s21["total"] == 6);
  CHECK(s21["closed"] == 3);
}

TEST_CASE("verify") {
  const auto r4 = run({"verify", "--max-n", "4"});
  CHECK(r4.code == 0);
  CHECK(r4.out.find("FAIL") == std::string::npos);
  CHECK(r4.out.find("PASS equivalence (2,2): 18 smooth, 3 not rationally smooth") != std::string::npos);
  CHECK(r4.out.find("PASS order facts (2,2)") != std::string::npos);
  CHECK(lines(r4.out).back().starts_with("OK"));

  CHECK(run({"verify", "--max-n", "2"}).code == 0);
  CHECK(run({"verify", "--max-n", "9"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"enumerate", "--p", "-1", "--q", "1"}).code == 2);
  CHECK(run({"enumerate", "--p", "x", "--q", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--p", "1", "--q", "1", "--format", "yaml"}).code == 2);
}

TEST_CASE("--out writes the file and --jobs does not change output") {
  const auto path = std::filesystem::temp_directory_path() / "clantool_test_out.tsv";
  const auto r = run({"enumerate", "--p", "3", "--q", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == run({"enumerate", "--p", "3", "--q", "2", "--jobs", "1"}).out);
  CHECK(file.str() == run({"enumerate", "--p", "3", "--q", "2", "--jobs", "7"}).out);
  std::filesystem::remove(path);
}
