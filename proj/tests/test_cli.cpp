#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "parafock/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parafock::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("verify-gz passes on V(3)") {
  const auto r = run({"verify-gz", "--p", "3", "--max-level", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "triple relations: 0 violations"));
  CHECK(contains(r.out, "status: pass"));
}

TEST_CASE("verify-gz in V-bar at rational p") {
  const auto r = run({"verify-gz", "--vbar", "--p", "9/2", "--max-level", "5"});
  CHECK(r.code == 0);
  CHECK(run({"verify-gz", "--p", "9/2"}).code == 2);
}

TEST_CASE("gram prints the p = 1 null vector") {
  const auto r = run({"gram", "--p", "1", "--level", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "null: 2|1,1,0> - |0,0,1>"));
}

TEST_CASE("gram JSON schema") {
  const auto r = run({"gram", "--p", "1", "--level", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 3);
  bool found = false;
  for (const auto& w : doc) {
    CHECK(w["weight"].size() == 2);
    CHECK(w["weight"][0].is_string());
    CHECK(w["gram"].size() == w["states"].size());
    if (w["weight"] == nlohmann::json::array({"1/2", "3/2"})) {
      found = true;
      CHECK(w["states"] == nlohmann::json::parse("[[1,1,0],[0,0,1]]"));
      CHECK(w["gram"] == nlohmann::json::parse(R"([["1","2"],["2","4"]])"));
      CHECK(w["rank"] == 1);
      CHECK(w["null"] == nlohmann::json::parse("[[2,-1]]"));
    }
  }
  CHECK(found);
}

TEST_CASE("character lines") {
  const auto r = run({"character", "--m", "1", "--n", "1", "--degree", "2"});
  CHECK(r.code == 0);
  const auto text = lines(r.out);
  CHECK(text.size() == 6);
  CHECK(contains(r.out, "offset (1|1)  weight (1/2|3/2)  multiplicity 2"));

  const auto csv = lines(run({"character", "--m", "2", "--n", "1", "--degree", "1", "--format", "csv"}).out);
  CHECK(csv == std::vector<std::string>{"x1,x2,y1,multiplicity", "0,0,0,1", "0,0,1,1", "0,1,0,1", "1,0,0,1"});

  const auto checked = run({"character", "--m", "2", "--n", "2", "--degree", "4", "--check", "--format", "json"});
  CHECK(checked.code == 0);
  const auto doc = nlohmann::json::parse(checked.out);
  REQUIRE(doc["identities"].size() == 2);
  for (const auto& id : doc["identities"]) {
    CHECK(id["status"] == "equal");
    CHECK(id["m"] == 2);
    CHECK(id["degree"] == 4);
  }
}

TEST_CASE("act table formats") {
  const auto text = run({"act", "--p", "2", "--max-level", "1"});
  CHECK(text.code == 0);
  CHECK(contains(text.out, "(0,0,0) --c1+--> (1,0,1) : sqrt(2)\n"));
  const auto csv = lines(run({"act", "--p", "2", "--max-level", "1", "--format", "csv"}).out);
  CHECK(csv.front() == "source,generator,target,value");
  const auto doc = nlohmann::json::parse(run({"act", "--p", "2", "--max-level", "1", "--format", "json"}).out);
  CHECK(doc[0]["source"] == nlohmann::json::parse("[0,0,0]"));
  CHECK(doc[0]["generator"] == "c1+");
  CHECK(doc[0]["value"] == "sqrt(2)");
}

TEST_CASE("verify-defining and the negative control") {
  const auto ok = run({"verify-defining", "--m", "2", "--n", "2"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "triple relations: 0 violations"));
  const auto bad = run({"verify-defining", "--m", "1", "--n", "1", "--mutate"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "LHS-RHS has"));
  CHECK(contains(bad.out, "status: fail"));
}

TEST_CASE("verify-induced, branch and dims pass") {
  CHECK(run({"verify-induced", "--p", "3", "--max-level", "5"}).code == 0);
  CHECK(run({"verify-induced", "--p", "5/3", "--max-level", "4"}).code == 0);
  CHECK(run({"branch", "--m", "2", "--n", "1", "--degree", "4"}).code == 0);
  const auto dims = run({"dims", "--m", "2", "--n", "2", "--degree", "4"});
  CHECK(dims.code == 0);
  CHECK(contains(dims.out, "(2,1,1)  [2,1|1,0]  gz 32  super-schur 32  equal"));
}

TEST_CASE("usage errors exit 2") {
  const auto rank = run({"verify-gz", "--m", "2", "--p", "1"});
  CHECK(rank.code == 2);
  CHECK(contains(rank.err, "m = n = 1"));
  CHECK(run({"gram", "--n", "3"}).code == 2);
  CHECK(run({"act", "--m", "2"}).code == 2);
  CHECK(run({"verify-induced", "--m", "2"}).code == 2);
  CHECK(run({"gram", "--p", "0"}).code == 2);
  CHECK(run({"gram", "--p", "-1/2"}).code == 2);
  CHECK(run({"gram", "--p", "0.5"}).code == 2);
  CHECK(run({"gram", "--level", "-1"}).code == 2);
  CHECK(run({"gram", "--format", "csv"}).code == 2);
  CHECK(run({"verify-defining", "--m", "0"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"dims", "--frobnicate"}).code == 2);
  CHECK(run({"character", "--check", "--format", "csv"}).code == 2);
}

TEST_CASE("output is deterministic and can go to a file") {
  const std::vector<std::string> args{"act", "--p", "3", "--max-level", "4", "--format", "json"};
  CHECK(run(args).out == run(args).out);

  const auto path = std::filesystem::temp_directory_path() / "parafock_cli_test.txt";
  const auto r = run({"character", "--degree", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str() == run({"character", "--degree", "2"}).out);
  std::filesystem::remove(path);

  CHECK(run({"dims", "--out", "/nonexistent-dir/x.txt"}).code == 2);
}
