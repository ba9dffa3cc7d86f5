#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypercert/cli/cli.hpp"

using hypercert::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hypercert-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 1") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"turan", "--j", "2", "--bogus"}).code == 1);
    CHECK(invoke({"--format", "xml", "seq"}).code == 1);
    const auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("table1") != std::string::npos);
  }

  TEST_CASE("certify prints a json certificate") {
    const auto r = invoke({"certify", "--poly", "1958 4872 3010", "--method", "both"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["hyperbolic"] == true);
    CHECK(doc["method"] == "both");
    CHECK(doc.contains("minors"));
    CHECK(doc.contains("sign_profile"));
  }

  TEST_CASE("threshold searches") {
    const auto lag = invoke({"threshold", "--family", "laguerre", "--j", "2", "--nmax", "400"});
    REQUIRE(lag.code == 0);
    CHECK(lag.out.find(",184,400,") != std::string::npos);

    const auto tur = invoke({"--format", "json", "threshold", "--family", "turan", "--j", "2", "--nmax", "200"});
    REQUIRE(tur.code == 0);
    const auto doc = nlohmann::json::parse(tur.out);
    CHECK(doc["onset"] == 26);
  }

  TEST_CASE("global flags work after the subcommand") {
    const auto r = invoke({"threshold", "--family", "jensen", "--d", "3", "--nmax", "150", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["onset"] == 94);
    CHECK(r.err.find("nmax=150") != std::string::npos);
  }

  TEST_CASE("operator values") {
    const auto t = invoke({"turan", "--j", "2", "--n", "25"});
    REQUIRE(t.code == 0);
    CHECK(t.out == "index,value,sign\n25,-2936,-1\n");
    const auto l = invoke({"laguerre", "--k", "1", "--from", "24", "--to", "25"});
    REQUIRE(l.code == 0);
    CHECK(l.out == "n,k,value,sign\n24,1,-2936,-1\n25,1,40516,1\n");
    const auto md = invoke({"--format", "markdown", "turan", "--j", "1", "--from", "1", "--to", "2", "--anchor", "backward"});
    REQUIRE(md.code == 0);
    CHECK(md.out.rfind("| index |", 0) == 0);
    CHECK(invoke({"turan", "--j", "2", "--n", "25", "--anchor", "all"}).code == 1);
    const auto e = invoke({"laguerre", "--expand", "0 0 1", "--at", "1"});
    REQUIRE(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["passed"] == true);
  }

  TEST_CASE("jensen command") {
    const auto r = invoke({"jensen", "--d", "2", "--n", "25"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["certificate"]["hyperbolic"] == true);
    const auto w = invoke({"jensen", "--d", "3", "--from", "90", "--to", "100"});
    REQUIRE(w.code == 0);
    CHECK(w.out.find("93,false") != std::string::npos);
    CHECK(w.out.find("94,true") != std::string::npos);
  }

  TEST_CASE("multseq command") {
    const auto r = invoke({"multseq", "--d", "3", "--n", "50", "--trials", "20"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "counterexample_found");
    const auto s = invoke({"multseq", "--structure", "--from", "0", "--to", "100"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["pattern"] == "constant_sign");
  }

  TEST_CASE("sequence sources, files and the cache") {
    const auto file = scratch("p.txt");
    REQUIRE(invoke({"seq", "--nmax", "40", "--out", file.string()}).code == 0);
    const auto viaFile = invoke({"--seq", "file:" + file.string(), "turan", "--j", "2", "--n", "25"});
    REQUIRE(viaFile.code == 0);
    CHECK(viaFile.out.find("25,-2936,-1") != std::string::npos);

    const auto cache = scratch("cache");
    std::filesystem::remove_all(cache);
    const auto first = invoke({"--cache", cache.string(), "seq", "--nmax", "30", "--format", "csv"});
    const auto second = invoke({"--cache", cache.string(), "seq", "--nmax", "30", "--format", "csv"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\n30,5604\n") != std::string::npos);
    CHECK_FALSE(std::filesystem::is_empty(cache));

    const auto pp = invoke({"--seq", "planepartition", "seq", "--nmax", "5", "--format", "json"});
    REQUIRE(pp.code == 0);
    CHECK(nlohmann::json::parse(pp.out)["terms"].back() == "24");
    CHECK(invoke({"--seq", "nothing", "seq"}).code == 1);
    CHECK(invoke({"--seq", "builtin:geometric(3)", "seq", "--nmax", "3"}).out.find("3 27") != std::string::npos);
  }

  TEST_CASE("a short file reports the index it needs") {
    const auto file = scratch("short.txt");
    REQUIRE(invoke({"seq", "--nmax", "10", "--out", file.string()}).code == 0);
    const auto r = invoke({"--seq", "file:" + file.string(), "threshold", "--family", "laguerre", "--nmax", "50"});
    CHECK(r.code == 1);
    CHECK(r.err.find("through index 52") != std::string::npos);
  }

  TEST_CASE("config files") {
    const auto cfg = scratch("run.ini");
    {
      std::ofstream f(cfg);
      f << "nmax=120\nformat=json\n";
    }
    const auto r = invoke({"--config", cfg.string(), "threshold", "--family", "jensen", "--d", "2"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n_max"] == 120);
    CHECK(doc["onset"] == 25);
    {
      std::ofstream f(cfg);
      f << "unknown_key=1\n";
    }
    CHECK(invoke({"--config", cfg.string(), "seq"}).code == 1);
  }

  TEST_CASE("table mismatch exits 2") {
    const auto r = invoke({"table1", "--jmax", "1", "--kmax", "1", "--strict", "ge", "--nmax", "50"});
    CHECK(r.code == 2);
    CHECK(r.err.find("mismatch") != std::string::npos);
    const auto ok = invoke({"table1", "--jmax", "1", "--kmax", "3", "--nmax", "60", "--ratios"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("j,anchor,strict,k=1,k=2,k=3\n1,backward,gt,2,8,26\n", 0) == 0);
    CHECK(ok.out.find("undefined") != std::string::npos);
  }

  TEST_CASE("check command") {
    const auto list = invoke({"check", "--list"});
    REQUIRE(list.code == 0);
    CHECK(list.out.find("sturm_hankel_agreement,rootcert") != std::string::npos);
    const auto one = invoke({"check", "--suite", "partition_oracle"});
    CHECK(one.code == 0);
    CHECK(one.out.find("partition_oracle,") != std::string::npos);
    CHECK(invoke({"check", "--suite", "no_such_suite"}).code == 1);
  }
}
