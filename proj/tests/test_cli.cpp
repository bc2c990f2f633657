#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "evenh/cli.hpp"

using namespace evenh;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(RunConfig cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& out) {
  std::vector<json> recs;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    recs.push_back(json::parse(line));
  }
  return recs;
}

const json* find_schema(const std::vector<json>& recs,
                        const std::string& schema) {
  for (const json& r : recs)
    if (r.value("schema", "") == schema) return &r;
  return nullptr;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("evenh_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("validate reports bonds in both formats") {
  RunConfig cfg;
  cfg.subcommand = "validate";
  cfg.input = "n=3; 1 2 4; 2 3 2";

  RunResult text = run_cli(cfg);
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("valid: n=3, bonds=2") != std::string::npos);
  CHECK(text.out.find("pair (1,2): m=4 half=2") != std::string::npos);

  cfg.format = "json-lines";
  RunResult jl = run_cli(cfg);
  CHECK(jl.code == kExitOk);
  auto recs = records(jl.out);
  const json* rec = find_schema(recs, "evenh.matrix/1");
  REQUIRE(rec != nullptr);
  CHECK((*rec)["n"] == 3);
  REQUIRE((*rec)["bonds"].size() == 2);
  CHECK((*rec)["bonds"][0]["i"] == 1);
  CHECK((*rec)["bonds"][0]["m"] == 4);
  CHECK((*rec)["bonds"][0]["half"] == 2);
}

TEST_CASE("input can come from a file") {
  TempFile f("matrix.txt", "n=2\n1 2 6\n");
  RunConfig cfg;
  cfg.subcommand = "validate";
  cfg.input = f.path;
  RunResult r = run_cli(cfg);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("m=6 half=3") != std::string::npos);

  cfg.input = "no_such_file_here.txt";
  CHECK(run_cli(cfg).code == kExitUsage);
}

TEST_CASE("homology subcommands emit bases for both groups") {
  RunConfig cfg;
  cfg.subcommand = "h1";
  cfg.input = "n=2; 1 2 4";
  cfg.format = "json-lines";

  auto recs = records(run_cli(cfg).out);
  const json* r = find_schema(recs, "evenh.h1/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["rank"] == 2);
  CHECK((*r)["labels"] == json::array({"a1", "a2"}));
  CHECK((*r)["torsion"].empty());

  cfg.group = "coxeter";
  recs = records(run_cli(cfg).out);
  r = find_schema(recs, "evenh.h1/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["rank"] == 0);
  CHECK((*r)["torsion"] == json::array({2, 2}));

  cfg.subcommand = "h2";
  cfg.group = "artin";
  recs = records(run_cli(cfg).out);
  r = find_schema(recs, "evenh.h2/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["rank"] == 1);
  CHECK((*r)["basis"][0]["display"] == "[a1,a2]^2");
  CHECK((*r)["basis"][0]["word"] ==
        "a1 a2 a1^-1 a2^-1 a1 a2 a1^-1 a2^-1");

  cfg.group = "coxeter";
  recs = records(run_cli(cfg).out);
  r = find_schema(recs, "evenh.h2/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["rank"] == 1);
  CHECK((*r)["rho_star"] == json::array({json::array({1})}));
}

TEST_CASE("cup emits one record per unordered pair") {
  RunConfig cfg;
  cfg.subcommand = "cup";
  cfg.input = "n=3; 1 2 4; 2 3 6";
  cfg.format = "json-lines";
  auto recs = records(run_cli(cfg).out);
  int seen = 0;
  for (const json& r : recs) {
    if (r.value("schema", "") != "evenh.cup/1") continue;
    ++seen;
    if (r["i"] == 1 && r["j"] == 2) {
      CHECK(r["coeff"] == 2);
      CHECK(r["basis_pair"] == json::array({1, 2}));
    }
    if (r["i"] == 1 && r["j"] == 3) {
      CHECK(r["coeff"] == 0);
      CHECK(r["basis_pair"].is_null());
    }
  }
  CHECK(seen == 3);
}

TEST_CASE("pontryagin lists the product chains") {
  RunConfig cfg;
  cfg.subcommand = "pontryagin";
  cfg.input = "n=2; 1 2 4";
  cfg.format = "json-lines";
  auto recs = records(run_cli(cfg).out);
  const json* r = find_schema(recs, "evenh.pontryagin/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["left"] == "a1");
  CHECK((*r)["right"] == "a2 a1 a2");
  CHECK((*r)["chain"] == "[a1|a2 a1 a2] - [a2 a1 a2|a1]");
  CHECK((*r)["coords"] == json::array({1}));

  cfg.group = "coxeter";
  recs = records(run_cli(cfg).out);
  r = find_schema(recs, "evenh.pontryagin/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["left"] == "s1");
  CHECK((*r)["coords"] == json::array({1}));
}

TEST_CASE("class cross-checks a relator product file") {
  TempFile f("product.txt",
             "# doubled relator with a conjugate\n"
             "pair=(1,2) exp=+1 conj=a2 a1^-1\n"
             "pair=(1,2) exp=+1\n");
  RunConfig cfg;
  cfg.subcommand = "class";
  cfg.input = "n=2; 1 2 4";
  cfg.file = f.path;
  cfg.format = "json-lines";
  RunResult r = run_cli(cfg);
  CHECK(r.code == kExitOk);
  auto recs = records(r.out);
  const json* rec = find_schema(recs, "evenh.class/1");
  REQUIRE(rec != nullptr);
  CHECK((*rec)["coords"] == json::array({2}));
  CHECK((*rec)["via_wedge"] == json::array({2}));
  CHECK((*rec)["agree"] == true);
}

TEST_CASE("oracle-h2 constructs groups and dumps table fixtures") {
  RunConfig cfg;
  cfg.subcommand = "oracle-h2";
  cfg.construct = "product:dihedral:2,elementary:1";
  cfg.format = "json-lines";
  TempFile dump("table.txt", "");
  cfg.dump_table = dump.path;

  auto recs = records(run_cli(cfg).out);
  const json* r = find_schema(recs, "evenh.oracle_h2/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["order"] == 16);
  CHECK((*r)["h1"]["free_rank"] == 0);
  CHECK((*r)["h1"]["torsion"] == json::array({2, 2, 2}));
  CHECK((*r)["h2"]["torsion"] == json::array({2, 2, 2}));

  std::ifstream f(dump.path);
  std::string first;
  std::getline(f, first);
  CHECK(first == "order=16");

  cfg.construct = "frobnicate:3";
  CHECK(run_cli(cfg).code == kExitUsage);
  cfg.construct = "dihedral:x";
  CHECK(run_cli(cfg).code == kExitUsage);
}

TEST_CASE("oracle-h2 enumerates the matrix when not given a construction") {
  RunConfig cfg;
  cfg.subcommand = "oracle-h2";
  cfg.input = "n=2; 1 2 4";
  cfg.format = "json-lines";
  auto recs = records(run_cli(cfg).out);
  const json* r = find_schema(recs, "evenh.oracle_h2/1");
  REQUIRE(r != nullptr);
  CHECK((*r)["order"] == 8);
  CHECK((*r)["h2"]["torsion"] == json::array({2}));

  // infinite group with a small coset cap: resource exit, json error record
  cfg.input = "n=2";
  cfg.max_cosets = 500;
  RunResult rr = run_cli(cfg);
  CHECK(rr.code == kExitLimit);
  auto errs = records(rr.out);
  const json* er = find_schema(errs, "evenh.error/1");
  REQUIRE(er != nullptr);
  CHECK((*er)["kind"] == "resource-limit");
}

TEST_CASE("exit codes separate usage, domain, and limit failures") {
  RunConfig cfg;
  cfg.subcommand = "validate";
  cfg.input = "n=2; 1 2 3";  // odd label
  RunResult odd = run_cli(cfg);
  CHECK(odd.code == kExitUsage);
  CHECK(odd.err.find("odd label") != std::string::npos);

  cfg.input = "n=2; 1 2";
  CHECK(run_cli(cfg).code == kExitUsage);

  cfg.subcommand = "nonsense";
  cfg.input = "n=2; 1 2 4";
  CHECK(run_cli(cfg).code == kExitUsage);

  cfg.subcommand = "validate";
  cfg.format = "yaml";
  CHECK(run_cli(cfg).code == kExitUsage);

  // parse errors carry line/col into the json error record
  cfg.format = "json-lines";
  cfg.input = "n=2\n1 2 oops\n";
  RunResult pe = run_cli(cfg);
  CHECK(pe.code == kExitUsage);
  auto recs = records(pe.out);
  const json* er = find_schema(recs, "evenh.error/1");
  REQUIRE(er != nullptr);
  CHECK((*er)["kind"] == "parse");
  CHECK((*er)["line"] == 2);
  CHECK((*er)["col"] == 5);
}

TEST_CASE("verify passes its battery and is seed-stable") {
  RunConfig cfg;
  cfg.subcommand = "verify";
  cfg.input = "n=2; 1 2 4";
  RunResult a = run_cli(cfg);
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("all checks passed") != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);

  RunResult b = run_cli(cfg);
  CHECK(b.out == a.out);  // same seed, same transcript

  cfg.seed = 999;
  RunResult c = run_cli(cfg);
  CHECK(c.code == kExitOk);  // different seed still passes

  cfg.format = "json-lines";
  RunResult j = run_cli(cfg);
  auto recs = records(j.out);
  const json* sum = find_schema(recs, "evenh.verify_summary/1");
  REQUIRE(sum != nullptr);
  CHECK((*sum)["failures"] == 0);
  bool saw_chains = false;
  for (const json& r : recs)
    if (r.value("schema", "") == "evenh.verify/1" &&
        r.value("check", "") == "oracle-chains")
      saw_chains = r.value("ok", false) && !r.value("skipped", false);
  CHECK(saw_chains);
}

TEST_CASE("verify skips the finite oracle when the cap is tight") {
  RunConfig cfg;
  cfg.subcommand = "verify";
  cfg.input = "n=2; 1 2 4";
  cfg.max_cosets = 3;  // too small to close the order-8 table
  RunResult r = run_cli(cfg);
  CHECK(r.code == kExitOk);  // skipped, not failed
  CHECK(r.out.find("skip") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
