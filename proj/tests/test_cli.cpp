#include "dzb/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace dzb;
using json = nlohmann::json;

namespace {

std::string examples_dir() {
  const char* e = std::getenv("DZB_EXAMPLES");
  return e ? e : "tools/inputs";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

cli::JobResult run_example(const std::string& command, const std::string& name, const std::string& format = "json") {
  cli::JobSpec spec;
  spec.command = command;
  spec.format = format;
  spec.input = examples_dir() + "/" + name;
  return cli::run(spec);
}

cli::JobResult run_text(const std::string& command, const std::string& text) {
  cli::JobSpec spec;
  spec.command = command;
  return cli::run_document(spec, text);
}

// Exit status of the binary, or -1 when it is unavailable.
int run_binary(const std::string& args) {
  const char* bin = std::getenv("DZB_BINARY");
  if (!bin) return -1;
  const int status = std::system((std::string(bin) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("stab on the SL3 barycentric example") {
  const auto r = run_example("stab", "sl3_barycentric.json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.report);
  CHECK(j["stabilizer"]["order"] == 3);
  CHECK(j["nonsingular"] == true);
  CHECK(j["gamma"]["order"] == 3);
  CHECK(j["lift"]["stabilizer"]["order"] == 3);
  CHECK(j["reflection_subgroup_order"] == 1);
  CHECK(j["weyl_order"] == 6);
  CHECK(j["lift"]["class_group_moduli"] == json::array({1, 3}));
}

TEST_CASE("oracle on SL2(F_3) with the Legendre character") {
  const auto r = run_example("oracle", "sl2_legendre.json");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.report);
  CHECK(j["q_parameter"] == 1);
  CHECK(j["dimension"] == 2);
  CHECK(j["quadratic"]["a"] == "-1/3");
  CHECK(j["quadratic"]["b"] == 0);
  const auto i = run_example("oracle", "sl2_iwahori.json");
  CHECK(json::parse(i.report)["q_parameter"] == 5);
}

TEST_CASE("cocycle commands") {
  const json inv = json::parse(run_example("cocycle", "heisenberg_inverse.json").report);
  CHECK(inv["splits"] == true);
  CHECK(inv["exhaustive_agrees"] == true);
  const json h = json::parse(run_example("cocycle", "heisenberg.json").report);
  CHECK(h["splits"] == false);
  CHECK(h["exhaustive_agrees"] == true);
  CHECK_FALSE(h.contains("splitting"));
}

TEST_CASE("hecke and qparams") {
  const json b = json::parse(run_example("hecke", "sl2_iwahori.json").report);
  CHECK(b["relations"]["ok"] == true);
  CHECK(b["twisted_lattice_algebra"] == false);
  CHECK(b["generators"].size() == 2);
  for (const auto& g : b["generators"]) CHECK(g["exponent"] == 1);
  CHECK(b["weyl_order_sigma"] == b["weyl_order_dual"]);

  const json l = json::parse(run_example("hecke", "sl2_legendre.json").report);
  CHECK(l["twisted_lattice_algebra"] == true);
  CHECK(l["generators"].empty());
  CHECK(l["center_lattice_rank"] == 1);

  const json c = json::parse(run_example("hecke", "c2_unequal.json").report);
  CHECK(c["relations"]["ok"] == true);
  CHECK(c["source"] == "parameters");

  const json p = json::parse(run_example("hecke", "pgl2_twisted.json").report);
  CHECK(p["relations"]["ok"] == true);
  CHECK(p["omega_generators"].size() == 1);

  const json q = json::parse(run_example("qparams", "sl2_legendre.json").report);
  CHECK(q["reflecting_roots"][0]["q"] == 1);
  CHECK(q["reflecting_roots"][0]["norm_pairing"] == "1/2");
}

TEST_CASE("validate") {
  const auto good = run_example("validate", "sl2_legendre.json");
  CHECK(good.exit_code == 0);
  CHECK(json::parse(good.report)["valid"] == true);

  const auto bad = run_example("validate", "bad_theta.json");
  CHECK(bad.exit_code == 1);
  const json d = json::parse(bad.report)["diagnostics"];
  REQUIRE(d.size() == 1);
  CHECK(d[0].get<std::string>().find("congruence") != std::string::npos);

  const auto nc = run_example("validate", "non_cartan.json");
  CHECK(nc.exit_code == 1);
  CHECK(json::parse(nc.report)["diagnostics"][0].get<std::string>().find("Cartan") != std::string::npos);

  const auto pp = run_text("validate", R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]], "frobenius": {"q": 6}})");
  CHECK(pp.exit_code == 1);
  CHECK(json::parse(pp.report)["diagnostics"][0].get<std::string>().find("prime power") != std::string::npos);

  const auto facet = run_text("validate", R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]], "facet": {"J": [0, 1]}})");
  CHECK(facet.exit_code == 1);
}

TEST_CASE("exit codes") {
  CHECK(run_text("stab", "{not json").exit_code == 1);
  CHECK(run_text("stab", R"({"rank": 1})").exit_code == 1);
  CHECK(run_text("stab", R"({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]})").exit_code == 1);  // no theta
  CHECK(run_text("oracle", R"({"oracle": {"group": "SL2", "q": 6}})").exit_code == 1);
  CHECK(run_text("oracle", R"({"oracle": {"group": "SL2", "q": 5, "theta": ["1/3"]}})").exit_code == 1);

  cli::JobSpec guarded;
  guarded.command = "stab";
  guarded.max_group_order = 2;
  const auto g = cli::run_document(guarded, read_file(examples_dir() + "/sl3_barycentric.json"));
  CHECK(g.exit_code == 2);
  CHECK_FALSE(g.diagnostic.empty());

  cli::JobSpec missing;
  missing.command = "stab";
  missing.input = examples_dir() + "/does_not_exist.json";
  CHECK(cli::run(missing).exit_code == 1);
}

TEST_CASE("determinism, round trip, and text format") {
  for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
           {"stab", "sl3_barycentric.json"}, {"oracle", "sl2_legendre.json"}, {"hecke", "sl2_iwahori.json"},
           {"cocycle", "heisenberg.json"}, {"qparams", "sl2_legendre.json"}}) {
    CAPTURE(cmd);
    const auto a = run_example(cmd, file), b = run_example(cmd, file);
    REQUIRE(a.exit_code == 0);
    CHECK(a.report == b.report);
    CHECK(json::parse(a.report).dump(2) + "\n" == a.report);
    const auto t = run_example(cmd, file, "text");
    CHECK(t.report.find("command: " + cmd) != std::string::npos);
  }
}

TEST_CASE("binary") {
  if (!std::getenv("DZB_BINARY")) {
    MESSAGE("DZB_BINARY not set; binary checks skipped");
    return;
  }
  const std::string ex = examples_dir();
  CHECK(run_binary("stab --input " + ex + "/sl3_barycentric.json") == 0);
  CHECK(run_binary("validate --input " + ex + "/bad_theta.json") == 1);
  CHECK(run_binary("stab --input " + ex + "/sl3_barycentric.json --max-group-order 2") == 2);
  CHECK(run_binary("frobnicate --input " + ex + "/sl3_barycentric.json") == 1);
  CHECK(run_binary("stab") == 1);
  const auto out = std::filesystem::temp_directory_path() / "dzb_cli_test_report.json";
  CHECK(run_binary("oracle --input " + ex + "/sl2_legendre.json --out " + out.string()) == 0);
  const json j = json::parse(read_file(out.string()));
  CHECK(j["q_parameter"] == 1);
  std::filesystem::remove(out);
}
