#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(FPLEVEL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json schema() {
  std::ifstream in(std::string(FPLEVEL_SOURCE_DIR) + "/data/report.schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

// Minimal structural validation against the checked-in schema: every emitted
// key must be declared, and its JSON type must be among the declared ones.
void validate(const json& report) {
  static const json sch = schema();
  const json& props = sch["properties"];
  for (const auto& [key, value] : report.items()) {
    INFO("field: ", key);
    REQUIRE(props.contains(key));
    json types = props[key].contains("type") ? props[key]["type"] : json();
    if (types.is_string()) types = json::array({types});
    if (types.is_null()) continue;  // enum-only entries
    std::string got = value.is_number_integer() ? "integer" : value.type_name();
    bool ok = false;
    for (const auto& t : types) ok = ok || t.get<std::string>() == got;
    CHECK(ok);
  }
  for (const auto& req : sch["required"]) CHECK(report.contains(req.get<std::string>()));
}

}  // namespace

TEST_CASE("level command emits a schema-conforming report") {
  RunResult r = run("level -p 5 -f x^3+y^3+z^3 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  validate(j);
  CHECK(j["level"] == 2);
  CHECK(j["determined"] == true);
  CHECK(j["stabilization_index"] == 1);
  CHECK(j["hsl"] == 1);
  CHECK(j["hasse_witt"] == 0);
  CHECK(j["ordinary"] == false);
  CHECK(j["grid_jump"] == "4/5");
}

TEST_CASE("every subcommand validates against the schema") {
  for (const char* args :
       {"level -p 7 -f x^3+y^3+z^3 --json", "hsl -p 5 -f x^3+y^3+z^3 --json",
        "fpt -p 5 -f x^3+y^3+z^3 --max-e 2 --json", "ordinary -p 7 -f x^3+y^3+z^3 --json",
        "chain -p 5 -f x^3+y^3+z^3 --json", "jump -p 5 -f x^3+y^3+z^3 --json",
        "operator synth -p 5 -f x^3+y^3+z^3 -e 2 --json", "operator fermat -p 5 -n 2 --json"}) {
    CAPTURE(args);
    RunResult r = run(args);
    REQUIRE(r.exit_code == 0);
    validate(json::parse(r.out));
  }
}

TEST_CASE("fpt fields") {
  json j = json::parse(run("fpt -p 5 -f x^3+y^3+z^3 --max-e 2 --json").out);
  CHECK(j["nu"] == json::array({3, 19}));
  CHECK(j["fpt_lower"] == "19/25");
  CHECK(j["fpt_upper"] == "4/5");
}

TEST_CASE("chain lists generators") {
  json j = json::parse(run("chain -p 5 -f x^3+y^3+z^3 --json").out);
  REQUIRE(j["chain"].size() == 3);
  CHECK(j["chain"][0] == json::array({"1"}));
  CHECK(j["chain"][1] == json::array({"x0", "x1", "x2"}));
}

TEST_CASE("operator verify consumes the golden file") {
  std::string op = std::string(FPLEVEL_SOURCE_DIR) + "/data/golden/operator_p5_n2.txt";
  json j = json::parse(
      run("operator verify -p 5 -f x^3+y^3+z^3 -e 2 --op " + op + " --json").out);
  validate(j);
  CHECK(j["valid"] == false);
  CHECK(j["proportional_unit"] == 2);
}

TEST_CASE("exit codes distinguish input errors from cutoff") {
  CHECK(run("level -p 4 -f x --json").exit_code == 1);    // composite modulus
  CHECK(run("level -p 5 -f 'x^+' --json").exit_code == 1);  // syntax
  CHECK(run("level -p 5 --json").exit_code == 1);          // missing polynomial
  RunResult cut = run("hsl -p 5 -f x^3+y^3+z^3 --cutoff 1 --json");
  CHECK(cut.exit_code == 2);
  json j = json::parse(cut.out);
  CHECK(j["code"] == "CutoffExceeded");
  // machine-readable error body in json mode
  json bad = json::parse(run("level -p 5 -f 'x^-1' --json").out);
  CHECK(bad["code"] == "NegativeExponent");
}

TEST_CASE("thread count does not change output") {
  std::string a = run("level -p 5 -f x^3+y^3+z^3 --threads 1 --json").out;
  std::string b = run("level -p 5 -f x^3+y^3+z^3 --threads 4 --json").out;
  CHECK(a == b);
  std::string c = run("operator synth -p 5 -f x^3+y^3+z^3 -e 2 --threads 3 --json").out;
  std::string d = run("operator synth -p 5 -f x^3+y^3+z^3 -e 2 --json").out;
  CHECK(c == d);
}

TEST_CASE("text mode prints human-readable output") {
  RunResult r = run("level -p 5 -f x^3+y^3+z^3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("level = 2") != std::string::npos);
  CHECK(r.out.find("hsl = 1") != std::string::npos);
}

TEST_CASE("polynomial can come from a file") {
  std::string path = "cli_poly_input.txt";
  std::ofstream(path) << "x^3 + y^3 + z^3\n";
  json j = json::parse(run("level -p 5 --file " + path + " --json").out);
  CHECK(j["level"] == 2);
  std::remove(path.c_str());
}
