#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "support/schema_check.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + PKGAMMA_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pkgamma_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("eval prints value, error and method") {
  Run r = run("eval gamma --p 1 --k 1 --x 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("value = 24\n") != std::string::npos);
  CHECK(r.out.find("method = closed") != std::string::npos);

  r = run("eval gamma --p 2 --k 3 --x 3 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(j["method"] == "closed");
  CHECK(j["abs_err"].is_number());
  CHECK(j["inputs"]["x"] == 3.0);
}

TEST_CASE("eval at a pole exits 2 with a reason") {
  Run r = run("eval gamma --k 1 --x -2 --format json");
  CHECK(r.code == 2);
  const json j = json::parse(r.out);
  CHECK(j["reason"] == "pole at index 2");
  CHECK(run("eval gamma --k 1 --x -2").code == 2);
  CHECK(run("eval gamma --k -1 --x 2").code == 2);
  CHECK(run("eval hyper --a 1:2:1,1:1:1 --b 2:1:1 --x 0.9").code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").code == 1);
  CHECK(run("eval").code == 1);
  CHECK(run("eval gamma").code == 1);
  CHECK(run("eval gamma --x abc").code == 1);
  CHECK(run("eval gamma --x inf").code == 1);
  CHECK(run("eval delta --x 1").code == 1);
  CHECK(run("eval gamma --x 1 --method series").code == 1);
  CHECK(run("eval gamma --x 1 --form other").code == 1);
  CHECK(run("eval beta --x 1").code == 1);
  CHECK(run("eval poch --x 1 --n 1.5").code == 1);
  CHECK(run("eval gamma --x 1 --bogus 3").code == 1);
  CHECK(run("audit delta").code == 1);
  CHECK(run("audit all --grid ''").code == 1);
  CHECK(run("audit all --grid 'x='").code == 1);
  CHECK(run("audit all --grid 'k=-1'").code == 1);
  CHECK(run("audit all --grid 'q=1'").code == 1);
  CHECK(run("audit gamma --tol 9.99=1e-3").code == 1);
  CHECK(run("table gamma --x 3:1:1").code == 1);
  CHECK(run("table gamma --x 1:3:0").code == 1);
  CHECK(run("table gamma --x 0:2000000:1").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("table rows") {
  Run r = run("table gamma --p 1 --k 1 --x 1:3:1");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,value,abs_err");
  std::getline(lines, line);
  CHECK(line.rfind("1,1,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("2,1,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("3,2,", 0) == 0);
  CHECK_FALSE(std::getline(lines, line));

  r = run("table beta --k 2 --y 2 --x 2:2:1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n2,0.5,") != std::string::npos);

  r = run("table psi --p 1 --k 1 --x 1:2:1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n1,-0.57721566490153") != std::string::npos);
  CHECK(r.out.find("\n2,0.42278433509846") != std::string::npos);

  r = run("table psi --x 1:2:1 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["value"].get<double>() == doctest::Approx(-0.5772156649015329).epsilon(1e-15));

  // a pole inside the sweep yields a nan row, not an abort
  r = run("table gamma --x -1:1:0.5");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n-1,nan,nan\n") != std::string::npos);
  CHECK(r.out.find("\n0.5,1.7724538509055") != std::string::npos);

  // 17 significant digits
  r = run("table gamma --x 0.5:0.5:1");
  CHECK(r.out.find("\n0.5,1.7724538509055161,") != std::string::npos);
}

TEST_CASE("audit report: deterministic, schema-valid, exit codes") {
  const schema_check::Validator v(schema_check::load_file(PKGAMMA_SCHEMA_PATH));
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  const std::string grid = "--grid 'p=1,2;k=1,2;x=1,2.5;n=0,2;m=2'";
  Run r1 = run("audit all " + grid + " --out " + a.string() + " --workers 1");
  Run r2 = run("audit all " + grid + " --out " + b.string() + " --workers 4");
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out.find("corrected forms: all pass") != std::string::npos);
  const std::string ta = slurp(a);
  CHECK_FALSE(ta.empty());
  CHECK(ta == slurp(b));
  CHECK(v.validate(json::parse(ta)) == "");

  Run j = run("audit gamma --grid 'p=1;k=2;x=1' --format json");
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(v.validate(doc) == "");
  bool seen = false;
  for (const auto& s : doc["summary"])
    if (s["identity_id"] == "2.30") {
      seen = true;
      CHECK(s["printed_pass_rate"] == 0.0);
      CHECK(s["corrected_pass_rate"] == 1.0);
    }
  CHECK(seen);

  CHECK(run("audit gamma --grid 'p=1;k=2;x=1' --out /nonexistent-dir/r.json").code == 3);
  // corrected failures under a zero tolerance
  CHECK(run("audit gamma --grid 'p=1;k=2;x=1' --tol 0").code == 4);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
