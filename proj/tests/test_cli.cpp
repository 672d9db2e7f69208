#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HKDUAL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(HKDUAL_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("command examples") {
  const auto ptype = run("polarization-type --form " + data("forms/phi_1_3.txt"));
  CHECK(ptype.code == 0);
  CHECK(ptype.out.find("(1,3)") != std::string::npos);

  const auto literal = run("polarization-type --matrix '[[0,0,1,0],[0,0,0,3],[-1,0,0,0],[0,-3,0,0]]'");
  CHECK(literal.code == 0);
  CHECK(literal.out.find("(1,3)") != std::string::npos);

  const auto kernel = run("kernel --dual --d1 1 --d2 3");
  CHECK(kernel.code == 0);
  CHECK(kernel.out.find("Z/3 ⊕ Z/3") != std::string::npos);

  const auto fujiki = run("fujiki --lattice kum2 --vectors h,h,x,x");
  CHECK(fujiki.code == 0);
  CHECK(fujiki.out.find("= 6") != std::string::npos);

  const auto report = run("dual-kummer-report");
  CHECK(report.code == 0);
  CHECK(report.out.find("FLAGGED") != std::string::npos);
  CHECK(report.out.find("36") != std::string::npos);
  CHECK(report.out.find("18") != std::string::npos);
}

TEST_CASE("verify-paper runs within its time budget") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run("verify-paper");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(secs < 10.0);
  CHECK(r.out.find("FLAGGED") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);

  const auto galois = run("verify-paper --only galois --json");
  CHECK(galois.code == 0);
  const auto doc = nlohmann::json::parse(galois.out);
  for (const auto& c : doc.at("checks")) CHECK(c.at("family") == "galois");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code != 0);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("kernel --d1 2 --d2 3").code == 2);
  CHECK(run("kernel --d1 x --d2 3").code == 2);
  CHECK(run("polarization-type --matrix '[[1,0],[0,1]]'").code == 2);
  CHECK(run("polarization-type --form /no/such/file").code == 2);
  CHECK(run("galois --n 3 --s 0").code == 2);
  CHECK(run("verify-paper --only nothing").code == 2);
  CHECK(run("llv --so 9 --weight 1,2,0,0").code == 2);
  CHECK(run("snf --matrix '[[1,2],[3]]'").code == 2);
}

TEST_CASE("JSON output of every subcommand round-trips byte-identically") {
  const std::array<std::string, 12> commands = {
      "verify-paper --only kernel",
      "snf --matrix '[[2,4],[6,8]]'",
      "polarization-type --form " + data("forms/phi_1_3.txt"),
      "kernel --d1 1 --d2 3 --dual",
      "galois --n 2",
      "factorization --d1 1 --d2 3",
      "fujiki --lattice kum2",
      "cup-l --d1 1 --d2 3",
      "orbits",
      "orbits --involutions --n 2",
      "dual-kummer-report --ledger " + data("ledgers/kum2_declared.json"),
      "llv --so 9 --weight 1/2,1/2,1/2,1/2"};
  for (const auto& c : commands) {
    const auto r = run(c + " --json");
    INFO(c);
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schemaVersion") == 1);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("emitted ledgers match the shipped files") {
  for (const std::string which : {"model", "declared"}) {
    const auto r = run("dual-kummer-report --emit-ledger " + which);
    CHECK(r.code == 0);
    std::ifstream in(data("ledgers/kum2_" + which + ".json"));
    std::ostringstream file;
    file << in.rdbuf();
    CHECK(r.out == file.str());
  }
  const auto reread = run("orbits --ledger " + data("ledgers/kum2_model.json"));
  CHECK(reread.code == 0);
  CHECK(reread.out.find("36 orbits") != std::string::npos);
  CHECK(run("dual-kummer-report --emit-ledger other").code == 2);
}
