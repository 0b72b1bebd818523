#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr merged into stdout when merge is set.
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(A5CURVES_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("icosa group") {
  const auto r = run("icosa group");
  REQUIRE(r.status == 0);
  const auto j = parse(r);
  CHECK(j["order"] == 60);
  CHECK(j["order_profile"]["5"] == 24);
}

TEST_CASE("verify suites") {
  const auto icosa = run("verify --suite icosa");
  CHECK(icosa.status == 0);
  CHECK(parse(icosa)["passed"] == true);

  const auto decomp = run("verify --suite decomp");
  CHECK(decomp.status == 2);
  bool tbar_failed = false;
  const auto report = parse(decomp);
  for (const auto& c : report["checks"])
    if (c["id"] == "qi-model.identity.Tbar") tbar_failed = c["status"] == "fail";
  CHECK(tbar_failed);

  CHECK(run("verify --suite nope").status == 64);
}

TEST_CASE("domain errors exit 1 with a JSON error") {
  const auto r = run("curve --genus 7", true);
  CHECK(r.status == 1);
  const auto j = parse(r);
  CHECK(j["error"] == "NotInLocus");
  CHECK(run("curve --genus 5 --lambda 1").status == 1);
  CHECK(run("curve --genus 29 --lambda 1728").status == 1);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("").status == 64);
  CHECK(run("--format yaml icosa").status == 64);
  CHECK(run("locus --case 1 --emit G").status == 64);
  CHECK(run("curve --genus").status == 64);
}

TEST_CASE("locus equation") {
  const auto r = run("locus --case 1 --emit F");
  REQUIRE(r.status == 0);
  const auto j = parse(r);
  CHECK(j["genus"] == 29);
  bool found = false;
  for (const auto& t : j["F_rescaled"]["terms"])
    if (t["i1"] == 0 && t["i2"] == 4) {
      found = true;
      CHECK(t["c"] == "20104543529222176607891970551365425625");
    }
  CHECK(found);
}

TEST_CASE("output is independent of the thread count") {
  const auto one = run("--threads 1 locus --case 1 --emit fibers");
  const auto two = run("--threads 2 locus --case 1 --emit fibers");
  REQUIRE(one.status == 0);
  CHECK(one.out == two.out);
}

TEST_CASE("curves and invariants") {
  const auto c = run("curve --genus 29 --lambda 2 --model x5");
  REQUIRE(c.status == 0);
  CHECK(parse(c).dump().find("\"genus\":29") != std::string::npos);

  const auto inv = run("invariants --genus 29 --lambda 2 --dihedral");
  REQUIRE(inv.status == 0);
  CHECK(parse(inv)["dihedral"]["relation"] == "Z2xA5");

  const auto text = run("--format text invariants --genus 29 --lambda 2 --dihedral");
  CHECK(text.status == 0);
  CHECK(text.out.find("dihedral.relation: Z2xA5") != std::string::npos);
}

TEST_CASE("decomposition inner components") {
  const auto r = run("decomp check --inner x2");
  REQUIRE(r.status == 0);
  CHECK(parse(r)["found"] == true);
}
