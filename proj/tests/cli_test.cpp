#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(QHARM_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

double last_error(const std::string& table) {
  const auto ls = lines(table);
  REQUIRE(ls.size() > 1);
  return std::stod(ls.back().substr(ls.back().rfind('\t') + 1));
}

std::string tmp(const char* name) { return std::string(QHARM_TMP) + "/" + name; }

}  // namespace

TEST_CASE("compute") {
  CHECK(run("compute q-hyperharmonic --n 2 --r 2").out == "(q+2q^2+2q^3)/(1+q)\n");
  CHECK(run("compute harmonic --n 3").out == "11/6\n");
  CHECK(run("compute q-binomial --n 4 --k 2").out == "1+q+2q^2+q^3+q^4\n");
  CHECK(run("compute hyperharmonic --n 3 --r 2").out == "13/3\n");
  CHECK(run("compute bernoulli --n 1").out == "1/2\n");
  CHECK(run("compute q-stirling1u --n 2 --k 2").out == "q\n");
  CHECK(run("compute q-harmonic --n 2 --at-q 1/2 --limit-q1").out == "(1+2q)/(1+q)\nat q=1/2: 4/3\nq->1: 3/2\n");

  CHECK(run("compute q-harmonic --n 2 --at-q 0.5").code == 2);
  CHECK(run("compute harmonic").code == 2);
  CHECK(run("compute harmonic --n -1").code == 2);
  CHECK(run("compute widget --n 1").code == 2);
  CHECK(run("compute harmonic --n 2 --limit-q1").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("verify") {
  const Run rec = run("verify --ids qh11,qh13 --n-max 6 --r-max 4 --format text");
  CHECK(rec.code == 0);
  CHECK(rec.out.find("qh11 [as-printed]: 24 pass, 0 fail") != std::string::npos);

  const std::string all = tmp("cli_all.json");
  CHECK(run("verify --ids all --n-max 1 --r-max 1 --p-max 1 --report " + all).code == 0);
  const auto j = nlohmann::json::parse(slurp(all));
  std::set<std::string> ids;
  for (const auto& r : j["results"]) ids.insert(r["id"].get<std::string>());
  for (const auto& u : j["unverifiable"]) ids.insert(u["id"].get<std::string>());
  const auto listed = lines(run("list").out);
  long registered = 0;
  for (const auto& l : listed)
    if (!l.empty() && l[0] != ' ') {
      ++registered;
      CHECK(ids.count(l.substr(0, l.find(' '))) == 1);
    }
  CHECK(registered == static_cast<long>(ids.size()));
  CHECK(j["version"] == "qharm-1.0.0");
  CHECK(j["grid"]["n_max"] == 1);

  const std::string st = tmp("cli_sturc.json");
  CHECK(run("verify --ids qhypersturc1 --n-max 6 --r-max 3 --p-max 3 --report " + st).code == 0);
  const auto js = nlohmann::json::parse(slurp(st));
  std::set<std::string> variants;
  for (const auto& r : js["results"]) variants.insert(r["variant"].get<std::string>());
  CHECK(variants == std::set<std::string>{"as-printed", "corrected"});

  const Run csv = run("verify --ids ph01 --n-max 2 --r-max 1 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "id,variant,n,r,p,m,k,status\nph01,as-printed,1,1,,,,pass\nph01,as-printed,2,1,,,,pass\n");

  const Run unknown = run("verify --ids ph01,bogus");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("bogus") != std::string::npos);
  CHECK(unknown.out.find("qhypersturc1") != std::string::npos);

  CHECK(run("verify --ids ph01 --n-max 0").code == 2);
  CHECK(run("verify --ids ph01 --mode fuzzy").code == 2);
  CHECK(run("verify --ids ph01 --format xml").code == 2);
}

TEST_CASE("verify reports are byte-identical across runs and modes") {
  const std::string a = tmp("cli_det_a.json"), b = tmp("cli_det_b.json");
  CHECK(run("verify --ids all --report " + a).code == 0);
  CHECK(run("verify --ids all --report " + b).code == 0);
  CHECK(slurp(a) == slurp(b));

  const std::string s1 = tmp("cli_s1.json"), s2 = tmp("cli_s2.json");
  CHECK(run("verify --ids qhypersturc1,ph022 --mode sampled --points 4 --seed 3 --report " + s1).code == 0);
  CHECK(run("verify --ids qhypersturc1,ph022 --mode sampled --points 4 --seed 3 --report " + s2).code == 0);
  CHECK(slurp(s1) == slurp(s2));
  CHECK(nlohmann::json::parse(slurp(s1))["mode"] == "sampled");
}

TEST_CASE("limits") {
  const Run c = run("limits --which cereceda --n-max 200");
  CHECK(c.code == 0);
  CHECK(lines(c.out).size() == 201);
  CHECK(last_error(c.out) < 0.05);

  const Run q = run("limits --which q-diagonal --q 1/2 --n-max 40");
  CHECK(q.code == 0);
  CHECK(last_error(q.out) < 0.05);

  CHECK(run("limits --which q-diagonal --q 3/2").code == 2);
  CHECK(run("limits --which q-diagonal --q -1").code == 2);
  CHECK(run("limits --which cereceda --n-max 1").code == 2);
  CHECK(run("limits --which elsewhere").code == 2);
}
