// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion also has a wall-clock budget.
//
// usage: acceptance [path/to/qharm [scratch-dir]]

#include "qharm/coefficients.hpp"
#include "qharm/harmonic.hpp"
#include "qharm/identity.hpp"
#include "qharm/qcomb.hpp"
#include "qharm/series.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qharm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

const Tally* find_tally(const SuiteReport& r, const std::string& id, const std::string& variant) {
  for (const auto& t : r.tallies)
    if (t.id == id && t.variant == variant) return &t;
  return nullptr;
}

bool all_pass(const SuiteReport& r, const std::string& id, const std::string& variant) {
  const Tally* t = find_tally(r, id, variant);
  return t && t->fail == 0 && t->pass > 0;
}

std::string verdicts(const SuiteReport& r, const std::string& id) {
  std::string out;
  for (const auto& t : r.tallies)
    if (t.id == id) out += (out.empty() ? "" : ", ") + t.variant + " " + std::to_string(t.pass) + "/" +
                           std::to_string(t.pass + t.fail);
  return id + " {" + out + "}";
}

Grid grid(long n, long r, long p = 1, long k = 1) { return Grid{n, r, p, k}; }

// --- criteria ------------------------------------------------------------

Outcome route_equivalence() {
  Outcome o;
  const SuiteReport rep = run_suite({"ph01", "ph02"}, grid(10, 5));
  o.require(all_pass(rep, "ph01", "as-printed"), "def = ph01");
  o.require(all_pass(rep, "ph02", "as-printed"), "def = ph02");
  o.note(std::to_string(rep.pass) + " instances");
  return o;
}

Outcome order_lowering() {
  Outcome o;
  const SuiteReport rep = run_suite({"ph022"}, grid(8, 5));
  o.require(rep.ok(), "some ph022 instance has no passing reading");
  o.note(verdicts(rep, "ph022"));
  return o;
}

Outcome gph01_and_recurrences() {
  Outcome o;
  const SuiteReport g = run_suite({"gph01"}, grid(8, 5, 1, 8));
  o.require(all_pass(g, "gph01", "as-printed"), "gph01");
  const SuiteReport rec = run_suite({"qh11", "qh13"}, grid(10, 5));
  o.require(all_pass(rec, "qh11", "as-printed") && all_pass(rec, "qh13", "as-printed"), "qh11/qh13 via engine");
  bool zero = true;
  for (long n = 1; n <= 10; ++n)
    for (long r = 1; r <= 5; ++r)
      zero = zero && qh_recurrence_residual(QRecurrence::qh11, n, r).is_zero() &&
             qh_recurrence_residual(QRecurrence::qh13, n, r).is_zero();
  o.require(zero, "qh11/qh13 residuals");
  o.note(std::to_string(g.pass) + " gph01 instances");
  return o;
}

Outcome eq_hq1() {
  Outcome o;
  const SuiteReport rep = run_suite({"eq:hq1"}, grid(10, 4));
  o.require(all_pass(rep, "eq:hq1", "as-printed:first-form"), "first form");
  o.require(all_pass(rep, "eq:hq1", "as-printed:second-form"), "second form");
  const IdentitySpec* spec = find_identity("eq:hq1");
  SymbolicWorkspace ws;
  bool agree = true;
  for (const auto& p : enumerate_instances(*spec, grid(10, 4)))
    agree = agree && spec->variants[0].rhs.symbolic(ws, p) == spec->variants[1].rhs.symbolic(ws, p);
  o.require(agree, "the two right-hand sides agree");
  return o;
}

Outcome qhypersturc1() {
  Outcome o;
  for (long r = 1; r <= 3; ++r)
    for (long n = 1; n <= 8; ++n)
      for (auto kind : {ForwardCoef::Aq, ForwardCoef::Bq})
        o.require(coef_q(kind, CoefVariant::as_printed, 1, r, n) == coef_q(kind, CoefVariant::corrected, 1, r, n),
                  "variants coincide at p = 1");
  const SuiteReport rep = run_suite({"qhypersturc1", "ph08"}, grid(8, 3, 4));
  for (const auto& res : rep.results)
    if (res.id == "qhypersturc1" && *res.params.p == 1)
      o.require(res.status == Status::pass, "p = 1 instance " + res.params.to_string());
  o.require(rep.ok(), "an instance with no passing variant");
  // The engine's verdict is brute force; re-derive it at sample points.
  VerifyOptions sampled;
  sampled.mode = Mode::sampled;
  sampled.seed = 4242;
  const SuiteReport smp = run_suite({"qhypersturc1", "ph08"}, grid(8, 3, 4), sampled);
  bool same = smp.results.size() == rep.results.size();
  for (std::size_t i = 0; same && i < rep.results.size(); ++i) same = smp.results[i].status == rep.results[i].status;
  o.require(same, "sampled verdicts match");
  o.note(verdicts(rep, "qhypersturc1"));
  o.note(verdicts(rep, "ph08"));
  return o;
}

Outcome rising_weights() {
  Outcome o;
  const SuiteReport rep = run_suite({"qharmonicconsec", "shifted-weight", "triple-product-classical", "triple-product-q"},
                                    grid(8, 3, 3));
  o.require(rep.ok(), "an instance with no passing variant");
  o.require(all_pass(rep, "qharmonicconsec", "corrected"), "qharmonicconsec with corrected A_q/B_q");
  o.require(all_pass(rep, "shifted-weight", "via-A1q-corrected"), "shifted-weight via A_1q");
  o.require(all_pass(rep, "triple-product-classical", "q-to-1-reading"), "triple product, q -> 1 reading");
  bool flagged = false;
  for (const auto& u : rep.unverifiable) flagged = flagged || (u.first == "triple-product-q" &&
                                                               u.second.rfind("unverifiable-as-printed", 0) == 0);
  o.require(flagged, "triple-product-q reported unverifiable-as-printed");
  o.note(verdicts(rep, "qharmonicconsec"));
  o.note(verdicts(rep, "shifted-weight"));
  return o;
}

Outcome backward() {
  Outcome o;
  const SuiteReport q = run_suite({"qbhh1"}, grid(10, 4));
  o.require(all_pass(q, "qbhh1", "as-printed"), "qbhh1");
  const SuiteReport b = run_suite({"bhh2", "cq-dq-backward"}, grid(10, 4, 4));
  o.require(all_pass(b, "bhh2", "recurrence"), "bhh2");
  o.require(b.ok(), "a Cq/Dq instance with no passing variant");
  for (long r = 1; r <= 4; ++r)
    for (long n = 1; n <= 10; ++n) {
      const BigRat a = make_rat(n * (n + r), r * (r + 1));
      const BigRat bb = rising_factorial(n, r) * ((2 * r + 1) * n + r * r) /
                        (BigRat(factorial(r - 1)) * r * r * (r + 1) * (r + 1));
      o.require(coef_backward_classical(BackwardClassicalCoef::A2, 1, r, n) == a &&
                    coef_backward_classical(BackwardClassicalCoef::B2, 1, r, n) == bb,
                "A_2/B_2 at p = 1 match the closed form");
    }
  o.note(verdicts(b, "cq-dq-backward"));
  return o;
}

Outcome classical_sums() {
  Outcome o;
  const SuiteReport rep = run_suite({"prop1", "prop2"}, grid(12, 1, 1, 5));
  o.require(all_pass(rep, "prop1", "as-printed") && all_pass(rep, "prop2", "as-printed"), "Props 1 and 2");
  for (long n = 1; n <= 30; ++n)
    for (long k = 0; k <= 8; ++k) {
      const BigRat brute = sum_powers(n, k, PowerSumRoute::brute);
      o.require(sum_powers(n, k, PowerSumRoute::ber) == brute && sum_powers(n, k, PowerSumRoute::ber1) == brute,
                "sum_powers routes");
    }
  o.require(bernoulli_number(1) == make_rat(1, 2), "B_1 = 1/2");
  // b_n from t/(e^t - 1): sum_{j<=n} C(n+1, j) b_j = 0 for n >= 1.
  std::vector<BigRat> b{BigRat(1)};
  for (long n = 1; n <= 12; ++n) {
    BigRat acc = 0;
    for (long j = 0; j < n; ++j) acc += BigRat(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(-acc / (n + 1));
  }
  for (long n = 0; n <= 12; ++n)
    o.require(bernoulli_number(n) == (n % 2 ? -1 : 1) * b[static_cast<std::size_t>(n)], "B_n = (-1)^n b_n");
  return o;
}

Outcome generating_functions() {
  Outcome o;
  for (long r = 0; r <= 4; ++r) {
    for (const auto& x : genfun_check(GenfunKind::q, r, 12)) o.require(x.is_zero(), "q-series r=" + std::to_string(r));
    for (const auto& x : genfun_check(GenfunKind::classical, r, 12))
      o.require(x.is_zero(), "classical series r=" + std::to_string(r));
  }
  return o;
}

Outcome limits() {
  Outcome o;
  const BigRat e200 = abs(BigRat(diag_ratio_classical(200) - 4));
  const BigRat e50 = abs(BigRat(diag_ratio_classical(50) - 4));
  o.require(e200 < make_rat(1, 20) && e200 < e50, "Cereceda ratio");
  o.note("|r_200 - 4| = " + to_decimal(e200, 6));
  for (const BigRat& q0 : {make_rat(1, 2), make_rat(1, 3), make_rat(3, 4)}) {
    const BigRat e40 = abs(BigRat(diag_ratio_q(40, q0) - q0));
    const BigRat e10 = abs(BigRat(diag_ratio_q(10, q0) - q0));
    o.require(e40 < make_rat(1, 20) && e40 < e10, "q-diagonal ratio at q0 = " + to_string(q0));
    o.note("q0=" + to_string(q0) + ": " + to_decimal(e40, 6));
  }
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli, const std::string& dir) {
  Outcome o;
  const std::string a = dir + "/acceptance_a.json", b = dir + "/acceptance_b.json";
  for (const auto& path : {a, b}) {
    const std::string cmd = cli + " verify --ids all --report " + path + " > /dev/null";
    o.require(std::system(cmd.c_str()) == 0, "verify exit status");
  }
  const std::string ja = slurp(a), jb = slurp(b);
  o.require(!ja.empty() && ja == jb, "reports byte-identical");
  o.note(std::to_string(ja.size()) + " bytes");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : QHARM_CLI;
  const std::string dir = argc > 2 ? argv[2] : std::filesystem::temp_directory_path().string();
  const std::vector<Criterion> criteria{
      {1, "route equivalence def = ph01 = ph02, n <= 10, r <= 5", 10, route_equivalence},
      {2, "ph022 binomial readings, 0 <= m < r <= 5, n <= 8", 30, order_lowering},
      {3, "gph01 for n, k <= 8, r <= 5; qh11/qh13 residuals n <= 10, r <= 5", 30, gph01_and_recurrences},
      {4, "eq:hq1 both forms, n <= 10, r <= 4", 10, eq_hq1},
      {5, "qhypersturc1 variants p <= 4, r <= 3, n <= 8; ph08 verdict", 120, qhypersturc1},
      {6, "qharmonicconsec, shifted weight, triple product", 60, rising_weights},
      {7, "backward sums qbhh1, bhh2, Cq/Dq", 60, backward},
      {8, "classical power sums, Props 1-2, Bernoulli convention", 10, classical_sums},
      {9, "generating functions, 12 coefficients, r <= 4", 30, generating_functions},
      {10, "diagonal ratio limits", 60, limits},
      {11, "byte-identical verify reports", 600, [&] { return determinism(cli, dir); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.require(false, "over the time budget");
    if (!o.ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_s);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing << "]"
              << (o.detail.empty() ? "" : " -- " + o.detail) << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
