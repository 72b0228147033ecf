// qharm: compute (q-)hyperharmonic quantities, verify identities, and run
// the diagonal-ratio limit experiments.

#include "qharm/bigrat.hpp"
#include "qharm/harmonic.hpp"
#include "qharm/identity.hpp"
#include "qharm/qcomb.hpp"
#include "qharm/qratfn.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qharm;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

BigRat parse_point(const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::exception&) {
    throw UsageError("expected a rational a/b, got '" + text + "'");
  }
}

// --- compute ------------------------------------------------------------

struct ComputeArgs {
  std::string kind;
  std::optional<long> n, r, k;
  std::optional<std::string> at_q;
  bool limit_q1 = false;
};

long need(const std::optional<long>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError(kind + " needs --" + flag);
  return *v;
}

int cmd_compute(const ComputeArgs& a) {
  std::optional<QRatFn> qvalue;
  std::optional<BigRat> value;
  if (a.kind == "harmonic") {
    value = harmonic(need(a.n, "n", a.kind));
  } else if (a.kind == "hyperharmonic") {
    value = hyperharmonic(need(a.n, "n", a.kind), need(a.r, "r", a.kind), HyperRoute::recursion);
  } else if (a.kind == "bernoulli") {
    value = bernoulli_number(need(a.n, "n", a.kind));
  } else if (a.kind == "q-harmonic") {
    qvalue = q_harmonic(need(a.n, "n", a.kind));
  } else if (a.kind == "q-hyperharmonic") {
    qvalue = q_hyperharmonic(need(a.n, "n", a.kind), need(a.r, "r", a.kind), QHyperRoute::def);
  } else if (a.kind == "q-binomial") {
    qvalue = QRatFn(q_binomial(need(a.n, "n", a.kind), need(a.k, "k", a.kind)));
  } else if (a.kind == "q-stirling2") {
    qvalue = QRatFn(q_stirling2(need(a.n, "n", a.kind), need(a.k, "k", a.kind)));
  } else if (a.kind == "q-stirling1u") {
    qvalue = QRatFn(q_stirling1u(need(a.n, "n", a.kind), need(a.k, "k", a.kind)));
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }

  if (value) {
    if (a.at_q || a.limit_q1) throw UsageError("--at-q and --limit-q1 apply to q-kinds only");
    std::cout << to_string(*value) << '\n';
    return 0;
  }
  std::cout << qvalue->to_string() << '\n';
  if (a.at_q) {
    const BigRat q0 = parse_point(*a.at_q);
    std::cout << "at q=" << to_string(q0) << ": " << to_string(ratfn_eval(*qvalue, q0)) << '\n';
  }
  if (a.limit_q1) std::cout << "q->1: " << to_string(ratfn_limit_q1(*qvalue)) << '\n';
  return 0;
}

// --- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string ids = "all";
  Grid grid;
  std::string mode = "symbolic";
  long points = 8;
  std::uint64_t seed = 1;
  std::optional<std::string> report;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> ids = a.ids == "all" ? identity_ids() : split_ids(a.ids);
  if (ids.empty()) throw UsageError("empty identity selection");
  std::vector<std::string> unknown;
  for (const auto& id : ids)
    if (!find_identity(id)) unknown.push_back(id);
  if (!unknown.empty()) {
    std::cerr << "unknown identity id(s):";
    for (const auto& id : unknown) std::cerr << ' ' << id;
    std::cerr << "\nknown ids:";
    for (const auto& id : identity_ids()) std::cerr << ' ' << id;
    std::cerr << '\n';
    return kUsage;
  }
  VerifyOptions options;
  options.mode = a.mode == "sampled" ? Mode::sampled : Mode::symbolic;
  options.points = a.points;
  options.seed = a.seed;
  SuiteReport report;
  try {
    report = run_suite(ids, a.grid, options, a.ids == "all" ? "all" : a.ids);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::string body;
  if (a.format == "json")
    body = report_json(report);
  else if (a.format == "csv")
    body = report_csv(report);
  else
    body = report_text(report);

  if (a.report) {
    std::ofstream out(*a.report, std::ios::binary);
    if (!out) throw UsageError("cannot write report to " + *a.report);
    out << body;
    if (a.format != "text") std::cout << report_text(report);
  } else {
    std::cout << body;
  }
  return report.ok() ? 0 : 1;
}

// --- limits -------------------------------------------------------------

struct LimitsArgs {
  std::string which;
  std::optional<long> n_max;
  std::string q = "1/2";
};

int cmd_limits(const LimitsArgs& a) {
  const bool classical = a.which == "cereceda";
  const long n_max = a.n_max.value_or(classical ? 200 : 40);
  if (n_max < 2) throw UsageError("--n-max must be at least 2");
  BigRat target = 4;
  if (!classical) {
    target = parse_point(a.q);
    if (abs(target) >= 1 || target == 0) throw UsageError("q-diagonal needs 0 < |q| < 1");
  }
  std::cout << "n\tratio\t|ratio-target|\n";
  for (long n = 1; n <= n_max; ++n) {
    const BigRat ratio = classical ? diag_ratio_classical(n) : diag_ratio_q(n, target);
    std::cout << n << '\t' << to_decimal(ratio) << '\t' << to_decimal(abs(BigRat(ratio - target))) << '\n';
  }
  return 0;
}

int cmd_list() {
  for (const auto& spec : identity_registry()) {
    std::cout << spec.id << "  [" << (spec.field == ScalarField::q_rationals ? "Q(q)" : "Q") << "]  ";
    if (!spec.verifiable) {
      std::cout << "unverifiable\n    " << spec.note << '\n';
      continue;
    }
    for (std::size_t i = 0; i < spec.variants.size(); ++i) std::cout << (i ? ", " : "") << spec.variants[i].label;
    std::cout << "\n    " << spec.statement << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-hyperharmonic numbers: values, identity verification and limits"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "print an exact value");
  c->add_option("kind", compute.kind, "harmonic, hyperharmonic, q-harmonic, q-hyperharmonic, q-binomial, q-stirling2, "
                                      "q-stirling1u or bernoulli")
      ->required();
  c->add_option("--n", compute.n, "index n");
  c->add_option("--r", compute.r, "order r");
  c->add_option("--k", compute.k, "second index k");
  c->add_option("--at-q", compute.at_q, "also evaluate at q = a/b");
  c->add_flag("--limit-q1", compute.limit_q1, "also print the q -> 1 limit");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "verify registered identities on a parameter grid");
  v->add_option("--ids", verify.ids, "comma-separated identity ids, or all")->capture_default_str();
  v->add_option("--n-max", verify.grid.n_max, "largest n")->capture_default_str();
  v->add_option("--r-max", verify.grid.r_max, "largest r")->capture_default_str();
  v->add_option("--p-max", verify.grid.p_max, "largest p")->capture_default_str();
  v->add_option("--k-max", verify.grid.k_max, "largest k")->capture_default_str();
  v->add_option("--mode", verify.mode, "symbolic or sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}))
      ->capture_default_str();
  v->add_option("--points", verify.points, "sample points per instance (sampled mode)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "seed for the sample points")->capture_default_str();
  v->add_option("--report", verify.report, "write the report to this file");
  v->add_option("--format", verify.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  LimitsArgs limits;
  auto* l = app.add_subcommand("limits", "diagonal ratio experiments");
  l->add_option("--which", limits.which, "cereceda or q-diagonal")
      ->required()
      ->check(CLI::IsMember({"cereceda", "q-diagonal"}));
  l->add_option("--n-max", limits.n_max, "largest n (default 200 for cereceda, 40 for q-diagonal)");
  l->add_option("--q", limits.q, "q0 = a/b with |q0| < 1")->capture_default_str();

  auto* ls = app.add_subcommand("list", "list registered identities and variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute);
    if (v->parsed()) return cmd_verify(verify);
    if (l->parsed()) return cmd_limits(limits);
    if (ls->parsed()) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
