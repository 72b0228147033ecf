#include "qharm/identity.hpp"

#include <json.hpp>

#include <sstream>

namespace qharm {

namespace {

using nlohmann::ordered_json;

ordered_json param_json(const std::optional<long>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string opt(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string report_json(const SuiteReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["grid"] = {{"n_max", report.grid.n_max},
               {"r_max", report.grid.r_max},
               {"p_max", report.grid.p_max},
               {"k_max", report.grid.k_max}};
  j["mode"] = to_string(report.options.mode);
  if (report.options.mode == Mode::sampled) {
    j["points"] = report.options.points;
    j["seed"] = report.options.seed;
  }
  ordered_json results = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json e;
    e["id"] = r.id;
    e["variant"] = r.variant;
    e["params"] = {{"n", param_json(r.params.n)},
                   {"r", param_json(r.params.r)},
                   {"p", param_json(r.params.p)},
                   {"m", param_json(r.params.m)},
                   {"k", param_json(r.params.k)}};
    e["status"] = to_string(r.status);
    if (r.status == Status::fail) {
      e["lhs"] = r.lhs;
      e["rhs"] = r.rhs;
    }
    results.push_back(std::move(e));
  }
  j["results"] = std::move(results);
  j["summary"] = {{"pass", report.pass}, {"fail", report.fail}};
  ordered_json tallies = ordered_json::array();
  for (const auto& t : report.tallies)
    tallies.push_back({{"id", t.id}, {"variant", t.variant}, {"pass", t.pass}, {"fail", t.fail}});
  j["tallies"] = std::move(tallies);
  ordered_json uncovered = ordered_json::array();
  for (const auto& u : report.uncovered) uncovered.push_back({{"id", u.id}, {"params", u.params.to_string()}});
  j["uncovered"] = std::move(uncovered);
  ordered_json unverifiable = ordered_json::array();
  for (const auto& [id, note] : report.unverifiable) unverifiable.push_back({{"id", id}, {"note", note}});
  j["unverifiable"] = std::move(unverifiable);
  j["version"] = kEngineVersion;
  return j.dump(2) + "\n";
}

std::string report_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "id,variant,n,r,p,m,k,status\n";
  for (const auto& r : report.results)
    out << csv_field(r.id) << ',' << csv_field(r.variant) << ',' << opt(r.params.n) << ',' << opt(r.params.r) << ','
        << opt(r.params.p) << ',' << opt(r.params.m) << ',' << opt(r.params.k) << ',' << to_string(r.status) << '\n';
  return out.str();
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << " (" << to_string(report.options.mode) << "), grid n<=" << report.grid.n_max
      << " r<=" << report.grid.r_max << " p<=" << report.grid.p_max << " k<=" << report.grid.k_max << '\n';
  for (const auto& t : report.tallies)
    out << "  " << t.id << " [" << t.variant << "]: " << t.pass << " pass, " << t.fail << " fail\n";
  for (const auto& [id, note] : report.unverifiable) out << "  " << id << ": " << note << '\n';
  for (const auto& u : report.uncovered) out << "  NO PASSING VARIANT: " << u.id << ' ' << u.params.to_string() << '\n';
  out << "total: " << report.pass << " pass, " << report.fail << " fail; "
      << (report.ok() ? "every instance has a passing variant" : "some instances have no passing variant") << '\n';
  return out.str();
}

}  // namespace qharm
