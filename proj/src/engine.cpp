#include "qharm/identity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace qharm {

std::string Params::to_string() const {
  std::string out;
  const auto put = [&](const char* name, const std::optional<long>& v) {
    if (!v) return;
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(*v);
  };
  put("n", n);
  put("r", r);
  put("p", p);
  put("m", m);
  put("k", k);
  return out;
}

std::string to_string(Mode mode) { return mode == Mode::symbolic ? "symbolic" : "sampled"; }
std::string to_string(Status status) { return status == Status::pass ? "pass" : "fail"; }

namespace {

long upper_bound_for(char name, const Grid& grid) {
  switch (name) {
    case 'n': return grid.n_max;
    case 'r': return grid.r_max;
    case 'p': return grid.p_max;
    case 'k': return grid.k_max;
  }
  throw std::logic_error("no grid bound for parameter");
}

std::optional<long>& slot(Params& p, char name) {
  switch (name) {
    case 'n': return p.n;
    case 'r': return p.r;
    case 'p': return p.p;
    case 'm': return p.m;
    case 'k': return p.k;
  }
  throw std::logic_error("unknown parameter name");
}

void enumerate_from(const IdentitySpec& spec, const Grid& grid, std::size_t depth, Params& cur,
                    std::vector<Params>& out) {
  if (depth == spec.ranges.size()) {
    if (!spec.domain || spec.domain(cur)) out.push_back(cur);
    return;
  }
  const ParamRange& range = spec.ranges[depth];
  // m is bounded by the current r rather than by the grid.
  const long hi = range.name == 'm' ? *cur.r - 1 : upper_bound_for(range.name, grid);
  for (long v = range.min; v <= hi; ++v) {
    slot(cur, range.name) = v;
    enumerate_from(spec, grid, depth + 1, cur, out);
  }
  slot(cur, range.name).reset();
}

bool in_domain(const IdentitySpec& spec, const Params& params) {
  Params probe, copy = params;
  for (const auto& range : spec.ranges) {
    const std::optional<long> v = slot(copy, range.name);
    if (!v || *v < range.min) return false;
    if (range.name == 'm' && *v >= *params.r) return false;  // r precedes m in every range list
    slot(probe, range.name) = v;
  }
  if (probe != params) return false;  // stray parameters
  return !spec.domain || spec.domain(params);
}

template <class T>
std::string render(const T& v) {
  if constexpr (std::is_same_v<T, QRatFn>)
    return v.to_string();
  else
    return qharm::to_string(v);
}

}  // namespace

std::vector<Params> enumerate_instances(const IdentitySpec& spec, const Grid& grid) {
  std::vector<Params> out;
  if (!spec.verifiable) return out;
  Params cur;
  enumerate_from(spec, grid, 0, cur, out);
  return out;
}

std::vector<BigRat> sample_points(long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sampled mode needs at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  std::vector<BigRat> points;
  std::set<BigRat> seen;
  while (static_cast<long>(points.size()) < count) {
    BigRat x = make_rat(num(rng), den(rng));
    if (x == 0 || x == 1 || x == -1 || !seen.insert(x).second) continue;
    points.push_back(x);
  }
  return points;
}

Verifier::Verifier(VerifyOptions options) : options_(options) {
  if (options_.mode == Mode::sampled) points_ = sample_points(options_.points, options_.seed);
}

Verifier::~Verifier() = default;

std::vector<InstanceResult> Verifier::verify(const IdentitySpec& spec, const Params& params) {
  std::vector<InstanceResult> out;
  out.reserve(spec.variants.size());
  for (const auto& v : spec.variants) out.push_back({spec.id, v.label, params, Status::fail, {}, {}});

  const auto fail_all = [&](const std::string& why) {
    for (auto& r : out) {
      r.status = Status::fail;
      r.lhs = "error: " + why;
      r.rhs.clear();
    }
  };

  // Compares a precomputed lhs against each variant, recording witnesses.
  const auto judge = [&](auto& ws, const auto& lhs_builder, auto rhs_of, const std::string& prefix, bool first) {
    using T = std::remove_cvref_t<decltype(lhs_builder(ws, params))>;
    const T lhs = lhs_builder(ws, params);
    for (std::size_t i = 0; i < spec.variants.size(); ++i) {
      InstanceResult& res = out[i];
      if (!first && res.status == Status::fail) continue;
      try {
        const T rhs = rhs_of(spec.variants[i])(ws, params);
        if (lhs == rhs) {
          res.status = Status::pass;
        } else {
          res.status = Status::fail;
          res.lhs = prefix + render(lhs);
          res.rhs = prefix + render(rhs);
        }
      } catch (const std::exception& e) {
        res.status = Status::fail;
        res.lhs = prefix + "error: " + e.what();
        res.rhs.clear();
      }
    }
  };

  try {
    if (spec.field == ScalarField::rationals) {
      if (!classical_) classical_ = std::make_unique<ClassicalWorkspace>();
      judge(*classical_, spec.lhs.classical, [](const Variant& v) { return v.rhs.classical; }, "", true);
    } else if (options_.mode == Mode::symbolic) {
      if (!symbolic_) symbolic_ = std::make_unique<SymbolicWorkspace>();
      judge(*symbolic_, spec.lhs.symbolic, [](const Variant& v) { return v.rhs.symbolic; }, "", true);
    } else {
      if (point_ws_.empty())
        for (const auto& x : points_) point_ws_.push_back(std::make_unique<PointWorkspace>(x));
      for (std::size_t i = 0; i < point_ws_.size(); ++i) {
        const std::string prefix = "at q=" + to_string(points_[i]) + ": ";
        judge(*point_ws_[i], spec.lhs.point, [](const Variant& v) { return v.rhs.point; }, prefix, i == 0);
      }
    }
  } catch (const std::exception& e) {
    fail_all(e.what());
  }
  return out;
}

InstanceResult verify_instance(std::string_view id, std::string_view variant, const Params& params,
                               const VerifyOptions& options) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) throw std::invalid_argument("unknown identity id: " + std::string(id));
  const auto it = std::find_if(spec->variants.begin(), spec->variants.end(),
                               [&](const Variant& v) { return v.label == variant; });
  if (it == spec->variants.end())
    throw std::invalid_argument("unknown variant '" + std::string(variant) + "' for " + spec->id);
  if (!spec->verifiable || !in_domain(*spec, params))
    throw std::invalid_argument("parameters " + params.to_string() + " outside the domain of " + spec->id);
  Verifier verifier(options);
  auto results = verifier.verify(*spec, params);
  return results[static_cast<std::size_t>(it - spec->variants.begin())];
}

namespace {

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QHARM_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

auto sort_key(const InstanceResult& r) {
  return std::tie(r.id, r.variant, r.params.n, r.params.r, r.params.p, r.params.m, r.params.k);
}

}  // namespace

SuiteReport run_suite(const std::vector<std::string>& ids, const Grid& grid, const VerifyOptions& options,
                      const std::string& suite) {
  if (ids.empty()) throw std::invalid_argument("empty identity selection");
  if (grid.n_max < 1 || grid.r_max < 1 || grid.p_max < 1 || grid.k_max < 1)
    throw std::invalid_argument("empty grid: every bound must be at least 1");
  if (options.mode == Mode::sampled && options.points < 1)
    throw std::invalid_argument("sampled mode needs at least one point");

  std::vector<const IdentitySpec*> specs;
  for (const auto& id : ids) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw std::invalid_argument("unknown identity id: " + id);
    if (std::find(specs.begin(), specs.end(), spec) == specs.end()) specs.push_back(spec);
  }
  std::sort(specs.begin(), specs.end(), [](auto* a, auto* b) { return a->id < b->id; });

  SuiteReport report;
  report.suite = suite;
  report.grid = grid;
  report.options = options;

  struct Job {
    const IdentitySpec* spec;
    Params params;
  };
  std::vector<Job> jobs;
  for (const auto* spec : specs) {
    if (!spec->verifiable) {
      report.unverifiable.emplace_back(spec->id, spec->note);
      continue;
    }
    for (auto& p : enumerate_instances(*spec, grid)) jobs.push_back({spec, std::move(p)});
  }

  std::vector<std::vector<InstanceResult>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    try {
      Verifier verifier(options);
      for (std::size_t i = next++; i < jobs.size(); i = next++) slots[i] = verifier.verify(*jobs[i].spec, jobs[i].params);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = jobs.size();
    }
  };
  const unsigned workers = worker_count(jobs.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const bool covered = std::any_of(slots[i].begin(), slots[i].end(),
                                     [](const InstanceResult& r) { return r.status == Status::pass; });
    if (!covered) report.uncovered.push_back({jobs[i].spec->id, jobs[i].params});
    for (auto& r : slots[i]) report.results.push_back(std::move(r));
  }
  std::sort(report.results.begin(), report.results.end(),
            [](const InstanceResult& a, const InstanceResult& b) { return sort_key(a) < sort_key(b); });

  for (const auto& r : report.results) {
    if (report.tallies.empty() || report.tallies.back().id != r.id || report.tallies.back().variant != r.variant)
      report.tallies.push_back({r.id, r.variant, 0, 0});
    (r.status == Status::pass ? report.tallies.back().pass : report.tallies.back().fail)++;
    (r.status == Status::pass ? report.pass : report.fail)++;
  }
  return report;
}

}  // namespace qharm
