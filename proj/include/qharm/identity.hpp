#pragma once

// Instance-wise verification of summation identities for (q-)hyperharmonic
// numbers. Every identity has a brute-force left-hand side and one or more
// right-hand-side variants; a variant passes on an instance when both sides
// agree exactly (symbolic mode) or at every sample point (sampled mode).

#include "qharm/bigrat.hpp"
#include "qharm/harmonic.hpp"
#include "qharm/qratfn.hpp"
#include "qharm/qscalars.hpp"
#include "qharm/series.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace qharm {

inline constexpr const char* kEngineVersion = "qharm-1.0.0";

struct Params {
  std::optional<long> n, r, p, m, k;

  /// "n=3,r=2" with unused parameters left out.
  std::string to_string() const;
  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

/// Upper bounds of the parameter grid. m always runs over 0..r-1.
struct Grid {
  long n_max = 8;
  long r_max = 4;
  long p_max = 4;
  long k_max = 6;
};

enum class ScalarField { rationals, q_rationals };
enum class Mode { symbolic, sampled };
enum class Status { pass, fail };

std::string to_string(Mode mode);
std::string to_string(Status status);

/// Scratch state for one scalar source: the scalars themselves, the
/// hyperharmonic table over them and cached generating functions.
/// Not movable, since the table points at the scalars.
template <class Q>
class QWorkspace {
 public:
  using value_type = typename Q::value_type;

  template <class... Args>
  explicit QWorkspace(Args&&... args) : q(std::forward<Args>(args)...), table(q) {}
  QWorkspace(const QWorkspace&) = delete;
  QWorkspace& operator=(const QWorkspace&) = delete;

  /// H_n^{(r)} with H_0^{(r)} = 0.
  value_type h(long n, long r) { return n == 0 ? q.constant(0) : value_type(table.at(n, r)); }

  /// Coefficient of z^n in the generating function of H^{(r)}.
  value_type genfun_coeff(long r, long n) {
    auto it = genfun_.find(r);
    if (it == genfun_.end() || static_cast<long>(it->second.order()) < n)
      it = genfun_.insert_or_assign(r, q_hyper_genfun(q, r, std::max(n, 12L))).first;
    return it->second[static_cast<std::size_t>(n)];
  }

  Q q;
  QHyperTableT<Q> table;

 private:
  std::map<long, ZSeriesT<value_type>> genfun_;
};

using SymbolicWorkspace = QWorkspace<SymbolicQ>;
using PointWorkspace = QWorkspace<PointQ>;

class ClassicalWorkspace {
 public:
  using value_type = BigRat;

  BigRat h(long n, long r) { return n == 0 ? BigRat(0) : table.at(n, r); }
  BigRat genfun_coeff(long r, long n);

  HyperTable table;

 private:
  std::map<long, ZSeriesT<BigRat>> genfun_;
};

template <class T, class W>
using Builder = std::function<T(W&, const Params&)>;

/// One side of an identity. q-identities fill `symbolic` and `point`;
/// classical identities fill `classical`.
struct SideBuilder {
  Builder<QRatFn, SymbolicWorkspace> symbolic;
  Builder<BigRat, PointWorkspace> point;
  Builder<BigRat, ClassicalWorkspace> classical;
};

struct Variant {
  std::string label;
  SideBuilder rhs;
};

struct ParamRange {
  char name;  // one of n, r, p, m, k
  long min;
};

struct IdentitySpec {
  std::string id;
  std::string statement;
  ScalarField field = ScalarField::q_rationals;
  std::vector<ParamRange> ranges;
  std::function<bool(const Params&)> domain;  // extra filter, may be empty
  SideBuilder lhs;
  std::vector<Variant> variants;
  bool verifiable = true;
  std::string note;
};

/// All registered identities, sorted by id.
const std::vector<IdentitySpec>& identity_registry();
/// nullptr when the id is unknown.
const IdentitySpec* find_identity(std::string_view id);
std::vector<std::string> identity_ids();

/// Instances of an identity on a grid, in (n, r, p, m, k) order.
std::vector<Params> enumerate_instances(const IdentitySpec& spec, const Grid& grid);

struct VerifyOptions {
  Mode mode = Mode::symbolic;
  long points = 8;
  std::uint64_t seed = 1;
};

/// Sample points for sampled mode: distinct rationals a/b with |a|, b <= 100,
/// never 0 or +-1 (where q-integers vanish or the field degenerates).
std::vector<BigRat> sample_points(long count, std::uint64_t seed);

struct InstanceResult {
  std::string id;
  std::string variant;
  Params params;
  Status status = Status::fail;
  std::string lhs;  // witness, filled on failure
  std::string rhs;
};

/// Verifies identities one instance at a time, reusing its tables between
/// calls. One Verifier per thread.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  /// One result per variant. Exceptions while building either side turn
  /// into failures carrying the message as witness.
  std::vector<InstanceResult> verify(const IdentitySpec& spec, const Params& params);

 private:
  VerifyOptions options_;
  std::vector<BigRat> points_;
  std::unique_ptr<SymbolicWorkspace> symbolic_;
  std::vector<std::unique_ptr<PointWorkspace>> point_ws_;
  std::unique_ptr<ClassicalWorkspace> classical_;
};

/// Throws std::invalid_argument for an unknown id or variant, or params
/// outside the identity's domain.
InstanceResult verify_instance(std::string_view id, std::string_view variant, const Params& params,
                               const VerifyOptions& options = {});

struct Tally {
  std::string id;
  std::string variant;
  long pass = 0;
  long fail = 0;
};

struct Uncovered {
  std::string id;
  Params params;
};

struct SuiteReport {
  std::string suite;
  Grid grid;
  VerifyOptions options;
  std::vector<InstanceResult> results;  // sorted by (id, variant, n, r, p, m, k)
  std::vector<Tally> tallies;           // sorted by (id, variant)
  std::vector<std::pair<std::string, std::string>> unverifiable;  // (id, note)
  std::vector<Uncovered> uncovered;  // instances where no variant passed
  long pass = 0;
  long fail = 0;

  bool ok() const { return uncovered.empty(); }
};

/// Runs every instance of the selected identities. Work is spread over
/// worker threads (QHARM_THREADS caps the count); the report does not depend
/// on scheduling. Throws std::invalid_argument on an empty selection, an
/// unknown id or a grid bound below 1.
SuiteReport run_suite(const std::vector<std::string>& ids, const Grid& grid, const VerifyOptions& options = {},
                      const std::string& suite = "custom");

std::string report_json(const SuiteReport& report);
/// One row per (id, variant, params, status).
std::string report_csv(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

/// sum a_l b_l rearranged as s_n b_n + sum_{l<n} s_l (b_l - b_{l+1}).
/// Throws std::invalid_argument on a length mismatch or empty input.
template <class T>
T abel_rearrange(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("abel_rearrange needs sequences of equal length");
  if (a.empty()) throw std::invalid_argument("abel_rearrange needs at least one term");
  T s = a[0];
  T acc = T{};
  for (std::size_t l = 0; l + 1 < a.size(); ++l) {
    acc += s * (b[l] - b[l + 1]);
    s += a[l + 1];
  }
  acc += s * b.back();
  return acc;
}

}  // namespace qharm
