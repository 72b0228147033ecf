#pragma once

#include "qharm/bigrat.hpp"
#include "qharm/qratfn.hpp"
#include "qharm/qscalars.hpp"

#include <stdexcept>
#include <vector>

namespace qharm {

/// Memoized classical hyperharmonic numbers H_n^{(r)} with H_n^{(0)} = 1/n.
/// Grows on demand: one table per worker, or warm() before sharing.
class HyperTable {
 public:
  /// Throws std::domain_error for (0, 0) or negative indices.
  const BigRat& at(long n, long r);
  void warm(long n_max, long r_max) { (void)at(n_max, r_max); }

 private:
  void ensure(long n, long r);
  std::vector<std::vector<BigRat>> rows_;  // rows_[r][n]
};

/// Memoized q-hyperharmonic numbers over a scalar source Q (see QScalars):
/// H_n^{(0)}(q) = 1/(q [n]_q) and H_n^{(r)}(q) = sum_{j<=n} q^j H_j^{(r-1)}(q).
template <class Q>
class QHyperTableT {
 public:
  using value_type = typename Q::value_type;

  explicit QHyperTableT(Q& scalars) : q_(&scalars) {}

  Q& scalars() const { return *q_; }

  /// Throws std::domain_error for (0, 0) or negative indices.
  const value_type& at(long n, long r) {
    if (n < 0 || r < 0) throw std::domain_error("hyperharmonic index must be nonnegative");
    if (n == 0 && r == 0) throw std::domain_error("H_0^(0)(q) is undefined");
    ensure(n, r);
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
  }

 private:
  void ensure(long n, long r) {
    while (static_cast<long>(rows_.size()) <= r) rows_.emplace_back();
    for (long rr = 0; rr <= r; ++rr) {
      auto& row = rows_[static_cast<std::size_t>(rr)];
      if (row.empty()) row.push_back(q_->constant(0));  // index 0; H_0^(0) never read
      while (static_cast<long>(row.size()) <= n) {
        const long j = static_cast<long>(row.size());
        if (rr == 0) {
          row.push_back(q_->constant(1) / (q_->q_pow(1) * q_->q_int(j)));
        } else {
          value_type next = row.back();
          next += q_->q_pow(j) * rows_[static_cast<std::size_t>(rr - 1)][static_cast<std::size_t>(j)];
          row.push_back(std::move(next));
        }
      }
    }
  }

  Q* q_;
  std::vector<std::vector<value_type>> rows_;  // rows_[r][n]
};

using QHyperTable = QHyperTableT<SymbolicQ>;

// --- closed forms, generic over the scalar source ---------------------------

/// H_n(q) = sum_{j=1..n} q^{j-1} / [j]_q, summed directly.
template <class Q>
typename Q::value_type q_harmonic_direct(Q& q, long n) {
  auto acc = q.constant(0);
  for (long j = 1; j <= n; ++j) acc += q.q_pow(j - 1) / q.q_int(j);
  return acc;
}

/// binom_q(n+r-1, r-1) (H_{n+r-1}(q) - H_{r-1}(q))
template <class Q>
typename Q::value_type q_hyper_ph01(Q& q, long n, long r) {
  auto diff = q.constant(0);
  for (long j = r; j <= n + r - 1; ++j) diff += q.q_pow(j - 1) / q.q_int(j);
  return q.q_binomial(n + r - 1, r - 1) * diff;
}

/// sum_{j=1..n} binom_q(n+r-j-1, r-1) q^{rj-1} / [j]_q
template <class Q>
typename Q::value_type q_hyper_ph02(Q& q, long n, long r) {
  auto acc = q.constant(0);
  for (long j = 1; j <= n; ++j) acc += q.q_binomial(n + r - j - 1, r - 1) * q.q_pow(r * j - 1) / q.q_int(j);
  return acc;
}

/// How the binomial in the order-lowering convolution is read.
enum class BinomialReading { classical, q_analog };

/// sum_{j=1..n} q^{j(r-m)} binom(n+r-m-j-1, r-m-1) H_j^{(m)}(q), 0 <= m < r.
template <class Q>
typename Q::value_type q_hyper_ph022(QHyperTableT<Q>& table, long n, long r, long m, BinomialReading reading) {
  if (m < 0 || m >= r) throw std::domain_error("order-lowering convolution needs 0 <= m < r");
  Q& q = table.scalars();
  auto acc = q.constant(0);
  for (long j = 1; j <= n; ++j) {
    const auto coef = reading == BinomialReading::q_analog
                          ? q.q_binomial(n + r - m - j - 1, r - m - 1)
                          : q.constant(BigRat(binomial(n + r - m - j - 1, r - m - 1)));
    acc += q.q_pow(j * (r - m)) * coef * table.at(j, m);
  }
  return acc;
}

// --- public operations ---------------------------------------------------

BigRat harmonic(long n);

enum class HyperRoute { recursion, h01, h02 };
/// Classical H_n^{(r)}, n >= 0, r >= 1.
BigRat hyperharmonic(long n, long r, HyperRoute route);

enum class QHyperRoute { def, ph01, ph02, ph022 };
/// H_n^{(r)}(q), n >= 0, r >= 1. `m` and `reading` are used by ph022 only;
/// m >= r is rejected with std::domain_error.
QRatFn q_hyperharmonic(long n, long r, QHyperRoute route, long m = 0,
                       BinomialReading reading = BinomialReading::q_analog);

QRatFn q_harmonic(long n);

enum class QRecurrence { qh11, qh13 };
/// LHS - RHS of the order-raising (qh11) or index-shifting (qh13) recurrence.
QRatFn qh_recurrence_residual(QRecurrence which, long n, long r);

/// H_{n+1}^{(n+1)} / H_n^{(n)}, exact. n >= 1.
BigRat diag_ratio_classical(long n);
/// H_{n+1}^{(n+1)}(q0) / H_n^{(n)}(q0), exact. n >= 1, |q0| < 1, q0 != 0.
BigRat diag_ratio_q(long n, const BigRat& q0);

}  // namespace qharm
