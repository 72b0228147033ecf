#pragma once

#include "qharm/bigrat.hpp"
#include "qharm/qpoly.hpp"

#include <vector>

namespace qharm {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Requires n >= 0.
QPoly q_int(long n);

/// [n]_q! = [n]_q [n-1]_q ... [1]_q
QPoly q_factorial(long n);

/// Gaussian binomial, 0 outside 0 <= k <= n. Built as
/// prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i) with exact division at every
/// step, so intermediates stay polynomial.
QPoly q_binomial(long n, long k);

/// Rising q-factorial [l]_q [l+1]_q ... [l+p-1]_q, 1 for p = 0.
QPoly q_rising(long l, long p);

enum class StirlingKind { q_second, q_first_unsigned, classical_second, classical_first_signed };

/// Lazily grown triangle of Stirling-type numbers. q kinds hold polynomials
/// in q; classical kinds hold integer constants.
///
/// Rows are appended on demand, so a table is not safe to grow from several
/// threads. Either keep one table per worker or warm() it to the largest
/// index first; reads of a warmed table are safe concurrently.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind) : kind_(kind) {}

  StirlingKind kind() const { return kind_; }
  /// Entry (n, k); zero for k > n or k < 0.
  const QPoly& at(long n, long k);
  void warm(long n_max);
  long rows() const { return static_cast<long>(rows_.size()); }

 private:
  void grow_to(long n);

  StirlingKind kind_;
  std::vector<std::vector<QPoly>> rows_;
  QPoly zero_;
};

/// Carlitz q-Stirling numbers of the second kind.
QPoly q_stirling2(long n, long m);
/// q-unsigned Stirling numbers of the first kind: coefficients of [l]_q^k in
/// the rising q-factorial [l]_q^{(p)}.
QPoly q_stirling1u(long p, long k);
BigInt stirling2(long n, long m);
BigInt stirling1_signed(long p, long m);

/// B_0..B_max under sum_{j<=k} C(k+1, j) B_j = k + 1, so B_1 = +1/2.
std::vector<BigRat> bernoulli_numbers(long max_index);
BigRat bernoulli_number(long j);

/// B_k(x) for the polynomials generated by t e^{xt} / (e^t - 1).
BigRat bernoulli_poly_eval(long k, const BigRat& x);

enum class PowerSumRoute { ber, ber1, brute };

/// 1^k + 2^k + ... + n^k by the chosen route.
BigRat sum_powers(long n, long k, PowerSumRoute route);

}  // namespace qharm
