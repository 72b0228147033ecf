#pragma once

#include "qharm/bigrat.hpp"
#include "qharm/qcomb.hpp"
#include "qharm/qpoly.hpp"
#include "qharm/qratfn.hpp"

#include <concepts>
#include <map>
#include <stdexcept>
#include <utility>

namespace qharm {

/// Source of q-quantities ([n]_q, q-binomials, q-Stirling numbers, powers
/// of q) as values of a scalar type T. With T = QRatFn the values live in
/// Q(q); with T = BigRat they are exact evaluations at a fixed rational q0.
///
/// Results are memoized, so an instance must not be shared between threads
/// while it is still being filled.
template <class T>
class QScalars {
 public:
  using value_type = T;

  QScalars()
    requires std::same_as<T, QRatFn>
  = default;

  explicit QScalars(BigRat q0)
    requires std::same_as<T, BigRat>
      : point_(std::move(q0)) {}

  /// The evaluation point; meaningful only for T = BigRat.
  const BigRat& point() const { return point_; }

  T constant(const BigRat& c) const { return T(c); }

  T lift(const QPoly& p) const {
    if constexpr (std::same_as<T, QRatFn>)
      return QRatFn(p);
    else
      return p.eval(point_);
  }

  T q_pow(long e) const {
    if constexpr (std::same_as<T, QRatFn>)
      return QRatFn::q_pow(e);
    else
      return pow(point_, e);
  }

  const T& q_int(long n) {
    return memo(ints_, {n, 0}, [&] {
      if constexpr (std::same_as<T, QRatFn>) {
        return QRatFn(qharm::q_int(n));
      } else {
        BigRat acc = 0, term = 1;
        for (long i = 0; i < n; ++i) {
          acc += term;
          term *= point_;
        }
        return acc;
      }
    });
  }

  const T& q_factorial(long n) {
    return memo(factorials_, {n, 0}, [&] {
      T acc = constant(1);
      for (long i = 2; i <= n; ++i) acc *= q_int(i);
      return acc;
    });
  }

  /// Zero outside 0 <= k <= n.
  const T& q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return zero_;
    return memo(binomials_, {n, k}, [&] {
      if constexpr (std::same_as<T, QRatFn>) {
        return QRatFn(qharm::q_binomial(n, k));
      } else {
        if (point_ == 1 || point_ == -1) return qharm::q_binomial(n, k).eval(point_);
        // Product formula; no factor 1 - q0^i vanishes off the unit circle.
        const long kk = 2 * k > n ? n - k : k;
        BigRat acc = 1;
        for (long i = 1; i <= kk; ++i) acc *= (1 - pow(point_, n - kk + i)) / (1 - pow(point_, i));
        return acc;
      }
    });
  }

  const T& q_stirling2(long n, long m) {
    return memo(stirling2_, {n, m}, [&] { return lift(stirling2_table_.at(n, m)); });
  }

  const T& q_stirling1u(long p, long k) {
    return memo(stirling1u_, {p, k}, [&] { return lift(stirling1u_table_.at(p, k)); });
  }

 private:
  using Key = std::pair<long, long>;

  template <class F>
  const T& memo(std::map<Key, T>& cache, Key key, F&& make) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    T value = make();
    return cache.emplace(key, std::move(value)).first->second;
  }

  BigRat point_;
  T zero_{};
  std::map<Key, T> ints_, factorials_, binomials_, stirling2_, stirling1u_;
  StirlingTable stirling2_table_{StirlingKind::q_second};
  StirlingTable stirling1u_table_{StirlingKind::q_first_unsigned};
};

using SymbolicQ = QScalars<QRatFn>;
using PointQ = QScalars<BigRat>;

}  // namespace qharm
