#pragma once

#include "qharm/harmonic.hpp"
#include "qharm/qratfn.hpp"
#include "qharm/qscalars.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qharm {

/// Power series in z truncated after z^order. Coefficients are exact (T is
/// QRatFn for Q(q), or BigRat). Binary operations truncate to the smaller
/// order of the two operands.
template <class T>
class ZSeriesT {
 public:
  explicit ZSeriesT(std::size_t order) : coeffs_(order + 1) {}
  /// Coefficients for z^0..z^{size-1}; must be nonempty.
  explicit ZSeriesT(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least a constant term");
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  T& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  friend ZSeriesT operator+(const ZSeriesT& a, const ZSeriesT& b) {
    ZSeriesT r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend ZSeriesT operator-(const ZSeriesT& a, const ZSeriesT& b) {
    ZSeriesT r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  friend ZSeriesT operator*(const ZSeriesT& a, const ZSeriesT& b) {
    ZSeriesT r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (a.coeffs_[i] == T{}) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend ZSeriesT operator*(const T& c, ZSeriesT a) {
    for (auto& x : a.coeffs_) x = c * x;
    return a;
  }

  /// Reciprocal by back-substitution. Throws std::domain_error when the
  /// constant term is zero.
  ZSeriesT inverse() const {
    if (coeffs_[0] == T{}) throw std::domain_error("series with zero constant term is not invertible");
    ZSeriesT r(order());
    const T c0_inv = T(1) / coeffs_[0];
    r.coeffs_[0] = c0_inv;
    for (std::size_t m = 1; m <= order(); ++m) {
      T acc{};
      for (std::size_t j = 1; j <= m; ++j)
        if (!(coeffs_[j] == T{})) acc += coeffs_[j] * r.coeffs_[m - j];
      r.coeffs_[m] = -(acc * c0_inv);
    }
    return r;
  }

 private:
  std::vector<T> coeffs_;
};

using ZSeries = ZSeriesT<QRatFn>;

template <class T>
ZSeriesT<T> series_mul(const ZSeriesT<T>& a, const ZSeriesT<T>& b) {
  return a * b;
}

template <class T>
ZSeriesT<T> series_inv(const ZSeriesT<T>& a) {
  return a.inverse();
}

/// -log_q(1 - q^r z) = sum_{m>=1} q^{rm} z^m / [m]_q, through z^N.
template <class Q>
ZSeriesT<typename Q::value_type> q_log_series(Q& q, long r, long n_terms) {
  if (r < 0 || n_terms < 1) throw std::domain_error("q-log series needs r >= 0 and N >= 1");
  ZSeriesT<typename Q::value_type> s(static_cast<std::size_t>(n_terms));
  for (long m = 1; m <= n_terms; ++m) s[static_cast<std::size_t>(m)] = q.q_pow(r * m) / q.q_int(m);
  return s;
}

/// (z; q)_r = prod_{j<r} (1 - z q^j), through z^N.
template <class Q>
ZSeriesT<typename Q::value_type> q_pochhammer_z(Q& q, long r, long n_terms) {
  if (r < 0 || n_terms < 0) throw std::domain_error("q-Pochhammer needs r >= 0 and N >= 0");
  using T = typename Q::value_type;
  ZSeriesT<T> s(static_cast<std::size_t>(n_terms));
  s[0] = q.constant(1);
  for (long j = 0; j < r; ++j) {
    ZSeriesT<T> factor(static_cast<std::size_t>(n_terms));
    factor[0] = q.constant(1);
    if (n_terms >= 1) factor[1] = -q.q_pow(j);
    s = s * factor;
  }
  return s;
}

/// -log_q(1 - q^r z) / (q (z; q)_r), through z^N.
template <class Q>
ZSeriesT<typename Q::value_type> q_hyper_genfun(Q& q, long r, long n_terms) {
  const typename Q::value_type scale = q.constant(1) / q.q_pow(1);
  return scale * (q_log_series(q, r, n_terms) * q_pochhammer_z(q, r, n_terms).inverse());
}

/// -log(1 - z) / (1 - z)^r with rational coefficients, through z^N.
ZSeriesT<BigRat> classical_hyper_genfun(long r, long n_terms);

ZSeries q_log_series(long r, long n_terms);
ZSeries q_pochhammer_z(long r, long n_terms);

enum class GenfunKind { q, classical };

/// Coefficient-wise difference between the generating function and the
/// table values for n = 1..N (element i holds n = i + 1). All zero when the
/// generating function is right. Classical residuals are constants.
std::vector<QRatFn> genfun_check(GenfunKind kind, long r, long n_terms);

}  // namespace qharm
