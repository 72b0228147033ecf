#pragma once

// Coefficient functions of the weighted-sum closed forms
//
//   sum_l w(l) H_l^{(r)}  =  A(p, r, n) H_n^{(r)}  -  B(p, r, n)
//
// for forward power weights (A_q, B_q), rising-factorial weights (A_1q, B_1q),
// and backward weights (C_q, D_q), together with their classical
// counterparts. The q-versions are templates over a scalar source (see
// QScalars) so the same code produces elements of Q(q) or values at a point.

#include "qharm/bigrat.hpp"
#include "qharm/qcomb.hpp"
#include "qharm/qratfn.hpp"
#include "qharm/qscalars.hpp"

#include <stdexcept>

namespace qharm {

/// Which reading of a suspect closed form to build. `as_printed` follows the
/// published exponents; `corrected` follows what the derivation produces.
enum class CoefVariant { as_printed, corrected };

enum class ForwardCoef { Aq, Bq };
enum class RisingCoef { A1q, B1q };
enum class BackwardCoef { Cq, Dq };
enum class ClassicalCoef { A, B };
enum class ClassicalRisingCoef { A1, B1 };
enum class BackwardClassicalCoef { A2, B2 };

namespace detail {

inline long choose2(long l) { return l * (l - 1) / 2; }

inline void require_positive(long p, long r, long n, long p_min) {
  if (p < p_min || r < 1 || n < 1) throw std::domain_error("coefficient parameters out of range");
}

}  // namespace detail

/// A_q(p, r, n) / B_q(p, r, n), p >= 1. The two variants differ in the power
/// of q attached to the l-th Stirling term: q^{C(l,2)+p-1} and
/// q^{C(l,2)+r+2p-2} as printed, q^{C(l,2)+l-1} and q^{C(l,2)+r+2l-2}
/// corrected. They coincide at p = 1.
template <class Q>
typename Q::value_type coef_q(Q& q, ForwardCoef kind, CoefVariant variant, long p, long r, long n) {
  detail::require_positive(p, r, n, 1);
  using T = typename Q::value_type;
  T acc = q.constant(0);
  for (long l = 1; l <= p; ++l) {
    const T& s = q.q_stirling2(p, l);
    if (s == T{}) continue;
    const long shift = variant == CoefVariant::as_printed ? p : l;
    T term = s * q.q_factorial(l) * q.q_binomial(r + l - 1, l);
    if (kind == ForwardCoef::Aq) {
      term *= q.q_pow(detail::choose2(l) + shift - 1) * q.q_binomial(r + n, r + l) / q.q_binomial(n + r - 1, r - 1);
    } else {
      term *= q.q_pow(detail::choose2(l) + r + 2 * shift - 2) * q.q_binomial(r + n - 1, r + l) / q.q_int(r + l);
    }
    acc += term;
  }
  return acc;
}

/// A_q(0, r, n) = [n+r]_q / [r]_q and B_q(0, r, n) = q^{r-1}/[r]_q binom_q(n+r-1, r),
/// the published p = 0 values. They only ever enter multiplied by
/// s_uq(p, 0) = 0.
template <class Q>
typename Q::value_type coef_q_order0(Q& q, ForwardCoef kind, long r, long n) {
  if (kind == ForwardCoef::Aq) return q.q_int(n + r) / q.q_int(r);
  return q.q_pow(r - 1) / q.q_int(r) * q.q_binomial(n + r - 1, r);
}

/// A_1q / B_1q = sum_m s_uq(p, m) A_q(m, r, n) (resp. B_q), inheriting the
/// A_q/B_q variant.
template <class Q>
typename Q::value_type coef_q_rising(Q& q, RisingCoef kind, CoefVariant variant, long p, long r, long n) {
  detail::require_positive(p, r, n, 1);
  using T = typename Q::value_type;
  const ForwardCoef inner = kind == RisingCoef::A1q ? ForwardCoef::Aq : ForwardCoef::Bq;
  T acc = q.constant(0);
  for (long m = 0; m <= p; ++m) {
    const T& s = q.q_stirling1u(p, m);
    if (s == T{}) continue;
    acc += s * (m == 0 ? coef_q_order0(q, inner, r, n) : coef_q(q, inner, variant, m, r, n));
  }
  return acc;
}

/// C_q / D_q for the backward power-weighted sum, from the recurrence
///   X = q^{(p-1)(n-1)} + (1 - q^{p-1}) C_q(p-1, r+1, n-1)
///   C_q = [n]/[r] X,   D_q = P X + (1 - q^{p-1}) D_q(p-1, r+1, n-1)
/// where the prefix P is q^{r-1}[n]/[r]^2 binom_q(n+r-1, r) as printed and
/// q^{r-1}[n]/[r]^2 binom_q(n+r-1, r-1) corrected. Both vanish at n = 0.
template <class Q>
typename Q::value_type coef_backward_q(Q& q, BackwardCoef kind, CoefVariant variant, long p, long r, long n) {
  using T = typename Q::value_type;
  if (p < 1 || r < 1 || n < 0) throw std::domain_error("coefficient parameters out of range");
  if (n == 0) return q.constant(0);
  T x = q.q_pow((p - 1) * (n - 1));
  T tail = q.constant(0);
  if (p > 1) {
    const T damp = q.constant(1) - q.q_pow(p - 1);
    x += damp * coef_backward_q(q, BackwardCoef::Cq, variant, p - 1, r + 1, n - 1);
    if (kind == BackwardCoef::Dq) tail = damp * coef_backward_q(q, BackwardCoef::Dq, variant, p - 1, r + 1, n - 1);
  }
  if (kind == BackwardCoef::Cq) return q.q_int(n) / q.q_int(r) * x;
  const long lower = variant == CoefVariant::as_printed ? r : r - 1;
  const T prefix = q.q_pow(r - 1) * q.q_int(n) / (q.q_int(r) * q.q_int(r)) * q.q_binomial(n + r - 1, lower);
  return prefix * x + tail;
}

/// Symbolic wrappers.
QRatFn coef_q(ForwardCoef kind, CoefVariant variant, long p, long r, long n);
QRatFn coef_q_rising(RisingCoef kind, CoefVariant variant, long p, long r, long n);
QRatFn coef_backward_q(BackwardCoef kind, CoefVariant variant, long p, long r, long n);

/// A(p, r, n) / B(p, r, n) of the classical power-weighted sum, p >= 0.
BigRat coef_classical(ClassicalCoef kind, long p, long r, long n);
/// A_1 / B_1 = sum_m (-1)^{p+m} s(p, m) A(m, r, n) (resp. B).
BigRat coef_classical_rising(ClassicalRisingCoef kind, long p, long r, long n);
/// A_2 / B_2 of the backward power-weighted sum from their recurrence with
/// A_2(0, r, n) = n/r, B_2(0, r, n) = C(n+r-1, r)/r; both vanish at n = 0.
BigRat coef_backward_classical(BackwardClassicalCoef kind, long p, long r, long n);

/// x (x+1) ... (x+k-1), 1 for k = 0.
BigRat rising_factorial(const BigRat& x, long k);

}  // namespace qharm
