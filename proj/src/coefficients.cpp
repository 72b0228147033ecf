#include "qharm/coefficients.hpp"

namespace qharm {

QRatFn coef_q(ForwardCoef kind, CoefVariant variant, long p, long r, long n) {
  SymbolicQ q;
  return coef_q(q, kind, variant, p, r, n);
}

QRatFn coef_q_rising(RisingCoef kind, CoefVariant variant, long p, long r, long n) {
  SymbolicQ q;
  return coef_q_rising(q, kind, variant, p, r, n);
}

QRatFn coef_backward_q(BackwardCoef kind, CoefVariant variant, long p, long r, long n) {
  SymbolicQ q;
  return coef_backward_q(q, kind, variant, p, r, n);
}

BigRat coef_classical(ClassicalCoef kind, long p, long r, long n) {
  detail::require_positive(p, r, n, 0);
  BigRat acc = 0;
  for (long l = 0; l <= p; ++l) {
    const BigInt s = stirling2(p, l);
    if (s == 0) continue;
    BigRat term = BigRat(s * factorial(l) * binomial(r + l - 1, l));
    if (kind == ClassicalCoef::A)
      term *= BigRat(binomial(r + n, r + l)) / BigRat(binomial(n + r - 1, r - 1));
    else
      term *= BigRat(binomial(r + n - 1, r + l)) / BigRat(r + l);
    acc += term;
  }
  return acc;
}

BigRat coef_classical_rising(ClassicalRisingCoef kind, long p, long r, long n) {
  detail::require_positive(p, r, n, 1);
  const ClassicalCoef inner = kind == ClassicalRisingCoef::A1 ? ClassicalCoef::A : ClassicalCoef::B;
  BigRat acc = 0;
  for (long m = 0; m <= p; ++m) {
    BigInt s = stirling1_signed(p, m);
    if ((p + m) % 2 != 0) s = -s;
    if (s == 0) continue;
    acc += BigRat(s) * coef_classical(inner, m, r, n);
  }
  return acc;
}

namespace {

struct BackwardPair {
  BigRat a, b;
};

BackwardPair backward_classical(long p, long r, long n) {
  if (n == 0) return {BigRat(0), BigRat(0)};
  const BigRat a0 = make_rat(n, r);
  const BigRat b0 = BigRat(binomial(n + r - 1, r)) / r;
  if (p == 0) return {a0, b0};
  BigRat factor = 1;
  BigRat tail = 0;
  for (long j = 0; j < p; ++j) {
    const BackwardPair inner = backward_classical(j, r + 1, n - 1);
    const BigRat c(binomial(p, j));
    factor += c * inner.a;
    tail += c * inner.b;
  }
  return {a0 * factor, b0 * factor + tail};
}

}  // namespace

BigRat coef_backward_classical(BackwardClassicalCoef kind, long p, long r, long n) {
  if (p < 0 || r < 1 || n < 0) throw std::domain_error("coefficient parameters out of range");
  const BackwardPair v = backward_classical(p, r, n);
  return kind == BackwardClassicalCoef::A2 ? v.a : v.b;
}

BigRat rising_factorial(const BigRat& x, long k) {
  if (k < 0) throw std::domain_error("rising factorial needs k >= 0");
  BigRat acc = 1;
  for (long i = 0; i < k; ++i) acc *= x + i;
  return acc;
}

}  // namespace qharm
