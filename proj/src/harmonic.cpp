#include "qharm/harmonic.hpp"

namespace qharm {

const BigRat& HyperTable::at(long n, long r) {
  if (n < 0 || r < 0) throw std::domain_error("hyperharmonic index must be nonnegative");
  if (n == 0 && r == 0) throw std::domain_error("H_0^(0) is undefined");
  ensure(n, r);
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
}

void HyperTable::ensure(long n, long r) {
  while (static_cast<long>(rows_.size()) <= r) rows_.emplace_back();
  for (long rr = 0; rr <= r; ++rr) {
    auto& row = rows_[static_cast<std::size_t>(rr)];
    if (row.empty()) row.emplace_back(0);
    while (static_cast<long>(row.size()) <= n) {
      const auto j = static_cast<long>(row.size());
      if (rr == 0)
        row.push_back(make_rat(1, j));
      else
        row.push_back(row.back() + rows_[static_cast<std::size_t>(rr - 1)][static_cast<std::size_t>(j)]);
    }
  }
}

BigRat harmonic(long n) {
  if (n < 0) throw std::domain_error("harmonic index must be nonnegative");
  BigRat acc = 0;
  for (long j = 1; j <= n; ++j) acc += make_rat(1, j);
  return acc;
}

BigRat hyperharmonic(long n, long r, HyperRoute route) {
  if (n < 0 || r < 1) throw std::domain_error("hyperharmonic needs n >= 0 and r >= 1");
  switch (route) {
    case HyperRoute::recursion: {
      if (n == 0) return 0;
      HyperTable t;
      return t.at(n, r);
    }
    case HyperRoute::h01:
      return BigRat(binomial(n + r - 1, r - 1)) * (harmonic(n + r - 1) - harmonic(r - 1));
    case HyperRoute::h02: {
      BigRat acc = 0;
      for (long j = 1; j <= n; ++j) acc += BigRat(binomial(n + r - j - 1, r - 1)) / j;
      return acc;
    }
  }
  throw std::invalid_argument("unknown hyperharmonic route");
}

QRatFn q_hyperharmonic(long n, long r, QHyperRoute route, long m, BinomialReading reading) {
  if (n < 0 || r < 1) throw std::domain_error("q-hyperharmonic needs n >= 0 and r >= 1");
  SymbolicQ q;
  switch (route) {
    case QHyperRoute::def: {
      if (n == 0) return {};
      QHyperTable t(q);
      return t.at(n, r);
    }
    case QHyperRoute::ph01:
      return q_hyper_ph01(q, n, r);
    case QHyperRoute::ph02:
      return q_hyper_ph02(q, n, r);
    case QHyperRoute::ph022: {
      QHyperTable t(q);
      return q_hyper_ph022(t, n, r, m, reading);
    }
  }
  throw std::invalid_argument("unknown q-hyperharmonic route");
}

QRatFn q_harmonic(long n) {
  if (n < 0) throw std::domain_error("harmonic index must be nonnegative");
  SymbolicQ q;
  return q_harmonic_direct(q, n);
}

QRatFn qh_recurrence_residual(QRecurrence which, long n, long r) {
  if (n < 0 || r < 1) throw std::domain_error("recurrence residual needs n >= 0 and r >= 1");
  SymbolicQ q;
  QHyperTable t(q);
  auto h = [&](long nn, long rr) { return nn == 0 ? QRatFn() : t.at(nn, rr); };
  switch (which) {
    case QRecurrence::qh11: {
      const QRatFn rhs = q.q_int(n + r) / q.q_int(r) * h(n, r) - q.q_pow(r - 1) / q.q_int(r) * q.q_binomial(n + r - 1, r);
      return h(n, r + 1) - rhs;
    }
    case QRecurrence::qh13: {
      const QRatFn rhs = q.q_int(n + 1) * h(n + 1, r) - q.q_pow(n + r - 1) * q.q_binomial(n + r - 1, r - 1);
      return q.q_int(n + r) * h(n, r) - rhs;
    }
  }
  throw std::invalid_argument("unknown recurrence");
}

BigRat diag_ratio_classical(long n) {
  if (n < 1) throw std::domain_error("diagonal ratio needs n >= 1");
  return hyperharmonic(n + 1, n + 1, HyperRoute::h01) / hyperharmonic(n, n, HyperRoute::h01);
}

BigRat diag_ratio_q(long n, const BigRat& q0) {
  if (n < 1) throw std::domain_error("diagonal ratio needs n >= 1");
  if (abs(q0) >= 1) throw std::domain_error("diagonal q-ratio needs |q0| < 1");
  if (q0 == 0) throw std::domain_error("diagonal q-ratio is undefined at q0 = 0");
  PointQ q(q0);
  return q_hyper_ph01(q, n + 1, n + 1) / q_hyper_ph01(q, n, n);
}

}  // namespace qharm
