#include "qharm/qcomb.hpp"

#include <stdexcept>

namespace qharm {

namespace {

// 1 - q^e
QPoly one_minus_q_pow(long e) { return QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(e)); }

void require_nonnegative(long v, const char* what) {
  if (v < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
}

}  // namespace

QPoly q_int(long n) {
  require_nonnegative(n, "q_int argument");
  return QPoly(std::vector<BigRat>(static_cast<std::size_t>(n), BigRat(1)));
}

QPoly q_factorial(long n) {
  require_nonnegative(n, "q_factorial argument");
  QPoly r(1);
  for (long i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPoly q_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return {};
  if (2 * k > n) k = n - k;
  QPoly r(1);
  for (long i = 1; i <= k; ++i) r = exact_div(r * one_minus_q_pow(n - k + i), one_minus_q_pow(i));
  return r;
}

QPoly q_rising(long l, long p) {
  require_nonnegative(l, "rising factorial base");
  require_nonnegative(p, "rising factorial length");
  QPoly r(1);
  for (long i = 0; i < p; ++i) r *= q_int(l + i);
  return r;
}

const QPoly& StirlingTable::at(long n, long k) {
  if (n < 0 || k < 0 || k > n) return zero_;
  grow_to(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void StirlingTable::warm(long n_max) { grow_to(n_max); }

void StirlingTable::grow_to(long n) {
  if (rows_.empty()) rows_.push_back({QPoly(1)});  // (0, 0) = 1 for every kind
  while (static_cast<long>(rows_.size()) <= n) {
    const long m = static_cast<long>(rows_.size());  // building row m from row m-1
    const auto& prev = rows_.back();
    std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
    auto prev_at = [&](long k) -> const QPoly& {
      return k >= 0 && k < static_cast<long>(prev.size()) ? prev[static_cast<std::size_t>(k)] : zero_;
    };
    for (long k = 0; k <= m; ++k) {
      QPoly v;
      switch (kind_) {
        case StirlingKind::q_second:  // S(m,k) = S(m-1,k-1) + [k] S(m-1,k)
          v = prev_at(k - 1) + q_int(k) * prev_at(k);
          break;
        case StirlingKind::q_first_unsigned:  // multiply by ([m-1] + q^{m-1} X)
          v = q_int(m - 1) * prev_at(k) + QPoly::monomial(1, static_cast<std::size_t>(m - 1)) * prev_at(k - 1);
          break;
        case StirlingKind::classical_second:
          v = prev_at(k - 1) + BigRat(k) * prev_at(k);
          break;
        case StirlingKind::classical_first_signed:
          v = prev_at(k - 1) - BigRat(m - 1) * prev_at(k);
          break;
      }
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

QPoly q_stirling2(long n, long m) {
  StirlingTable t(StirlingKind::q_second);
  return t.at(n, m);
}

QPoly q_stirling1u(long p, long k) {
  StirlingTable t(StirlingKind::q_first_unsigned);
  return t.at(p, k);
}

BigInt stirling2(long n, long m) {
  StirlingTable t(StirlingKind::classical_second);
  return t.at(n, m).coeff(0).get_num();
}

BigInt stirling1_signed(long p, long m) {
  StirlingTable t(StirlingKind::classical_first_signed);
  return t.at(p, m).coeff(0).get_num();
}

std::vector<BigRat> bernoulli_numbers(long max_index) {
  require_nonnegative(max_index, "Bernoulli index");
  std::vector<BigRat> b;
  b.reserve(static_cast<std::size_t>(max_index) + 1);
  for (long k = 0; k <= max_index; ++k) {
    BigRat acc = k + 1;
    for (long j = 0; j < k; ++j) acc -= BigRat(binomial(k + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(acc / (k + 1));
  }
  return b;
}

BigRat bernoulli_number(long j) { return bernoulli_numbers(j).back(); }

BigRat bernoulli_poly_eval(long k, const BigRat& x) {
  require_nonnegative(k, "Bernoulli polynomial degree");
  // The polynomial family uses the t/(e^t - 1) numbers, which differ from
  // the recurrence numbers by (-1)^i.
  const auto b = bernoulli_numbers(k);
  BigRat acc = 0;
  for (long i = 0; i <= k; ++i) {
    BigRat term = BigRat(binomial(k, i)) * b[static_cast<std::size_t>(i)] * pow(x, k - i);
    if (i % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

BigRat sum_powers(long n, long k, PowerSumRoute route) {
  if (n < 1) throw std::domain_error("sum_powers requires n >= 1");
  require_nonnegative(k, "power");
  switch (route) {
    case PowerSumRoute::brute: {
      BigInt acc = 0;
      for (long l = 1; l <= n; ++l) acc += pow(BigInt(l), static_cast<unsigned long>(k));
      return BigRat(acc);
    }
    case PowerSumRoute::ber: {
      const auto b = bernoulli_numbers(k);
      BigRat acc = 0;
      for (long j = 0; j <= k; ++j)
        acc += BigRat(binomial(k + 1, j)) * b[static_cast<std::size_t>(j)] * pow(BigRat(n), k + 1 - j);
      return acc / (k + 1);
    }
    case PowerSumRoute::ber1:
      return (bernoulli_poly_eval(k + 1, BigRat(n + 1)) - bernoulli_poly_eval(k + 1, BigRat(1))) / (k + 1);
  }
  throw std::invalid_argument("unknown power-sum route");
}

}  // namespace qharm
