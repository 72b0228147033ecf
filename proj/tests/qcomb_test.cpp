#include "qharm/qcomb.hpp"
#include "qharm/qratfn.hpp"

#include <doctest.h>

using namespace qharm;

namespace {

const QPoly q = QPoly::q();

QPoly q_pow(long e) { return QPoly::monomial(1, static_cast<std::size_t>(e)); }

// ([x]_q)_(m) = [x]_q [x-1]_q ... [x-m+1]_q for integer x >= 0.
QPoly q_falling(long x, long m) {
  QPoly r(1);
  for (long i = 0; i < m; ++i) {
    if (x - i <= 0) return {};
    r *= q_int(x - i);
  }
  return r;
}

}  // namespace

TEST_CASE("q_int") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QPoly(1));
  CHECK(q_int(3) == QPoly(1) + q + q * q);
  CHECK(q_int(7).eval(1) == 7);
  CHECK_THROWS_AS(q_int(-1), std::domain_error);
}

TEST_CASE("q_binomial examples") {
  for (long n = 0; n < 6; ++n) CHECK(q_binomial(n, 0) == QPoly(1));
  // [4]! / ([2]! [2]!) by exact division.
  const QPoly oracle = exact_div(q_factorial(4), q_factorial(2) * q_factorial(2));
  CHECK(oracle == parse_qpoly("1+q+2q^2+q^3+q^4"));
  CHECK(q_binomial(4, 2) == oracle);
  CHECK(q_binomial(6, 3).eval(1) == 20);
  CHECK(q_binomial(3, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
}

TEST_CASE("Gaussian symmetry, q-Pascal, and integrality for n <= 20") {
  for (long n = 0; n <= 20; ++n) {
    for (long k = 0; k <= n; ++k) {
      const QPoly b = q_binomial(n, k);
      CHECK(b == q_binomial(n, n - k));
      if (n > 0) CHECK(b == q_binomial(n - 1, k - 1) + q_pow(k) * q_binomial(n - 1, k));
      CHECK(b.eval(1) == BigRat(binomial(n, k)));
      for (const auto& c : b.coeffs()) {
        CHECK(c >= 0);
        CHECK(is_integer(c));
      }
    }
  }
}

TEST_CASE("q_rising") {
  CHECK(q_rising(5, 0) == QPoly(1));
  CHECK(q_rising(1, 2) == QPoly(1) + q);
  CHECK(q_rising(2, 2) == (QPoly(1) + q) * (QPoly(1) + q + q * q));
  CHECK(q_rising(0, 3).is_zero());
}

TEST_CASE("q_stirling2 examples") {
  for (long n = 0; n < 8; ++n) CHECK(q_stirling2(n, n) == QPoly(1));
  // S(3,2) = S(2,1) + [2] S(2,2) = 1 + (1 + q).
  CHECK(q_stirling2(3, 2) == QPoly(2) + q);
  CHECK(q_stirling2(2, 0).is_zero());
  CHECK(q_stirling2(0, 2).is_zero());
  CHECK(q_stirling2(0, 0) == QPoly(1));
}

TEST_CASE("Carlitz defining relation for n <= 10") {
  StirlingTable s2(StirlingKind::q_second);
  for (long n = 0; n <= 10; ++n) {
    for (long x = 0; x <= n + 3; ++x) {
      QPoly lhs(1);
      for (long i = 0; i < n; ++i) lhs *= q_int(x);
      QPoly rhs;
      for (long m = 0; m <= n; ++m) rhs += q_pow(m * (m - 1) / 2) * s2.at(n, m) * q_falling(x, m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("q_stirling1u examples") {
  CHECK(q_stirling1u(1, 1) == QPoly(1));
  // [l][l+1] = [l] (1 + q [l]) = [l] + q [l]^2.
  CHECK(q_stirling1u(2, 1) == QPoly(1));
  CHECK(q_stirling1u(2, 2) == q);
  for (long k = 0; k <= 4; ++k) {
    const BigInt s = stirling1_signed(4, k);
    CHECK(q_stirling1u(4, k).eval(1) == BigRat(s < 0 ? BigInt(-s) : s));
  }
  CHECK(q_stirling1u(3, 0).is_zero());
}

TEST_CASE("rising q-factorial expands in powers of [l]_q for p <= 8, l <= 10") {
  StirlingTable s1(StirlingKind::q_first_unsigned);
  for (long p = 0; p <= 8; ++p) {
    for (long l = 0; l <= 10; ++l) {
      QPoly sum;
      QPoly power(1);
      const QPoly base = q_int(l);
      for (long k = 0; k <= p; ++k) {
        sum += s1.at(p, k) * power;
        power *= base;
      }
      CHECK(sum == q_rising(l, p));
    }
  }
}

TEST_CASE("classical Stirling numbers") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling1_signed(3, 1) == 2);
  CHECK(stirling1_signed(3, 2) == -3);
  for (long n = 0; n < 9; ++n) {
    CHECK(stirling2(n, n) == 1);
    for (long m = 0; m <= n; ++m) {
      CHECK(q_stirling2(n, m).eval(1) == BigRat(stirling2(n, m)));
      BigInt signed_value = stirling1_signed(n, m);
      if ((n + m) % 2) signed_value = -signed_value;
      CHECK(signed_value >= 0);
    }
  }
  StirlingTable t(StirlingKind::classical_second);
  t.warm(6);
  CHECK(t.rows() == 7);
}

TEST_CASE("Bernoulli numbers under the +1/2 convention") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == make_rat(1, 2));
  CHECK(bernoulli_number(2) == make_rat(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == make_rat(-1, 30));
}

TEST_CASE("B_n = (-1)^n times the t/(e^t - 1) numbers for n <= 12") {
  // Brute series oracle: invert (e^t - 1)/t = sum t^k/(k+1)! term by term.
  const int n_max = 12;
  std::vector<BigRat> e(n_max + 1), inv(n_max + 1);
  for (int k = 0; k <= n_max; ++k) e[k] = BigRat(1) / BigRat(factorial(k + 1));
  inv[0] = 1;
  for (int m = 1; m <= n_max; ++m) {
    BigRat acc = 0;
    for (int j = 1; j <= m; ++j) acc += e[j] * inv[m - j];
    inv[m] = -acc;
  }
  const auto b = bernoulli_numbers(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const BigRat frak = inv[n] * BigRat(factorial(n));
    CHECK(b[n] == (n % 2 ? BigRat(-frak) : frak));
  }
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly_eval(1, BigRat(0)) == make_rat(-1, 2));
  CHECK(bernoulli_poly_eval(2, make_rat(1, 2)) == make_rat(-1, 12));
  // B_k(x+1) - B_k(x) = k x^{k-1}
  for (long k = 1; k < 8; ++k)
    for (long x = -3; x < 4; ++x)
      CHECK(bernoulli_poly_eval(k, BigRat(x + 1)) - bernoulli_poly_eval(k, BigRat(x)) == k * pow(BigRat(x), k - 1));
}

TEST_CASE("sum_powers routes") {
  for (long n = 1; n <= 10; ++n) {
    for (auto route : {PowerSumRoute::ber, PowerSumRoute::ber1, PowerSumRoute::brute}) {
      CHECK(sum_powers(n, 1, route) == make_rat(n * (n + 1), 2));
      CHECK(sum_powers(n, 2, route) == make_rat(n * (n + 1) * (2 * n + 1), 6));
    }
  }
  CHECK(sum_powers(5, 3, PowerSumRoute::brute) == 225);
  for (long n = 1; n <= 30; ++n) {
    for (long k = 0; k <= 8; ++k) {
      const BigRat brute = sum_powers(n, k, PowerSumRoute::brute);
      CHECK(sum_powers(n, k, PowerSumRoute::ber) == brute);
      CHECK(sum_powers(n, k, PowerSumRoute::ber1) == brute);
    }
  }
  CHECK_THROWS_AS(sum_powers(0, 1, PowerSumRoute::brute), std::domain_error);
}
