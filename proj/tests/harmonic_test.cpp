#include "qharm/harmonic.hpp"

#include <doctest.h>

using namespace qharm;

namespace {

QRatFn ratfn(const char* text) { return parse_qratfn(text); }

}  // namespace

TEST_CASE("hyperharmonic examples") {
  for (auto route : {HyperRoute::recursion, HyperRoute::h01, HyperRoute::h02}) {
    CHECK(hyperharmonic(3, 1, route) == make_rat(11, 6));
    // 1 + 3/2 + 11/6, and 4 (H_4 - H_1).
    CHECK(hyperharmonic(3, 2, route) == make_rat(13, 3));
    for (long r = 1; r < 5; ++r) CHECK(hyperharmonic(0, r, route) == 0);
  }
  CHECK_THROWS_AS(hyperharmonic(2, 0, HyperRoute::h01), std::domain_error);
}

TEST_CASE("HyperTable") {
  HyperTable t;
  CHECK(t.at(4, 0) == make_rat(1, 4));
  CHECK(t.at(4, 1) == harmonic(4));
  CHECK(t.at(0, 3) == 0);
  CHECK_THROWS_AS(t.at(0, 0), std::domain_error);
  for (long n = 1; n <= 8; ++n)
    for (long r = 1; r <= 4; ++r) {
      BigRat acc = 0;
      for (long l = 1; l <= n; ++l) acc += t.at(l, r - 1);
      CHECK(t.at(n, r) == acc);
    }
}

TEST_CASE("q_hyperharmonic examples") {
  // 1 + q / [2]_q
  CHECK(q_hyperharmonic(2, 1, QHyperRoute::def) == ratfn("(1+2q)/(1+q)"));
  CHECK(q_hyperharmonic(2, 2, QHyperRoute::ph01) == ratfn("(q+2q^2+2q^3)/(1+q)"));
  CHECK(q_hyperharmonic(2, 2, QHyperRoute::def) == ratfn("(q+2q^2+2q^3)/(1+q)"));
  CHECK(ratfn_limit_q1(q_hyperharmonic(3, 2, QHyperRoute::def)) == make_rat(13, 3));
  CHECK(q_hyperharmonic(0, 3, QHyperRoute::ph02).is_zero());
  CHECK(q_harmonic(2) == ratfn("(1+2q)/(1+q)"));
  CHECK_THROWS_AS(q_hyperharmonic(3, 2, QHyperRoute::ph022, 2), std::domain_error);
}

TEST_CASE("QHyperTable seeds") {
  SymbolicQ q;
  QHyperTable t(q);
  CHECK(t.at(3, 0) == QRatFn(1) / (QRatFn::q() * QRatFn(q_int(3))));
  CHECK(t.at(0, 2).is_zero());
  CHECK(t.at(1, 3) == QRatFn::q_pow(2));
  CHECK_THROWS_AS(t.at(0, 0), std::domain_error);
}

TEST_CASE("route equivalence and q -> 1 degeneration for n <= 10, r <= 5") {
  SymbolicQ q;
  QHyperTable t(q);
  for (long n = 1; n <= 10; ++n) {
    for (long r = 1; r <= 5; ++r) {
      const QRatFn def = t.at(n, r);
      CHECK(q_hyper_ph01(q, n, r) == def);
      CHECK(q_hyper_ph02(q, n, r) == def);
      CHECK(ratfn_limit_q1(def) == hyperharmonic(n, r, HyperRoute::h01));
      CHECK(hyperharmonic(n, r, HyperRoute::recursion) == hyperharmonic(n, r, HyperRoute::h02));
    }
  }
}

TEST_CASE("recurrence residuals vanish for n <= 10, r <= 5") {
  CHECK(qh_recurrence_residual(QRecurrence::qh11, 3, 2).is_zero());
  CHECK(qh_recurrence_residual(QRecurrence::qh13, 2, 1).is_zero());
  CHECK(qh_recurrence_residual(QRecurrence::qh11, 0, 1).is_zero());
  for (long n = 0; n <= 10; ++n)
    for (long r = 1; r <= 5; ++r) {
      CHECK(qh_recurrence_residual(QRecurrence::qh11, n, r).is_zero());
      CHECK(qh_recurrence_residual(QRecurrence::qh13, n, r).is_zero());
    }
}

TEST_CASE("classical order-raising recurrence for n <= 12, r <= 5") {
  for (long n = 0; n <= 12; ++n)
    for (long r = 1; r <= 5; ++r)
      CHECK(hyperharmonic(n, r + 1, HyperRoute::h02) ==
            BigRat(n + r, r) * hyperharmonic(n, r, HyperRoute::h02) - BigRat(binomial(n + r - 1, r)) / r);
}

TEST_CASE("order-lowering convolution readings") {
  // m = 0 with the q-binomial reading is the ph02 sum.
  for (long n = 1; n <= 5; ++n)
    for (long r = 1; r <= 3; ++r)
      CHECK(q_hyperharmonic(n, r, QHyperRoute::ph022, 0, BinomialReading::q_analog) ==
            q_hyperharmonic(n, r, QHyperRoute::ph02));
  // The classical reading differs as soon as a nontrivial binomial appears.
  CHECK(q_hyperharmonic(2, 2, QHyperRoute::ph022, 0, BinomialReading::classical) !=
        q_hyperharmonic(2, 2, QHyperRoute::def));
}

TEST_CASE("diagonal ratios") {
  CHECK(diag_ratio_classical(1) == make_rat(5, 2));
  const BigRat r50 = diag_ratio_classical(50);
  const BigRat r100 = diag_ratio_classical(100);
  const BigRat r200 = diag_ratio_classical(200);
  CHECK(r50 < r100);
  CHECK(r100 < r200);
  CHECK(r200 < 4);
  CHECK(4 - r200 < make_rat(5, 100));
  for (const BigRat q0 : {make_rat(1, 2), make_rat(1, 3), make_rat(3, 4)}) {
    const BigRat e10 = abs(diag_ratio_q(10, q0) - q0);
    const BigRat e40 = abs(diag_ratio_q(40, q0) - q0);
    CHECK(e40 < e10);
    CHECK(e40 < make_rat(5, 100));
  }
  CHECK_THROWS_AS(diag_ratio_q(5, make_rat(3, 2)), std::domain_error);
  CHECK_THROWS_AS(diag_ratio_q(5, BigRat(-1)), std::domain_error);
  CHECK_THROWS_AS(diag_ratio_classical(0), std::domain_error);
}
