#include "qharm/series.hpp"

#include <doctest.h>

using namespace qharm;

namespace {

ZSeries one_minus_z(std::size_t order) {
  ZSeries s(order);
  s[0] = 1;
  s[1] = -1;
  return s;
}

}  // namespace

TEST_CASE("series_inv and series_mul") {
  const ZSeries inv = series_inv(one_minus_z(6));
  for (std::size_t m = 0; m <= 6; ++m) CHECK(inv[m] == QRatFn(1));
  const ZSeries unit = series_mul(one_minus_z(6), inv);
  CHECK(unit[0] == QRatFn(1));
  for (std::size_t m = 1; m <= 6; ++m) CHECK(unit[m].is_zero());
  // (z; q)_1 = 1 - z
  CHECK(series_inv(q_pochhammer_z(1, 6)).coeffs() == inv.coeffs());
  ZSeries zero_const(3);
  zero_const[1] = 1;
  CHECK_THROWS_AS(series_inv(zero_const), std::domain_error);
}

TEST_CASE("truncation follows the smaller operand") {
  const ZSeries a = one_minus_z(4);
  const ZSeries b = one_minus_z(7);
  CHECK((a * b).order() == 4);
  CHECK((a + b).order() == 4);
}

TEST_CASE("q_log_series coefficients") {
  const ZSeries s0 = q_log_series(0, 5);
  CHECK(s0[0].is_zero());
  for (long m = 1; m <= 5; ++m) CHECK(s0[static_cast<std::size_t>(m)] == QRatFn(1) / QRatFn(q_int(m)));
  CHECK(q_log_series(1, 3)[1] == QRatFn::q());
  CHECK(q_log_series(2, 3)[3] == QRatFn(QPoly::monomial(1, 6), q_int(3)));
}

TEST_CASE("q_pochhammer_z") {
  const ZSeries p0 = q_pochhammer_z(0, 4);
  CHECK(p0[0] == QRatFn(1));
  for (std::size_t m = 1; m <= 4; ++m) CHECK(p0[m].is_zero());
  const ZSeries p2 = q_pochhammer_z(2, 4);
  CHECK(p2[0] == QRatFn(1));
  CHECK(p2[1] == parse_qratfn("-1-q"));
  CHECK(p2[2] == QRatFn::q());
  CHECK(p2[3].is_zero());
  const ZSeries p3 = q_pochhammer_z(3, 5);
  const long expected[] = {1, -3, 3, -1, 0, 0};
  for (std::size_t m = 0; m <= 5; ++m) CHECK(ratfn_eval(p3[m], BigRat(1)) == expected[m]);
  CHECK(q_pochhammer_z(4, 2).order() == 2);
}

TEST_CASE("genfun_check examples") {
  for (const auto& r : genfun_check(GenfunKind::classical, 1, 5)) CHECK(r.is_zero());
  const auto s = classical_hyper_genfun(1, 5);
  CHECK(s[1] == 1);
  CHECK(s[2] == make_rat(3, 2));
  CHECK(s[3] == make_rat(11, 6));
  CHECK(s[4] == make_rat(25, 12));
  CHECK(s[5] == make_rat(137, 60));
  SymbolicQ q;
  const ZSeries g0 = q_hyper_genfun(q, 0, 4);
  for (long n = 1; n <= 4; ++n)
    CHECK(g0[static_cast<std::size_t>(n)] == QRatFn(1) / (QRatFn::q() * QRatFn(q_int(n))));
  CHECK(q_hyper_genfun(q, 2, 1)[1] == QRatFn::q());
}

TEST_CASE("generating functions for r <= 4 through z^12") {
  for (long r = 0; r <= 4; ++r) {
    for (const auto& res : genfun_check(GenfunKind::q, r, 12)) CHECK(res.is_zero());
    for (const auto& res : genfun_check(GenfunKind::classical, r, 12)) CHECK(res.is_zero());
  }
}

TEST_CASE("q -> 1 limit of the q-series is the classical series") {
  SymbolicQ q;
  for (long r = 0; r <= 3; ++r) {
    const ZSeries qs = q_hyper_genfun(q, r, 8);
    const auto cs = classical_hyper_genfun(r, 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(ratfn_limit_q1(qs[n]) == cs[n]);
  }
}

TEST_CASE("series at a rational point agrees with symbolic evaluation") {
  SymbolicQ sym;
  PointQ pt(make_rat(2, 5));
  const ZSeries s = q_hyper_genfun(sym, 3, 6);
  const auto p = q_hyper_genfun(pt, 3, 6);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(ratfn_eval(s[n], make_rat(2, 5)) == p[n]);
}
