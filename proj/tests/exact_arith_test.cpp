#include "qharm/qpoly.hpp"
#include "qharm/qratfn.hpp"
#include "random_values.hpp"

#include <doctest.h>

using namespace qharm;
using qharm::testing::random_nonzero_poly;
using qharm::testing::random_poly;
using qharm::testing::random_rat;
using qharm::testing::random_ratfn;

namespace {

const QPoly q = QPoly::q();

QRatFn ratfn(const char* text) { return parse_qratfn(text); }

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rat("3/6") == make_rat(1, 2));
  CHECK(parse_rat("-4/2") == -2);
  CHECK(parse_rat("7") == 7);
  CHECK_THROWS_AS(parse_rat("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK(to_string(make_rat(-3, 9)) == "-1/3");
  CHECK(to_decimal(make_rat(1, 3), 5) == "0.33333");
  CHECK(to_decimal(make_rat(2, 3), 5) == "0.66667");
  CHECK(to_decimal(BigRat(4), 20) == "4.0000000000000000000");
  CHECK(to_decimal(make_rat(-7, 2), 3) == "-3.50");
  CHECK(to_decimal(make_rat(1, 80000000), 2) == "1.3e-8");
  CHECK(to_decimal(make_rat(999999, 1000000), 3) == "1.00");
}

TEST_CASE("polynomial basics") {
  const QPoly p = QPoly(1) + q + QPoly::monomial(2, 2);
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "1+q+2q^2");
  CHECK(QPoly().degree() == -1);
  CHECK(QPoly().to_string() == "0");
  CHECK((p - p).is_zero());
  CHECK(p.eval(2) == 11);
  CHECK(QPoly::monomial(make_rat(-1, 3), 4).to_string() == "-(1/3)q^4");
  CHECK(parse_qpoly("1 - (1/3)q^4 + 2*q") == QPoly(1) + QPoly::monomial(2, 1) - QPoly::monomial(make_rat(1, 3), 4));
  CHECK(parse_qpoly("1/2*q") == QPoly::monomial(make_rat(1, 2), 1));
  CHECK_THROWS_AS(parse_qpoly("1++q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_qpoly("x"), std::invalid_argument);
}

TEST_CASE("polynomial division") {
  const QPoly a = QPoly(1) - q * q;  // 1 - q^2
  const QPoly b = QPoly(1) - q;
  CHECK(exact_div(a, b) == QPoly(1) + q);
  const auto [quot, rem] = divmod(a + QPoly(3), b);
  CHECK(quot == QPoly(1) + q);
  CHECK(rem == QPoly(3));
  CHECK_THROWS_AS(exact_div(a + QPoly(3), b), std::domain_error);
  CHECK_THROWS_AS(divmod(a, QPoly()), std::domain_error);
}

TEST_CASE("poly_gcd examples") {
  // Euclid by hand: 1 - q^2 = (1 - q)(1 + q), so the gcd is 1 - q made monic.
  CHECK(gcd(QPoly(1) - q * q, QPoly(1) - q) == q - QPoly(1));
  CHECK(gcd(QPoly(1) - q * q, QPoly(1) - q).to_string() == "-1+q");
  const QPoly p = QPoly(2) + QPoly::monomial(4, 3);
  CHECK(gcd(p, QPoly()) == p.monic());
  CHECK(gcd(QPoly(), p) == p.monic());
  // 1 + q + q^2 = (1 + q) q + 1, then gcd(1 + q, 1) = 1.
  CHECK(gcd(QPoly(1) + q + q * q, QPoly(1) + q) == QPoly(1));
  CHECK_THROWS_AS(gcd(QPoly(), QPoly()), std::domain_error);
}

TEST_CASE("modular gcd agrees with the Euclidean oracle") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const QPoly common = random_nonzero_poly(rng, 4);
    const QPoly a = common * random_nonzero_poly(rng, 5);
    const QPoly b = common * random_nonzero_poly(rng, 5);
    const QPoly g = gcd(a, b);
    CHECK(g == gcd_euclid(a, b));
    CHECK(g.lead() == 1);
    CHECK(divmod(a, g).second.is_zero());
    CHECK(divmod(b, g).second.is_zero());
    CHECK(divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("gcd of large cyclotomic products") {
  // (1-q^a)(1-q^b) against (1-q^c)(1-q^d) share exactly the cyclotomic
  // factors of the common divisors of the exponents.
  auto one_minus = [](long e) { return QPoly(1) - QPoly::monomial(1, static_cast<std::size_t>(e)); };
  const QPoly a = one_minus(12) * one_minus(30) * one_minus(7);
  const QPoly b = one_minus(18) * one_minus(20) * one_minus(11);
  CHECK(gcd(a, b) == gcd_euclid(a, b));
}

TEST_CASE("ratfn_arith examples") {
  const QRatFn one_minus_q(QPoly(1) - q);
  // Telescoping to a constant.
  CHECK(QRatFn(1) / one_minus_q + QRatFn(-q) / one_minus_q == QRatFn(1));
  // Reduced on construction by long division.
  CHECK(QRatFn(QPoly(1) - q * q, QPoly(1) - q) == QRatFn(QPoly(1) + q));
  const QRatFn x(QPoly(1) + QPoly(2) * q, QPoly(1) + q);
  CHECK(x * x.inverse() == QRatFn(1));
  CHECK(ratfn_arith(x, x, ArithOp::sub).is_zero());
  CHECK_THROWS_AS(ratfn_arith(x, QRatFn(), ArithOp::div), std::domain_error);
  CHECK_THROWS_AS(QRatFn(QPoly(1), QPoly()), std::domain_error);
}

TEST_CASE("canonical form") {
  const QRatFn f(QPoly(2) * q, QPoly(4) + QPoly(4) * q);
  CHECK(f.den().lead() == 1);
  CHECK(f.to_string() == "((1/2)q)/(1+q)");
  CHECK(parse_qratfn(f.to_string()) == f);
  CHECK(ratfn("(q+2q^2+2q^3)/(1+q)").num() == parse_qpoly("q+2q^2+2q^3"));
  CHECK(ratfn("1+q") == QRatFn(QPoly(1) + q));
  CHECK(ratfn("(1/2)q+1") == QRatFn(QPoly(1) + QPoly::monomial(make_rat(1, 2), 1)));
  CHECK_THROWS_AS(ratfn("(1)/(0)"), std::invalid_argument);
  CHECK(QRatFn::q_pow(-2) * QRatFn::q_pow(2) == QRatFn(1));
}

TEST_CASE("ratfn_eval examples") {
  CHECK(ratfn_eval(ratfn("(1+2q)/(1+q)"), BigRat(1)) == make_rat(3, 2));
  CHECK(ratfn_eval(QRatFn(make_rat(5, 7)), make_rat(-3, 11)) == make_rat(5, 7));
  CHECK_THROWS_AS(ratfn_eval(ratfn("(1)/(1-q)"), BigRat(1)), PoleError);
  CHECK_THROWS_AS(parse_qratfn("(1)/(1-"), std::invalid_argument);
}

TEST_CASE("ratfn_limit_q1 examples") {
  CHECK(ratfn_limit_q1(ratfn("1+q+q^2+q^3+q^4")) == 5);
  CHECK(ratfn_limit_q1(QRatFn(QPoly(1) - q * q * q, QPoly(1) - q)) == 3);
  CHECK_THROWS_AS(ratfn_limit_q1(ratfn("(1)/(1-q)")), PoleError);
  // Limit equals the value whenever den(1) != 0.
  CHECK(ratfn_limit_q1(ratfn("(1+2q)/(1+q)")) == make_rat(3, 2));
}

TEST_CASE("evaluation is a homomorphism on random inputs") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const QRatFn f = random_ratfn(rng);
    const QRatFn g = random_ratfn(rng);
    const BigRat at = random_rat(rng, 20);
    if (f.den().eval(at) == 0 || g.den().eval(at) == 0) continue;
    const BigRat fv = ratfn_eval(f, at);
    const BigRat gv = ratfn_eval(g, at);
    CHECK(ratfn_eval(f + g, at) == fv + gv);
    CHECK(ratfn_eval(f - g, at) == fv - gv);
    CHECK(ratfn_eval(f * g, at) == fv * gv);
    if (!g.is_zero() && gv != 0) {
      const QRatFn h = f / g;
      if (h.den().eval(at) != 0) CHECK(ratfn_eval(h, at) == fv / gv);
    }
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("reduction invariants on random inputs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const QRatFn f = random_ratfn(rng);
    const QRatFn g = random_ratfn(rng);
    CHECK(QRatFn(f.num(), f.den()) == f);
    CHECK(gcd(f.num().is_zero() ? QPoly(1) : f.num(), f.den()) == QPoly(1));
    CHECK(f.den().lead() == 1);
    CHECK(equal_by_cross_multiplication(f, g) == (f == g));
    // Same function, different unreduced presentation.
    const QPoly s = random_nonzero_poly(rng, 3);
    const QRatFn f2(f.num() * s, f.den() * s);
    CHECK(equal_by_cross_multiplication(f, f2));
    CHECK(f2 == f);
    CHECK(parse_qratfn(f.to_string()) == f);
    const QPoly p = random_poly(rng, 6);
    CHECK(parse_qpoly(p.to_string()) == p);
  }
}
