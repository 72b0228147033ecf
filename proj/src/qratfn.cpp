#include "qharm/qratfn.hpp"

namespace qharm {

namespace {

bool is_one(const QPoly& p) { return p.degree() == 0 && p.coeffs()[0] == 1; }

// Divides p by (q - 1) synthetically; p(1) must be 0.
QPoly divide_by_q_minus_1(const QPoly& p) {
  const auto& c = p.coeffs();
  std::vector<BigRat> out(c.size() - 1);
  BigRat carry = 0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    carry += c[k + 1];
    out[k] = carry;
  }
  return QPoly(std::move(out));
}

}  // namespace

QRatFn::QRatFn(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = gcd(num, den);
  num_ = is_one(g) ? num : exact_div(num, g);
  den_ = is_one(g) ? den : exact_div(den, g);
  const BigRat lc = den_.lead();
  if (lc != 1) {
    const BigRat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

QRatFn QRatFn::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  QPoly n = den_;
  QPoly d = num_;
  const BigRat inv = 1 / d.lead();
  return {n * inv, d * inv, Reduced{}};
}

QRatFn QRatFn::q_pow(long e) {
  if (e >= 0) return QRatFn(QPoly::monomial(1, static_cast<std::size_t>(e)));
  return {QPoly(1), QPoly::monomial(1, static_cast<std::size_t>(-e)), Reduced{}};
}

QRatFn& QRatFn::operator+=(const QRatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_one(den_) && is_one(o.den_)) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    QPoly n = num_ + o.num_;
    return *this = QRatFn(n, den_);
  }
  // Henrici: with g = gcd(b, d), only g can share factors with the new numerator.
  const QPoly g = gcd(den_, o.den_);
  if (is_one(g)) {
    QPoly n = num_ * o.den_ + o.num_ * den_;
    if (n.is_zero()) return *this = QRatFn();
    den_ = den_ * o.den_;
    num_ = std::move(n);
    return *this;
  }
  const QPoly b1 = exact_div(den_, g);
  const QPoly d1 = exact_div(o.den_, g);
  QPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = QRatFn();
  const QPoly h = gcd(n, g);
  QPoly g1 = is_one(h) ? g : exact_div(g, h);
  if (!is_one(h)) n = exact_div(n, h);
  num_ = std::move(n);
  den_ = b1 * d1 * g1;
  return *this;
}

QRatFn& QRatFn::operator-=(const QRatFn& o) { return *this += -o; }

QRatFn& QRatFn::operator*=(const QRatFn& o) {
  if (is_zero() || o.is_zero()) return *this = QRatFn();
  const QPoly g1 = gcd(num_, o.den_);
  const QPoly g2 = gcd(o.num_, den_);
  const QPoly a = is_one(g1) ? num_ : exact_div(num_, g1);
  const QPoly d = is_one(g1) ? o.den_ : exact_div(o.den_, g1);
  const QPoly c = is_one(g2) ? o.num_ : exact_div(o.num_, g2);
  const QPoly b = is_one(g2) ? den_ : exact_div(den_, g2);
  num_ = a * c;
  den_ = b * d;
  const BigRat lc = den_.lead();
  if (lc != 1) {
    const BigRat inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

QRatFn& QRatFn::operator/=(const QRatFn& o) { return *this *= o.inverse(); }

QRatFn QRatFn::operator-() const { return {-num_, den_, Reduced{}}; }

std::string QRatFn::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRatFn ratfn_arith(const QRatFn& a, const QRatFn& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

bool equal_by_cross_multiplication(const QRatFn& a, const QRatFn& b) {
  return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

BigRat ratfn_eval(const QRatFn& f, const BigRat& q0) {
  const BigRat d = f.den().eval(q0);
  if (d == 0) throw PoleError("pole at q = " + qharm::to_string(q0));
  return f.num().eval(q0) / d;
}

BigRat ratfn_limit_q1(const QRatFn& f) {
  QPoly num = f.num();
  QPoly den = f.den();
  while (!num.is_zero() && num.eval(1) == 0 && den.eval(1) == 0) {
    num = divide_by_q_minus_1(num);
    den = divide_by_q_minus_1(den);
  }
  const BigRat d = den.eval(1);
  if (d == 0) throw PoleError("pole at q = 1");
  return num.eval(1) / d;
}

QRatFn parse_qratfn(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (!s.empty() && s.front() == '(') {
    std::size_t close = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string::npos && s.compare(close, 3, ")/(") == 0) {
      if (s.back() != ')') throw std::invalid_argument("malformed rational function '" + std::string(text) + "'");
      const QPoly num = parse_qpoly(std::string_view(s).substr(1, close - 1));
      const QPoly den = parse_qpoly(std::string_view(s).substr(close + 3, s.size() - close - 4));
      if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
      return {num, den};
    }
  }
  return QRatFn(parse_qpoly(s));
}

}  // namespace qharm
