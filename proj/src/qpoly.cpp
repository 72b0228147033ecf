#include "qharm/qpoly.hpp"

#include "zpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace qharm {

QPoly::QPoly(const BigRat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const BigRat& c, std::size_t power) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(power + 1, BigRat(0));
  p.coeffs_[power] = c;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat QPoly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : BigRat(0); }

BigRat QPoly::lead() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

BigRat QPoly::eval(const BigRat& at) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  const BigRat inv = 1 / lead();
  return *this * inv;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.coeffs_[0];
  if (b.is_constant()) return a * b.coeffs_[0];
  const auto sa = detail::split_content(a);
  const auto sb = detail::split_content(b);
  return detail::join_content(sa.content * sb.content, detail::mul(sa.primitive, sb.primitive));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRat> rem = a.coeffs();
  if (rem.size() < b.coeffs().size()) return {QPoly(), a};
  std::vector<BigRat> quot(rem.size() - b.coeffs().size() + 1);
  const BigRat inv = 1 / b.lead();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRat c = rem[k + db] * inv;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (b.is_constant()) return a * (1 / b.coeffs()[0]);
  const auto sa = detail::split_content(a);
  const auto sb = detail::split_content(b);
  auto q = detail::div_exact(sa.primitive, sb.primitive);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return detail::join_content(sa.content / sb.content, *q);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return QPoly(1);
  const auto sa = detail::split_content(a);
  const auto sb = detail::split_content(b);
  return detail::join_content(BigRat(1), detail::gcd_primitive(sa.primitive, sb.primitive)).monic();
}

QPoly gcd_euclid(QPoly a, QPoly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigRat& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRat mag = negative ? BigRat(-c) : c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0) {
      out += qharm::to_string(mag);
      continue;
    }
    if (mag != 1) out += is_integer(mag) ? qharm::to_string(mag) : "(" + qharm::to_string(mag) + ")";
    out += 'q';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  QPoly parse() {
    if (s_.empty()) fail();
    QPoly out;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail();
      }
      first = false;
      out += parse_term(negative);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail() const { throw std::invalid_argument("malformed polynomial '" + s_ + "'"); }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
    return d;
  }

  BigRat rational() {
    std::string num = digits();
    if (num.empty()) fail();
    if (peek() != '/') return BigRat(BigInt(num, 10));
    ++pos_;
    std::string den = digits();
    if (den.empty() || BigInt(den, 10) == 0) fail();
    return make_rat(BigInt(num, 10), BigInt(den, 10));
  }

  QPoly parse_term(bool negative) {
    BigRat coef = 1;
    bool has_coef = false;
    if (peek() == '(') {
      ++pos_;
      coef = rational();
      if (peek() != ')') fail();
      ++pos_;
      has_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      has_coef = true;
    }
    if (has_coef && peek() == '*') ++pos_;
    std::size_t power = 0;
    if (peek() == 'q') {
      ++pos_;
      power = 1;
      if (peek() == '^') {
        ++pos_;
        std::string e = digits();
        if (e.empty()) fail();
        power = std::stoul(e);
      }
    } else if (!has_coef) {
      fail();
    }
    return QPoly::monomial(negative ? BigRat(-coef) : coef, power);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qharm
