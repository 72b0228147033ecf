#include "qharm/bigrat.hpp"

#include <cctype>
#include <stdexcept>

namespace qharm {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigRat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rat(n, d);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const BigRat& x, int sig) {
  if (sig < 1) sig = 1;
  if (x == 0) return "0";
  const bool negative = x < 0;
  BigInt num = negative ? BigInt(-x.get_num()) : BigInt(x.get_num());
  const BigInt& den = x.get_den();

  // Find e with 10^e <= |x| < 10^(e+1).
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  auto ge_pow10 = [&](long k) {
    // |x| >= 10^k  <=>  num >= den * 10^k
    if (k >= 0) return num >= den * pow(BigInt(10), static_cast<unsigned long>(k));
    return num * pow(BigInt(10), static_cast<unsigned long>(-k)) >= den;
  };
  while (!ge_pow10(e)) --e;
  while (ge_pow10(e + 1)) ++e;

  // digits = round(|x| * 10^(sig-1-e))
  const long shift = sig - 1 - e;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow(BigInt(10), static_cast<unsigned long>(shift));
  else
    scaled_den *= pow(BigInt(10), static_cast<unsigned long>(-shift));
  BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  std::string ds = digits.get_str();
  if (static_cast<long>(ds.size()) > sig) {  // rounding carried into a new digit
    ++e;
    ds.pop_back();
  }

  std::string out = negative ? "-" : "";
  if (e >= sig || e < -6) {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
  } else if (e >= 0) {
    out += ds.substr(0, static_cast<std::size_t>(e) + 1);
    if (static_cast<long>(ds.size()) > e + 1) out += "." + ds.substr(static_cast<std::size_t>(e) + 1);
  } else {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  return out;
}

BigRat abs(const BigRat& x) { return x < 0 ? BigRat(-x) : x; }

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRat pow(const BigRat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    const BigRat inv = 1 / base;
    return pow(inv, -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return make_rat(pow(base.get_num(), e), pow(base.get_den(), e));
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace qharm
