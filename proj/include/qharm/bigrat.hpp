#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qharm {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator by GMP.
using BigRat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den = 1);

/// Parses "a" or "a/b" with an optional leading minus. Decimals are rejected.
/// Throws std::invalid_argument on malformed input or a zero denominator.
BigRat parse_rat(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const BigRat& x);
std::string to_string(const BigInt& x);

/// Decimal rendering with `sig` significant digits (round half away from
/// zero), in plain or scientific notation depending on magnitude.
std::string to_decimal(const BigRat& x, int sig = 20);

BigRat abs(const BigRat& x);
BigRat pow(const BigRat& base, long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(long n);

inline bool is_integer(const BigRat& x) { return x.get_den() == 1; }

}  // namespace qharm
