#include "zpoly.hpp"

#include <cstdint>
#include <stdexcept>

namespace qharm::detail {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Primes just below 2^31, largest first. Products of two residues fit in u64.
const std::vector<u64>& modular_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 n = (u64{1} << 31) - 1; out.size() < 256; n -= 2)
      if (is_prime(n)) out.push_back(n);
    return out;
  }();
  return primes;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 residue(const BigInt& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = residue(a[i], p);
  trim_mod(r);
  return r;
}

// a <- a mod b; b nonempty with nonzero lead.
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    trim_mod(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

ZPoly primitive_part(ZPoly p) {
  BigInt g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return p;
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

bool divides(const ZPoly& d, const ZPoly& a) { return div_exact(a, d).has_value(); }

}  // namespace

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ContentSplit split_content(const QPoly& p) {
  ContentSplit out;
  if (p.is_zero()) {
    out.content = 0;
    return out;
  }
  BigInt lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  out.primitive.resize(p.coeffs().size());
  BigInt g = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigRat& c = p.coeffs()[i];
    BigInt v = lcm / c.get_den();
    v *= c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.primitive[i] = std::move(v);
  }
  if (out.primitive.back() < 0) g = -g;
  for (auto& v : out.primitive) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  out.content = make_rat(g, lcm);
  return out;
}

QPoly join_content(const BigRat& content, const ZPoly& primitive) {
  std::vector<BigRat> coeffs;
  coeffs.reserve(primitive.size());
  for (const auto& c : primitive) coeffs.emplace_back(content * c);
  return QPoly(std::move(coeffs));
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

std::optional<ZPoly> div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1);
  const BigInt& lb = b.back();
  const bool unit = lb == 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    BigInt c;
    if (unit) {
      c = top;
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    quot[k] = std::move(c);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  trim(quot);
  return quot;
}

ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) throw std::domain_error("gcd_primitive expects nonzero inputs");
  if (a.size() == 1 || b.size() == 1) return ZPoly{BigInt(1)};
  if (a == b) return a;
  // Cheap exits for the very common case where one input divides the other.
  if (a.size() <= b.size() && divides(a, b)) return a;
  if (b.size() <= a.size() && divides(b, a)) return b;

  BigInt lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  ZPoly acc;           // CRT accumulator, residues in [0, modulus)
  BigInt modulus = 0;  // 0 means no image accumulated yet
  std::size_t acc_deg = 0;
  ZPoly last_candidate;

  for (const u64 p : modular_primes()) {
    if (residue(a.back(), p) == 0 || residue(b.back(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
    if (g.size() == 1) return ZPoly{BigInt(1)};
    const u64 scale = residue(lc_gcd, p);
    for (auto& c : g) c = c * scale % p;
    const std::size_t deg = g.size() - 1;

    if (modulus == 0 || deg < acc_deg) {
      acc.assign(g.size(), BigInt(0));
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      acc_deg = deg;
      last_candidate.clear();
    } else if (deg > acc_deg) {
      continue;  // unlucky prime
    } else {
      const u64 m_inv = inv_mod(residue(modulus, p), p);
      for (std::size_t i = 0; i <= deg; ++i) {
        const u64 h = residue(acc[i], p);
        const u64 t = (g[i] + p - h) % p * m_inv % p;
        mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
      }
      modulus *= static_cast<unsigned long>(p);
    }

    ZPoly lifted = acc;
    const BigInt half = modulus / 2;
    for (auto& c : lifted)
      if (c > half) c -= modulus;
    trim(lifted);
    if (lifted.empty()) continue;
    ZPoly candidate = primitive_part(std::move(lifted));
    // Trial division only once the lift has stabilised across two primes.
    if (candidate == last_candidate && divides(candidate, a) && divides(candidate, b)) return candidate;
    last_candidate = std::move(candidate);
  }
  throw std::runtime_error("modular gcd exhausted its prime table");
}

}  // namespace qharm::detail
