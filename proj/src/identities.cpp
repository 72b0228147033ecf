#include "qharm/coefficients.hpp"
#include "qharm/identity.hpp"
#include "qharm/qcomb.hpp"

#include <algorithm>

namespace qharm {

namespace {

template <class W>
using Val = typename std::remove_cvref_t<W>::value_type;

// Wrap a generic builder (taking a QWorkspace of either kind) into both
// symbolic and point-evaluating forms.
template <class F>
SideBuilder q_side(F f) {
  SideBuilder s;
  s.symbolic = [f](SymbolicWorkspace& w, const Params& p) -> QRatFn { return f(w, p); };
  s.point = [f](PointWorkspace& w, const Params& p) -> BigRat { return f(w, p); };
  return s;
}

template <class F>
SideBuilder c_side(F f) {
  SideBuilder s;
  s.classical = [f](ClassicalWorkspace& w, const Params& p) -> BigRat { return f(w, p); };
  return s;
}

// [m]_q for any integer m; [-m]_q = -q^{-m} [m]_q.
template <class Q>
typename Q::value_type qint(Q& q, long m) {
  if (m >= 0) return q.q_int(m);
  return -(q.q_pow(m) * q.q_int(-m));
}

template <class Q>
typename Q::value_type qsq(Q& q, long m) {
  const typename Q::value_type x = qint(q, m);
  return x * x;
}

BigRat rat(long a, long b = 1) { return make_rat(a, b); }
BigRat brat(long n, long k) { return BigRat(binomial(n, k)); }

// --- brute-force left-hand sides ------------------------------------------

// sum_{l=1}^n q^{l-1} w(l) H_l^{(r)}(q), w(l) = [l]^p or the rising [l]^{(p)}.
enum class Weight { power, rising };

template <class W>
Val<W> forward_sum(W& w, Weight kind, long p, long r, long n) {
  using T = Val<W>;
  auto& q = w.q;
  T acc = q.constant(0);
  for (long l = 1; l <= n; ++l) {
    T term = q.q_pow(l - 1);
    for (long i = 0; i < p; ++i) term *= q.q_int(kind == Weight::power ? l : l + i);
    acc += term * w.h(l, r);
  }
  return acc;
}

BigRat classical_forward_sum(ClassicalWorkspace& w, Weight kind, long p, long r, long n) {
  BigRat acc = 0;
  for (long l = 1; l <= n; ++l) {
    const BigRat weight = kind == Weight::power ? pow(BigRat(l), p) : rising_factorial(l, p);
    acc += weight * w.h(l, r);
  }
  return acc;
}

using Labelled = std::pair<const char*, CoefVariant>;
const Labelled kVariants[] = {{"as-printed", CoefVariant::as_printed}, {"corrected", CoefVariant::corrected}};
const Labelled kRisingVariants[] = {{"via-A1q-as-printed", CoefVariant::as_printed},
                                    {"via-A1q-corrected", CoefVariant::corrected}};

// Parameter ranges shared by many identities.
const std::vector<ParamRange> kNR{{'n', 1}, {'r', 1}};
const std::vector<ParamRange> kNRP{{'n', 1}, {'r', 1}, {'p', 1}};

IdentitySpec q_identity(std::string id, std::string statement, std::vector<ParamRange> ranges) {
  IdentitySpec s;
  s.id = std::move(id);
  s.statement = std::move(statement);
  s.field = ScalarField::q_rationals;
  s.ranges = std::move(ranges);
  return s;
}

IdentitySpec classical_identity(std::string id, std::string statement, std::vector<ParamRange> ranges) {
  IdentitySpec s = q_identity(std::move(id), std::move(statement), std::move(ranges));
  s.field = ScalarField::rationals;
  return s;
}

// --- q-identities ----------------------------------------------------------

void add_q_closed_forms(std::vector<IdentitySpec>& reg) {
  const SideBuilder def = q_side([](auto& w, const Params& P) -> Val<decltype(w)> { return w.h(*P.n, *P.r); });

  auto ph01 = q_identity("ph01", "H_n^(r)(q) = qbinom(n+r-1, r-1) (H_{n+r-1}(q) - H_{r-1}(q))", kNR);
  ph01.lhs = def;
  ph01.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                             return q_hyper_ph01(w.q, *P.n, *P.r);
                           })});
  reg.push_back(std::move(ph01));

  auto ph02 = q_identity("ph02", "H_n^(r)(q) = sum_{j=1}^n qbinom(n+r-j-1, r-1) q^{rj-1} / [j]", kNR);
  ph02.lhs = def;
  ph02.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                             return q_hyper_ph02(w.q, *P.n, *P.r);
                           })});
  reg.push_back(std::move(ph02));

  auto ph022 = q_identity("ph022", "H_n^(r)(q) = sum_{j=1}^n q^{j(r-m)} binom(n+r-m-j-1, r-m-1) H_j^(m)(q), 0 <= m < r",
                          {{'n', 1}, {'r', 1}, {'m', 0}});
  ph022.lhs = def;
  ph022.variants.push_back({"classical-binomial-as-printed",
                            q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                              return q_hyper_ph022(w.table, *P.n, *P.r, *P.m, BinomialReading::classical);
                            })});
  ph022.variants.push_back({"q-binomial", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                              return q_hyper_ph022(w.table, *P.n, *P.r, *P.m, BinomialReading::q_analog);
                            })});
  reg.push_back(std::move(ph022));

  auto qh11 = q_identity("qh11", "H_n^(r+1)(q) = [n+r]/[r] H_n^(r)(q) - q^{r-1}/[r] qbinom(n+r-1, r)", kNR);
  qh11.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> { return w.h(*P.n, *P.r + 1); });
  qh11.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                             auto& q = w.q;
                             const long n = *P.n, r = *P.r;
                             return q.q_int(n + r) / q.q_int(r) * w.h(n, r) -
                                    q.q_pow(r - 1) / q.q_int(r) * q.q_binomial(n + r - 1, r);
                           })});
  reg.push_back(std::move(qh11));

  auto qh13 = q_identity("qh13", "[n+r] H_n^(r)(q) = [n+1] H_{n+1}^(r)(q) - q^{n+r-1} qbinom(n+r-1, r-1)", kNR);
  qh13.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return w.q.q_int(*P.n + *P.r) * w.h(*P.n, *P.r);
  });
  qh13.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                             auto& q = w.q;
                             const long n = *P.n, r = *P.r;
                             return q.q_int(n + 1) * w.h(n + 1, r) - q.q_pow(n + r - 1) * q.q_binomial(n + r - 1, r - 1);
                           })});
  reg.push_back(std::move(qh13));

  auto gph01 = q_identity(
      "gph01", "qbinom(k+r-1, k) H_n^(k+r)(q) = qbinom(n+k, n) H_{n+k}^(r)(q) - qbinom(n+k+r-1, n) H_k^(r)(q)",
      {{'n', 0}, {'r', 1}, {'k', 0}});
  gph01.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    const long n = *P.n, r = *P.r, k = *P.k;
    return w.q.q_binomial(k + r - 1, k) * w.h(n, k + r);
  });
  gph01.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                              auto& q = w.q;
                              const long n = *P.n, r = *P.r, k = *P.k;
                              return q.q_binomial(n + k, n) * w.h(n + k, r) - q.q_binomial(n + k + r - 1, n) * w.h(k, r);
                            })});
  reg.push_back(std::move(gph01));

  auto genfun = q_identity("genfun-q", "[z^n] -log_q(1 - q^r z) / (q (z;q)_r) = H_n^(r)(q)", {{'n', 1}, {'r', 0}});
  genfun.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> { return w.genfun_coeff(*P.r, *P.n); });
  genfun.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                               return w.h(*P.n, *P.r);
                             })});
  reg.push_back(std::move(genfun));
}

void add_q_forward_sums(std::vector<IdentitySpec>& reg) {
  auto hq1 = q_identity("eq:hq1", "sum_{l=1}^n q^{l-1} [l] H_l^(r)(q)", kNR);
  hq1.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return forward_sum(w, Weight::power, 1, *P.r, *P.n);
  });
  hq1.variants.push_back({"as-printed:first-form", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                            auto& q = w.q;
                            const long n = *P.n, r = *P.r;
                            return q.q_int(n) * q.q_int(n + r) / q.q_int(r + 1) * w.h(n, r) -
                                   q.q_pow(r) * q.q_int(n - 1) * q.q_int(n) / qsq(q, r + 1) * q.q_binomial(n + r - 1, r - 1);
                          })});
  hq1.variants.push_back({"as-printed:second-form", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                            auto& q = w.q;
                            const long n = *P.n, r = *P.r;
                            return q.q_int(n) * q.q_int(r) / q.q_int(r + 1) * w.h(n, r + 1) +
                                   q.q_pow(r - 1) / q.q_int(r + 1) * q.q_binomial(n + r, r + 1);
                          })});
  reg.push_back(std::move(hq1));

  auto sturc = q_identity("qhypersturc1", "sum_{l=0}^n q^{l-1} [l]^p H_l^(r)(q) = A_q(p,r,n) H_n^(r)(q) - B_q(p,r,n)", kNRP);
  sturc.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return forward_sum(w, Weight::power, *P.p, *P.r, *P.n);
  });
  for (const auto& [label, v] : kVariants)
    sturc.variants.push_back({label, q_side([variant = v](auto& w, const Params& P) -> Val<decltype(w)> {
                                const long p = *P.p, r = *P.r, n = *P.n;
                                return coef_q(w.q, ForwardCoef::Aq, variant, p, r, n) * w.h(n, r) -
                                       coef_q(w.q, ForwardCoef::Bq, variant, p, r, n);
                              })});
  reg.push_back(std::move(sturc));

  auto ph08 = q_identity("ph08", "sum_{l=1}^n q^{l-1} [l]^2 H_l^(r)(q), explicit p = 2 case", kNR);
  ph08.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return forward_sum(w, Weight::power, 2, *P.r, *P.n);
  });
  ph08.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                             using T = Val<decltype(w)>;
                             auto& q = w.q;
                             const long n = *P.n, r = *P.r;
                             const T a = q.q_int(n) * q.q_int(n + r) * (q.constant(1) + q.q_pow(1) * q.q_int(r + 1) * q.q_int(n)) /
                                         (q.q_int(r + 1) * q.q_int(r + 2));
                             const T b = q.q_pow(r) * q.q_int(n - 1) * q.q_int(n) * q.q_binomial(n + r - 1, r - 1) *
                                         (q.q_pow(1) * qsq(q, r + 1) * q.q_int(n) - q.q_pow(3) * qsq(q, r) + q.q_int(2)) /
                                         (qsq(q, r + 1) * qsq(q, r + 2));
                             return a * w.h(n, r) - b;
                           })});
  reg.push_back(std::move(ph08));

  auto shifted = q_identity("shifted-weight", "sum_{l=1}^n q^{l-1} [l][l+1] H_l^(r)(q)", kNR);
  shifted.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return forward_sum(w, Weight::rising, 2, *P.r, *P.n);
  });
  shifted.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                                using T = Val<decltype(w)>;
                                auto& q = w.q;
                                const long n = *P.n, r = *P.r;
                                const T a = q.q_int(n) * q.q_int(n + r) *
                                            (q.q_int(2) * q.q_int(n + 2) + q.q_pow(3) * qint(q, r - 1) * q.q_int(n + 1)) /
                                            (q.q_int(r + 1) * q.q_int(r + 2));
                                const T b = q.q_pow(r) * qint(q, n - 1) * q.q_int(n) * q.q_binomial(n + r - 1, r - 1) *
                                            (q.q_int(2) * qsq(q, r + 2) + q.q_pow(4) * qsq(q, r + 1) * qint(q, n - 2)) /
                                            (qsq(q, r + 1) * qsq(q, r + 2));
                                return a * w.h(n, r) - b;
                              })});
  for (const auto& [label, v] : kRisingVariants)
    shifted.variants.push_back({label, q_side([variant = v](auto& w, const Params& P) -> Val<decltype(w)> {
                                  const long r = *P.r, n = *P.n;
                                  return coef_q_rising(w.q, RisingCoef::A1q, variant, 2, r, n) * w.h(n, r) -
                                         coef_q_rising(w.q, RisingCoef::B1q, variant, 2, r, n);
                                })});
  reg.push_back(std::move(shifted));

  auto consec = q_identity("qharmonicconsec",
                           "sum_{l=1}^n q^{l-1} [l]^(p) H_l^(r)(q) = A_1q(p,r,n) H_n^(r)(q) - B_1q(p,r,n)", kNRP);
  consec.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    return forward_sum(w, Weight::rising, *P.p, *P.r, *P.n);
  });
  for (const auto& [label, v] : kVariants)
    consec.variants.push_back({label, q_side([variant = v](auto& w, const Params& P) -> Val<decltype(w)> {
                                 const long p = *P.p, r = *P.r, n = *P.n;
                                 return coef_q_rising(w.q, RisingCoef::A1q, variant, p, r, n) * w.h(n, r) -
                                        coef_q_rising(w.q, RisingCoef::B1q, variant, p, r, n);
                               })});
  reg.push_back(std::move(consec));

  auto triple = q_identity("triple-product-q", "sum_{l=1}^n q^{l-1} [l][l+1][l+2] H_l^(r)(q)", {});
  triple.verifiable = false;
  triple.note =
      "unverifiable-as-printed: the right-hand side mixes q-brackets with plain polynomials in n and r, so it is "
      "not a well-formed element of Q(q); only the q -> 1 reading (triple-product-classical) is checked";
  reg.push_back(std::move(triple));
}

void add_q_backward_sums(std::vector<IdentitySpec>& reg) {
  auto bhh = q_identity("qbhh1", "sum_{l=1}^n q^{2n-2l} [l] H_{n-l}^(r)(q)", kNR);
  bhh.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    using T = Val<decltype(w)>;
    auto& q = w.q;
    const long n = *P.n, r = *P.r;
    T acc = q.constant(0);
    for (long l = 1; l <= n; ++l) acc += q.q_pow(2 * n - 2 * l) * q.q_int(l) * w.h(n - l, r);
    return acc;
  });
  bhh.variants.push_back({"as-printed", q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
                            using T = Val<decltype(w)>;
                            auto& q = w.q;
                            const long n = *P.n, r = *P.r;
                            const T bracket = q.q_pow(r - 1) / q.q_int(r) + q.q_pow(r) / q.q_int(r + 1) -
                                              q.q_pow(n + r - 1) / q.q_int(n + r);
                            return q.q_int(n) * q.q_int(n + r) / (q.q_int(r) * q.q_int(r + 1)) * w.h(n, r) -
                                   q.q_binomial(n + r, r + 1) * bracket;
                          })});
  reg.push_back(std::move(bhh));

  auto cd = q_identity("cq-dq-backward", "sum_{l=1}^n q^{p(n-l)} H_{n-l}^(r)(q) = C_q(p,r,n) H_n^(r)(q) - D_q(p,r,n)", kNRP);
  cd.lhs = q_side([](auto& w, const Params& P) -> Val<decltype(w)> {
    using T = Val<decltype(w)>;
    auto& q = w.q;
    const long n = *P.n, r = *P.r, p = *P.p;
    T acc = q.constant(0);
    for (long l = 1; l <= n; ++l) acc += q.q_pow(p * (n - l)) * w.h(n - l, r);
    return acc;
  });
  for (const auto& [label, v] : kVariants)
    cd.variants.push_back({label, q_side([variant = v](auto& w, const Params& P) -> Val<decltype(w)> {
                             const long p = *P.p, r = *P.r, n = *P.n;
                             return coef_backward_q(w.q, BackwardCoef::Cq, variant, p, r, n) * w.h(n, r) -
                                    coef_backward_q(w.q, BackwardCoef::Dq, variant, p, r, n);
                           })});
  reg.push_back(std::move(cd));
}

// --- classical identities --------------------------------------------------

void add_classical(std::vector<IdentitySpec>& reg) {
  const std::vector<ParamRange> nk{{'n', 1}, {'k', 1}};

  const std::pair<const char*, PowerSumRoute> routes[] = {{"ber", PowerSumRoute::ber}, {"ber1", PowerSumRoute::ber1}};
  for (const auto& [id, r] : routes) {
    const PowerSumRoute route = r;
    auto s = classical_identity(id,
                                route == PowerSumRoute::ber ? "sum_{l=1}^n l^k = 1/(k+1) sum_{j<=k} C(k+1,j) B_j n^{k+1-j}"
                                                            : "sum_{l=1}^n l^k = (B_{k+1}(n+1) - B_{k+1}(1)) / (k+1)",
                                nk);
    s.lhs = c_side([](ClassicalWorkspace&, const Params& P) { return sum_powers(*P.n, *P.k, PowerSumRoute::brute); });
    s.variants.push_back({"as-printed", c_side([route](ClassicalWorkspace&, const Params& P) {
                            return sum_powers(*P.n, *P.k, route);
                          })});
    reg.push_back(std::move(s));
  }

  const SideBuilder weighted_h = c_side([](ClassicalWorkspace& w, const Params& P) {
    BigRat acc = 0;
    for (long l = 1; l <= *P.n; ++l) acc += pow(BigRat(l), *P.k) * w.h(l, 1);
    return acc;
  });

  auto prop1 = classical_identity("prop1", "sum_{l=1}^n l^k H_l via Bernoulli numbers", nk);
  prop1.lhs = weighted_h;
  prop1.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                              const long n = *P.n, k = *P.k;
                              BigRat head = 0;
                              for (long j = 0; j <= k; ++j) head += brat(k + 1, j) * bernoulli_number(j) * pow(BigRat(n), k + 1 - j);
                              BigRat tail = 0;
                              for (long l = 1; l < n; ++l) tail += (w.h(n, 1) - w.h(l, 1)) * pow(BigRat(l), k);
                              return BigRat(w.h(n, 1) / (k + 1) * head - tail);
                            })});
  reg.push_back(std::move(prop1));

  auto prop2 = classical_identity("prop2", "sum_{l=1}^n l^k H_l via Bernoulli polynomials", nk);
  prop2.lhs = weighted_h;
  prop2.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                              const long n = *P.n, k = *P.k;
                              const BigRat b1 = bernoulli_poly_eval(k + 1, 1);
                              BigRat tail = 0;
                              for (long l = 1; l < n; ++l) tail += (bernoulli_poly_eval(k + 1, l + 1) - b1) / ((k + 1) * (l + 1));
                              return BigRat(w.h(n, 1) / (k + 1) * (bernoulli_poly_eval(k + 1, n + 1) - b1) - tail);
                            })});
  reg.push_back(std::move(prop2));

  auto th110 = classical_identity("th:110", "sum_{l=1}^n l H_l^(r)", kNR);
  th110.lhs = c_side([](ClassicalWorkspace& w, const Params& P) {
    return classical_forward_sum(w, Weight::power, 1, *P.r, *P.n);
  });
  th110.variants.push_back({"as-printed:first-form", c_side([](ClassicalWorkspace& w, const Params& P) {
                              const long n = *P.n, r = *P.r;
                              return BigRat(rat(n * (n + r), r + 1) * w.h(n, r) -
                                            rising_factorial(n - 1, r + 1) / (BigRat(factorial(r - 1)) * (r + 1) * (r + 1)));
                            })});
  th110.variants.push_back({"as-printed:second-form", c_side([](ClassicalWorkspace& w, const Params& P) {
                              const long n = *P.n, r = *P.r;
                              return BigRat(rat(n * r, r + 1) * w.h(n, r + 1) + brat(n + r, r + 1) / (r + 1));
                            })});
  reg.push_back(std::move(th110));

  auto sturc = classical_identity("hypersturc1", "sum_{l=0}^n l^p H_l^(r) = A(p,r,n) H_n^(r) - B(p,r,n)", kNRP);
  sturc.lhs = c_side([](ClassicalWorkspace& w, const Params& P) {
    return classical_forward_sum(w, Weight::power, *P.p, *P.r, *P.n);
  });
  sturc.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                              const long p = *P.p, r = *P.r, n = *P.n;
                              return BigRat(coef_classical(ClassicalCoef::A, p, r, n) * w.h(n, r) -
                                            coef_classical(ClassicalCoef::B, p, r, n));
                            })});
  reg.push_back(std::move(sturc));

  auto consec = classical_identity("harmonicconsec", "sum_{l=1}^n (l)^(p) H_l^(r) = A_1(p,r,n) H_n^(r) - B_1(p,r,n)", kNRP);
  consec.lhs = c_side([](ClassicalWorkspace& w, const Params& P) {
    return classical_forward_sum(w, Weight::rising, *P.p, *P.r, *P.n);
  });
  consec.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                               const long p = *P.p, r = *P.r, n = *P.n;
                               return BigRat(coef_classical_rising(ClassicalRisingCoef::A1, p, r, n) * w.h(n, r) -
                                             coef_classical_rising(ClassicalRisingCoef::B1, p, r, n));
                             })});
  reg.push_back(std::move(consec));

  const auto backward_sum = [](ClassicalWorkspace& w, long p, long r, long n) {
    BigRat acc = 0;  // the l = 0 term is dropped
    for (long l = 1; l <= n; ++l) acc += pow(BigRat(l), p) * w.h(n - l, r);
    return acc;
  };

  auto bhh1 = classical_identity("bhh1", "sum_{l=1}^n l H_{n-l}^(r)", kNR);
  bhh1.lhs = c_side([backward_sum](ClassicalWorkspace& w, const Params& P) { return backward_sum(w, 1, *P.r, *P.n); });
  bhh1.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                             const long n = *P.n, r = *P.r;
                             const BigRat den = BigRat(factorial(r - 1)) * r * r * (r + 1) * (r + 1);
                             return BigRat(rat(n * (n + r), r * (r + 1)) * w.h(n, r) -
                                           rising_factorial(n, r) * ((2 * r + 1) * n + r * r) / den);
                           })});
  reg.push_back(std::move(bhh1));

  auto bhh2 = classical_identity("bhh2", "sum_{l=0}^n l^p H_{n-l}^(r) = A_2(p,r,n) H_n^(r) - B_2(p,r,n)", kNRP);
  bhh2.lhs = c_side([backward_sum](ClassicalWorkspace& w, const Params& P) { return backward_sum(w, *P.p, *P.r, *P.n); });
  bhh2.variants.push_back({"recurrence", c_side([](ClassicalWorkspace& w, const Params& P) {
                             const long p = *P.p, r = *P.r, n = *P.n;
                             return BigRat(coef_backward_classical(BackwardClassicalCoef::A2, p, r, n) * w.h(n, r) -
                                           coef_backward_classical(BackwardClassicalCoef::B2, p, r, n));
                           })});
  reg.push_back(std::move(bhh2));

  auto rec = classical_identity("classical-recurrence-h02", "H_n^(r+1) = (n+r)/r H_n^(r) - C(n+r-1, r)/r", kNR);
  rec.lhs = c_side([](ClassicalWorkspace& w, const Params& P) { return w.h(*P.n, *P.r + 1); });
  rec.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) {
                            const long n = *P.n, r = *P.r;
                            return BigRat(rat(n + r, r) * w.h(n, r) - brat(n + r - 1, r) / r);
                          })});
  reg.push_back(std::move(rec));

  auto genfun = classical_identity("genfun-classical", "[z^n] -log(1 - z) / (1 - z)^r = H_n^(r)", {{'n', 1}, {'r', 0}});
  genfun.lhs = c_side([](ClassicalWorkspace& w, const Params& P) { return w.genfun_coeff(*P.r, *P.n); });
  genfun.variants.push_back({"as-printed", c_side([](ClassicalWorkspace& w, const Params& P) { return w.h(*P.n, *P.r); })});
  reg.push_back(std::move(genfun));

  auto triple = classical_identity("triple-product-classical", "sum_{l=1}^n l(l+1)(l+2) H_l^(r), q -> 1 reading", kNR);
  triple.lhs = c_side([](ClassicalWorkspace& w, const Params& P) {
    return classical_forward_sum(w, Weight::rising, 3, *P.r, *P.n);
  });
  triple.variants.push_back({"q-to-1-reading", c_side([](ClassicalWorkspace& w, const Params& P) {
                               const long n = *P.n, r = *P.r;
                               const BigRat a = BigRat(n * (n + r)) *
                                                ((r + 1) * (r + 2) * n * n + 3 * (r + 1) * (r + 4) * n + 2 * (r * r + 6 * r + 11)) /
                                                ((r + 1) * (r + 2) * (r + 3));
                               const long s = (r + 1) * (r + 2) * (r + 3);
                               const BigRat poly = BigRat((r + 1) * (r + 1) * (r + 2) * (r + 2) * n * n +
                                                          (r + 1) * (r + 1) * (r * r + 16 * r + 34) * n +
                                                          12 * (3 * r * r + 12 * r + 11));
                               const BigRat b = BigRat((n - 1) * n) * brat(n + r - 1, r - 1) * poly / (BigRat(s) * s);
                               return BigRat(a * w.h(n, r) - b);
                             })});
  reg.push_back(std::move(triple));
}

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> reg;
  add_q_closed_forms(reg);
  add_q_forward_sums(reg);
  add_q_backward_sums(reg);
  add_classical(reg);
  std::sort(reg.begin(), reg.end(), [](const IdentitySpec& a, const IdentitySpec& b) { return a.id < b.id; });
  return reg;
}

}  // namespace

const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> registry = build_registry();
  return registry;
}

const IdentitySpec* find_identity(std::string_view id) {
  for (const auto& spec : identity_registry())
    if (spec.id == id) return &spec;
  return nullptr;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& spec : identity_registry()) ids.push_back(spec.id);
  return ids;
}

BigRat ClassicalWorkspace::genfun_coeff(long r, long n) {
  auto it = genfun_.find(r);
  if (it == genfun_.end() || static_cast<long>(it->second.order()) < n)
    it = genfun_.insert_or_assign(r, classical_hyper_genfun(r, std::max(n, 12L))).first;
  return it->second[static_cast<std::size_t>(n)];
}

}  // namespace qharm
