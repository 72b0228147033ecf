#include "qharm/series.hpp"

namespace qharm {

ZSeriesT<BigRat> classical_hyper_genfun(long r, long n_terms) {
  if (r < 0 || n_terms < 1) throw std::domain_error("generating function needs r >= 0 and N >= 1");
  const auto order = static_cast<std::size_t>(n_terms);
  ZSeriesT<BigRat> log_part(order);
  for (long m = 1; m <= n_terms; ++m) log_part[static_cast<std::size_t>(m)] = make_rat(1, m);
  ZSeriesT<BigRat> denom(order);
  denom[0] = 1;
  for (long j = 0; j < r; ++j) {
    ZSeriesT<BigRat> factor(order);
    factor[0] = 1;
    factor[1] = -1;
    denom = denom * factor;
  }
  return log_part * denom.inverse();
}

ZSeries q_log_series(long r, long n_terms) {
  SymbolicQ q;
  return q_log_series(q, r, n_terms);
}

ZSeries q_pochhammer_z(long r, long n_terms) {
  SymbolicQ q;
  return q_pochhammer_z(q, r, n_terms);
}

std::vector<QRatFn> genfun_check(GenfunKind kind, long r, long n_terms) {
  std::vector<QRatFn> residuals;
  residuals.reserve(static_cast<std::size_t>(n_terms));
  if (kind == GenfunKind::q) {
    SymbolicQ q;
    QHyperTable table(q);
    const ZSeries s = q_hyper_genfun(q, r, n_terms);
    for (long n = 1; n <= n_terms; ++n) residuals.push_back(s[static_cast<std::size_t>(n)] - table.at(n, r));
  } else {
    HyperTable table;
    const auto s = classical_hyper_genfun(r, n_terms);
    for (long n = 1; n <= n_terms; ++n) residuals.emplace_back(s[static_cast<std::size_t>(n)] - table.at(n, r));
  }
  return residuals;
}

}  // namespace qharm
