#include "entangle/fisher_hartwig.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entangle/error.hpp"
#include "entangle/numerics.hpp"

namespace entangle::fisher_hartwig {

using numerics::kPi;

namespace {

void require_off_cut(double lambda) {
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  if (std::abs(lambda) <= 1.0)
    throw DomainError("lambda = " + std::to_string(lambda) + " lies on the cut [-1, 1]");
}

// ln((λ+1)/(λ-1)); the ratio is real positive for real λ off the cut, so
// the principal branch gives arg = 0.
double log_ratio(double lambda) { return std::log((lambda + 1.0) / (lambda - 1.0)); }

}  // namespace

std::complex<double> beta_of_lambda(double lambda) {
  require_off_cut(lambda);
  // 1/(2πi) · x = -i x / 2π
  return {0.0, -log_ratio(lambda) / (2.0 * kPi)};
}

FHPoint make_point(double lambda, fermion1d::FermiMomentum k_f) {
  const auto beta = beta_of_lambda(lambda);
  const double y = beta.imag();
  return {lambda, k_f.radians(), beta, -y * y};
}

double linear_rate(double lambda, fermion1d::FermiMomentum k_f) {
  require_off_cut(lambda);
  // Symbol of lambda - G is lambda + 1 on the sea |k| < k_f and lambda - 1 outside.
  const double fill = k_f.radians() / kPi;
  return fill * std::log(std::abs(lambda + 1.0)) + (1.0 - fill) * std::log(std::abs(lambda - 1.0));
}

double fh_log_det(long L, fermion1d::FermiMomentum k_f, double lambda) {
  if (L < 1) throw DomainError("segment length must be >= 1");
  const FHPoint pt = make_point(lambda, k_f);
  const double jump = 2.0 - 2.0 * std::cos(2.0 * k_f.radians());
  if (!(jump > 0.0)) throw DomainError("singular symbol: 2 - 2cos(2k_f) vanishes");
  const double b2 = pt.beta_sq;
  return static_cast<double>(L) * linear_rate(lambda, k_f) -
         2.0 * b2 * std::log(static_cast<double>(L)) +
         2.0 * numerics::log_barnes_g_pair(b2) - b2 * std::log(jump);
}

double exact_log_det(long L, fermion1d::FermiMomentum k_f, double lambda) {
  require_off_cut(lambda);
  const auto g = fermion1d::build_correlation_matrix(L, k_f);
  numerics::Matrix a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) a(i, j) = (i == j ? lambda : 0.0) - g(i, j);
  const auto det = numerics::log_abs_det(a);
  if (det.sign == 0) throw NumericalError("lambda I - G_L is numerically singular");
  return det.logabs;
}

std::vector<ErrorRow> fh_error_scan(std::span<const long> L_values,
                                    fermion1d::FermiMomentum k_f, double lambda) {
  if (L_values.empty()) throw DomainError("scan needs at least one L");
  if (!std::is_sorted(L_values.begin(), L_values.end()))
    throw DomainError("scan L values must be ascending");
  std::vector<ErrorRow> rows;
  for (long L : L_values) {
    const double ex = exact_log_det(L, k_f, lambda);
    const double as = fh_log_det(L, k_f, lambda);
    rows.push_back({L, ex, as, std::abs(ex - as)});
  }
  return rows;
}

}  // namespace entangle::fisher_hartwig
