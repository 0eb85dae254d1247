#include "entangle/spin_order.hpp"

#include <algorithm>
#include <cmath>

#include "entangle/error.hpp"
#include "entangle/numerics.hpp"

namespace entangle::spin {

using numerics::log_gamma;
using numerics::kPi;

namespace {

void check_afm(long n, long n1) {
  if (n < 1) throw DomainError("AFM sublattice size must be >= 1");
  if (n1 < 0 || n1 > n) throw DomainError("AFM subsystem size must lie in [0, n]");
}

// ln k! via Γ(k+1).
double log_factorial(long k) { return log_gamma(static_cast<double>(k) + 1.0); }

}  // namespace

double afm_lambda_sq(long n, long n1, long s1) {
  check_afm(n, n1);
  if (s1 < 0) throw DomainError("sector spin S1 must be >= 0");
  const long n2 = n - n1;
  if (s1 > std::min(n1, n2)) return 0.0;
  const double log_num = std::log(static_cast<double>(n) + 1.0) +
                         2.0 * (log_factorial(n2) + log_factorial(n1));
  const double log_den = log_factorial(n2 - s1) + log_factorial(n2 + s1 + 1) +
                         log_factorial(n1 - s1) + log_factorial(n1 + s1 + 1);
  return std::exp(log_num - log_den);
}

AfmSpectrum afm_spectrum(long n, long n1) {
  check_afm(n, n1);
  AfmSpectrum out;
  const long top = std::min(n1, n - n1);
  out.entries.reserve(static_cast<std::size_t>(top + 1));
  for (long s1 = 0; s1 <= top; ++s1) out.entries.push_back({s1, afm_lambda_sq(n, n1, s1)});
  return out;
}

double afm_entropy(long n, long n1) {
  double e = 0.0;
  for (const auto& [s1, w] : afm_spectrum(n, n1).entries)
    if (w > 0.0) e -= static_cast<double>(2 * s1 + 1) * w * std::log(w);
  return std::max(e, 0.0);
}

double afm_entropy_asymptotic(long n, long n1) {
  check_afm(n, n1);
  if (n1 == 0 || n1 == n)
    throw DomainError("asymptotic AFM entropy needs 1 <= n1 <= n-1");
  const double N = n, N1 = n1;
  return std::log(N1 - N1 * N1 / N + 0.5 * std::sqrt(kPi * (N - N1) * N1 / N));
}

double fm_entropy(long total, long sub1) {
  if (total < 0 || sub1 < 0 || sub1 > total)
    throw DomainError("FM partition must satisfy 0 <= sub1 <= total");
  const double e = std::log1p(static_cast<double>(sub1)) +
                   std::log1p(static_cast<double>(total - sub1)) -
                   std::log1p(static_cast<double>(total));
  return std::max(0.5 * e, 0.0);
}

}  // namespace entangle::spin
