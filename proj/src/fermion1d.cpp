#include "entangle/fermion1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entangle/error.hpp"

namespace entangle::fermion1d {

using numerics::kPi;
using numerics::SymMatrix;

namespace {
constexpr double kClampTol = 1e-9;
}

FermiMomentum::FermiMomentum(double k_f) : k_f_(k_f) {
  if (!(k_f > 0.0 && k_f < kPi))
    throw DomainError("Fermi momentum must satisfy 0 < k_f < pi, got " + std::to_string(k_f));
}

double sine_kernel_entry(long l, FermiMomentum k_f) {
  const double kf = k_f.radians();
  if (l == 0) return 1.0 - 2.0 * kf / kPi;
  const double dl = static_cast<double>(l);
  return -(2.0 / kPi) * std::sin(kf * dl) / dl;
}

SymMatrix build_correlation_matrix(long L, FermiMomentum k_f) {
  if (L < 1) throw DomainError("segment length must be >= 1");
  std::vector<double> g(static_cast<std::size_t>(L));
  for (long l = 0; l < L; ++l) g[l] = sine_kernel_entry(l, k_f);
  SymMatrix m(static_cast<std::size_t>(L));
  for (long i = 0; i < L; ++i)
    for (long j = i; j < L; ++j) m.set(i, j, g[j - i]);
  return m;
}

double mode_entropy(double nu) {
  if (std::abs(nu) > 1.0 + kClampTol)
    throw NumericalError("correlation eigenvalue " + std::to_string(nu) + " outside [-1, 1]");
  if (1.0 - std::abs(nu) <= kClampTol) return 0.0;
  const double p = 0.5 * (1.0 + nu);
  const double q = 0.5 * (1.0 - nu);
  return -p * std::log(p) - q * std::log(q);
}

double entropy_from_spectrum(std::span<const double> nus) {
  double s = 0.0;
  for (double nu : nus) s += mode_entropy(nu);
  return s;
}

CorrelationSpectrum segment_spectrum(long L, FermiMomentum k_f) {
  auto eig = numerics::symmetric_eigenvalues(build_correlation_matrix(L, k_f));
  return {std::move(eig.values)};
}

double segment_entropy(long L, FermiMomentum k_f) {
  return entropy_from_spectrum(segment_spectrum(L, k_f));
}

std::vector<ScanRow> entropy_scan(std::span<const long> L_values, FermiMomentum k_f) {
  if (L_values.empty()) throw DomainError("scan needs at least one L");
  if (!std::is_sorted(L_values.begin(), L_values.end()))
    throw DomainError("scan L values must be ascending");
  std::vector<ScanRow> rows;
  rows.reserve(L_values.size());
  for (long L : L_values) rows.push_back({L, segment_entropy(L, k_f)});
  return rows;
}

double local_log_slope(long L, FermiMomentum k_f) {
  if (L < 2 || L % 2 != 0) throw DomainError("local slope needs an even L >= 2");
  return (segment_entropy(2 * L, k_f) - segment_entropy(L / 2, k_f)) / std::log(4.0);
}

std::vector<int> ring_ground_occupation(int n_sites, int n_particles) {
  if (n_sites < 1) throw DomainError("ring needs at least one site");
  if (n_particles < 0 || n_particles > n_sites)
    throw DomainError("particle number must lie in [0, n_sites]");
  std::vector<int> modes(static_cast<std::size_t>(n_sites));
  for (int m = 0; m < n_sites; ++m) modes[m] = m;
  auto energy = [n_sites](int m) { return -2.0 * std::cos(2.0 * kPi * m / n_sites); };
  std::stable_sort(modes.begin(), modes.end(),
                   [&](int a, int b) { return energy(a) < energy(b); });
  if (n_particles > 0 && n_particles < n_sites) {
    const double gap = energy(modes[n_particles]) - energy(modes[n_particles - 1]);
    if (gap < 1e-12)
      throw NumericalError("ring with " + std::to_string(n_sites) + " sites and " +
                           std::to_string(n_particles) +
                           " particles has a degenerate ground state");
  }
  modes.resize(static_cast<std::size_t>(n_particles));
  std::sort(modes.begin(), modes.end());
  return modes;
}

SymMatrix ring_correlation_matrix(int n_sites, int n_particles, std::span<const int> sites) {
  const auto occupied = ring_ground_occupation(n_sites, n_particles);
  for (int s : sites)
    if (s < 0 || s >= n_sites) throw DomainError("site index outside the ring");
  SymMatrix c(sites.size());
  for (std::size_t a = 0; a < sites.size(); ++a)
    for (std::size_t b = a; b < sites.size(); ++b) {
      // Occupied set is closed under m -> -m, so the sum is real.
      double v = 0.0;
      for (int m : occupied) v += std::cos(2.0 * kPi * m * (sites[a] - sites[b]) / n_sites);
      c.set(a, b, v / n_sites);
    }
  return c;
}

double ring_block_entropy(int n_sites, int n_particles, std::span<const int> sites) {
  auto eig = numerics::symmetric_eigenvalues(ring_correlation_matrix(n_sites, n_particles, sites));
  for (double& c : eig.values) c = 2.0 * c - 1.0;
  return entropy_from_spectrum(eig.values);
}

}  // namespace entangle::fermion1d
