#pragma once

#include <span>
#include <vector>

#include "entangle/numerics.hpp"

// Free spinless fermions on the infinite chain, ground state filled up to
// the Fermi momentum k_f. Entropy of an L-site segment from the spectrum of
// the Majorana-convention correlation matrix G_L (eigenvalues in [-1, 1]).
namespace entangle::fermion1d {

/// Fermi momentum in radians, 0 < k_f < π.
class FermiMomentum {
 public:
  explicit FermiMomentum(double k_f);
  double radians() const noexcept { return k_f_; }

 private:
  double k_f_;
};

struct CorrelationSpectrum {
  std::vector<double> nus;
};

struct ScanRow {
  long L;
  double entropy;
};

/// g_l = (1/2π)∫ e^{-ilk} g(k) dk with g = -1 inside the Fermi sea, +1 outside.
double sine_kernel_entry(long l, FermiMomentum k_f);

/// (G_L)_{lm} = g_{l-m}; symmetric Toeplitz.
numerics::SymMatrix build_correlation_matrix(long L, FermiMomentum k_f);

/// e(1, ν) = -((1+ν)/2)ln((1+ν)/2) - ((1-ν)/2)ln((1-ν)/2); 0 at |ν| = 1.
double mode_entropy(double nu);

/// Σ e(1, ν_i). Values within 1e-9 outside [-1, 1] are clamped; beyond
/// that a NumericalError is raised.
double entropy_from_spectrum(std::span<const double> nus);
inline double entropy_from_spectrum(const CorrelationSpectrum& s) {
  return entropy_from_spectrum(std::span<const double>(s.nus));
}

CorrelationSpectrum segment_spectrum(long L, FermiMomentum k_f);
double segment_entropy(long L, FermiMomentum k_f);
std::vector<ScanRow> entropy_scan(std::span<const long> L_values, FermiMomentum k_f);

/// Symmetric finite-difference estimate of dS/d(ln L):
/// (S(2L) - S(L/2)) / ln 4. Requires L ≥ 2 and even.
double local_log_slope(long L, FermiMomentum k_f);

// Finite periodic ring with hopping -t Σ (c†_j c_{j+1} + h.c.), dispersion -2t cos k.

/// Momentum indices m (k = 2πm/n, m in [0, n)) occupied in the unique
/// ground state. Throws NumericalError when the highest occupied and the
/// lowest empty single-particle level coincide (degenerate ground state).
std::vector<int> ring_ground_occupation(int n_sites, int n_particles);

/// Occupation-convention correlations C_{ab} = ⟨c†_a c_b⟩ restricted to `sites`.
numerics::SymMatrix ring_correlation_matrix(int n_sites, int n_particles,
                                            std::span<const int> sites);

/// Correlation-matrix entropy of a site subset of the ring ground state,
/// eigenvalues mapped ν = 2c - 1 before the e(1, ν) sum.
double ring_block_entropy(int n_sites, int n_particles, std::span<const int> sites);

}  // namespace entangle::fermion1d
