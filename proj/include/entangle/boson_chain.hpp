#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entangle/numerics.hpp"

// Gaussian ground states of the harmonic chain
//   H = ½ Σ p_i² + ½ Σ_{ij} x_i K_{ij} x_j,  K = m²·I + (discrete Laplacian),
// and the entanglement entropy of a block from the symplectic spectrum of
// its truncated position/momentum correlators. Pure modes have ν = ½.
namespace entangle::boson {

class HarmonicChainSpec {
 public:
  static HarmonicChainSpec infinite(double mass);
  static HarmonicChainSpec ring(double mass, int n_total);

  double mass() const noexcept { return mass_; }
  bool is_ring() const noexcept { return ring_size_.has_value(); }
  int ring_size() const { return ring_size_.value(); }

 private:
  HarmonicChainSpec(double mass, std::optional<int> ring_size);
  double mass_;
  std::optional<int> ring_size_;
};

struct GaussianBosonState {
  numerics::SymMatrix x_corr;  // ⟨x_n x_m⟩
  numerics::SymMatrix p_corr;  // ⟨p_n p_m⟩
};

struct SymplecticSpectrum {
  std::vector<double> nus;
};

struct ScanRow {
  long L;
  double entropy;
};

/// ω(k) = √(m² + 4 sin²(k/2)).
double dispersion(double k, double mass);

/// Correlators of L consecutive sites. Infinite chain: composite
/// Gauss–Legendre quadrature, refined until entries are stable to 1e-12.
/// Ring: exact normal-mode sums.
GaussianBosonState ground_state_correlations(const HarmonicChainSpec& spec, long L);

/// Ground state of ½p² + ½xᵀKx for a positive-definite coupling matrix K:
/// X = ½K^{-1/2}, P = ½K^{1/2}.
GaussianBosonState state_from_coupling(const numerics::SymMatrix& k);

/// Sub-block on the given site indices.
GaussianBosonState restrict_state(const GaussianBosonState& s, std::span<const int> sites);

/// ν_i = √eig(X'P'), computed from the similar symmetric matrix X^{1/2} P X^{1/2}.
SymplecticSpectrum symplectic_spectrum(const GaussianBosonState& state);

/// (ν+½)ln(ν+½) - (ν-½)ln(ν-½); 0 at ν = ½.
double mode_entropy(double nu);
double boson_entropy(const SymplecticSpectrum& s);

double block_entropy(const HarmonicChainSpec& spec, long L);
std::vector<ScanRow> boson_entropy_scan(const HarmonicChainSpec& spec,
                                        std::span<const long> L_values);

}  // namespace entangle::boson
