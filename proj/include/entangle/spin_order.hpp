#pragma once

#include <vector>

// Long-range-ordered spin models.
//
// AFM: two interpenetrating sublattices A and B of N spins-½ each, ground
// state |N/2, N/2; 0 0⟩. The subsystem holds `n1` spins of A *and* `n1`
// spins of B, so its size in sites is 2·n1.
//
// FM: N spins-½ with the (N+1)-fold degenerate fully polarized ground
// multiplet; entropy is half the mutual information (E₁ + E₂ - E₀)/2.
namespace entangle::spin {

struct AfmSpectrum {
  struct Entry {
    long s1;
    double lambda_sq;  // weight of each of the 2·s1+1 states in sector s1
  };
  std::vector<Entry> entries;
};

/// Reduced-density-matrix weight λ² of sector S₁ (independent of m₁),
/// evaluated with log-gamma differences. Zero when s1 > min(n1, n - n1).
double afm_lambda_sq(long n, long n1, long s1);

AfmSpectrum afm_spectrum(long n, long n1);

/// -Σ (2S₁+1) λ² ln λ².
double afm_entropy(long n, long n1);

/// ln(n1 - n1²/n + ½√(π(n - n1)n1/n)), valid for 1 ≤ n1 ≤ n-1.
double afm_entropy_asymptotic(long n, long n1);

/// [ln(N₁+1) + ln(N - N₁ + 1) - ln(N+1)] / 2.
double fm_entropy(long total, long sub1);

}  // namespace entangle::spin
