#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

// Brute-force Hilbert-space reference engines. Exponential in system size
// and capped accordingly; every fast method in the library is checked
// against these at small sizes.
namespace entangle::oracle {

using Complex = std::complex<double>;

inline constexpr int kMaxModes = 14;

/// State on n two-level modes (qubits or fermionic orbitals); amplitude
/// index is the occupation bitmask with mode j at bit j.
class FockState {
 public:
  FockState(int n_modes, std::vector<Complex> amplitudes);
  int n_modes() const noexcept { return n_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }

 private:
  int n_;
  std::vector<Complex> amps_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace to 1e-12 (relative to the dimension).
  DensityMatrix(int dim, std::vector<Complex> entries);
  int dim() const noexcept { return dim_; }
  Complex operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }

 private:
  int dim_;
  std::vector<Complex> e_;
};

enum class Statistics { kSpin, kFermion };

/// ρ_s = Σ_e c_{e,s₁} c*_{e,s₂} over the modes in `subsystem_bits`.
/// For fermions, each basis string is first reordered to put subsystem
/// modes ahead of environment modes, picking up the permutation sign.
/// Subsystem basis index packs the kept modes in ascending mode order.
DensityMatrix partial_trace(const FockState& psi, std::uint32_t subsystem_bits,
                            Statistics stats = Statistics::kSpin);

/// Σ_k w_k tr_env |ψ_k⟩⟨ψ_k|.
DensityMatrix partial_trace(std::span<const FockState> states, std::span<const double> weights,
                            std::uint32_t subsystem_bits, Statistics stats = Statistics::kSpin);

/// Eigenvalues of a density matrix, ascending.
std::vector<double> density_spectrum(const DensityMatrix& rho);

/// -Σ p ln p; throws NumericalError on eigenvalues below -1e-10.
double vn_entropy(const DensityMatrix& rho);

/// Slater-determinant ground state of -Σ (c†_j c_{j+1} + h.c.) on a
/// periodic ring, in the Fock basis. Verified to be an eigenvector of the
/// many-body Hamiltonian; degenerate fillings raise NumericalError.
FockState fermion_ring_ground_state(int n_sites, int n_particles);

double exact_fermion_ring_entropy(int n_sites, int n_particles, std::uint32_t subsystem_bits);

/// Ground state of H = -S_A² - S_B² + S_A·S_B for two sublattices of n
/// spins-½ (A = modes 0..n-1, B = modes n..2n-1), by dense diagonalization.
FockState afm_ground_state(int n);

/// Entropy with subsystem = first n1 spins of A and first n1 spins of B.
double exact_afm_entropy(int n, int n1);

/// (E₁ + E₂ - E₀)/2 for ρ = (N+1)⁻¹ Σ_M |N/2, M⟩⟨N/2, M| on `total`
/// spins, subsystem 1 = first `sub1` spins.
double exact_fm_entropy(int total, int sub1);

/// Symmetric (Dicke) state with k up spins out of n.
FockState dicke_state(int n, int k);

}  // namespace entangle::oracle
