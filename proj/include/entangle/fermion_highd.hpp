#pragma once

#include <span>
#include <vector>

#include "entangle/numerics.hpp"

// Free fermions on the hypercubic lattice Z^d with a filled Fermi sea Γ.
// Block entropies from the occupation correlation matrix C, plus the
// Widom/Gioev–Klich coefficient of the L^{d-1} ln L law.
namespace entangle::highd {

enum class SeaKind { kCubic, kSpherical };

/// Fermi sea: cube [-k_f, k_f]^d or ball of radius k_f, 0 < k_f < π.
/// Spherical seas are supported for d = 2 only.
class FermiSeaRegion {
 public:
  FermiSeaRegion(int d, SeaKind kind, double k_f);
  int dim() const noexcept { return d_; }
  SeaKind kind() const noexcept { return kind_; }
  double k_f() const noexcept { return k_f_; }

 private:
  int d_;
  SeaKind kind_;
  double k_f_;
};

/// Cubic block of side^d sites.
struct BlockSpec {
  int d;
  long side;
};

struct ScanRow {
  long L;
  double entropy;
  double per_area;  // S / L^{d-1}
};

inline constexpr long kMaxBlockSites = 4096;

/// C(r) = (2π)^{-d} ∫_Γ e^{ik·r} d^dk.
double fermi_correlation(const FermiSeaRegion& region, std::span<const long> r);

/// Dense C over the block sites, lexicographic site order.
numerics::SymMatrix block_correlation_matrix(const FermiSeaRegion& region, const BlockSpec& block);

/// h(x) = -((1+x)/2)ln((1+x)/2) - ((1-x)/2)ln((1-x)/2).
double h(double x);

/// Σ_j h(2c_j - 1) over the eigenvalues c_j ∈ [0, 1] of C.
double block_entropy(const FermiSeaRegion& region, const BlockSpec& block);

/// (1/12)(2π)^{1-d} ∫_{∂Ω}∫_{∂Γ} |n_x·n_p| dS_x dS_p with Ω the unit cube,
/// by product quadrature over both surfaces.
double widom_coefficient(const FermiSeaRegion& region);

/// Closed form of the same coefficient: 2k_f/(3π) for the disk,
/// d·(k_f/π)^{d-1}/3 for the cube.
double widom_coefficient_analytic(const FermiSeaRegion& region);

std::vector<ScanRow> area_law_scan(const FermiSeaRegion& region, std::span<const long> L_values);

}  // namespace entangle::highd
