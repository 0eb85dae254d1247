#pragma once

#include <complex>
#include <span>
#include <vector>

#include "entangle/fermion1d.hpp"

// Toeplitz determinant D_L(λ) = det(λI - G_L): exact LU evaluation and the
// Fisher–Hartwig asymptotic form for the two-jump sine-kernel symbol.
// Real λ with |λ| > 1 only; there β(λ) is purely imaginary and β² ≤ 0.
namespace entangle::fisher_hartwig {

struct FHPoint {
  double lambda;
  double k_f;
  std::complex<double> beta;
  double beta_sq;
};

/// β(λ) = (1/2πi) ln((λ+1)/(λ-1)), branch -π ≤ arg < π.
/// DomainError for λ on the cut [-1, 1].
std::complex<double> beta_of_lambda(double lambda);

FHPoint make_point(double lambda, fermion1d::FermiMomentum k_f);

/// Per-site rate ln[(λ+1)((λ+1)/(λ-1))^{-k_f/π}]; uses |λ+1| for λ < -1.
double linear_rate(double lambda, fermion1d::FermiMomentum k_f);

/// Asymptotic ln|D_L(λ)|:
///   L·rate - 2β² ln L + 2 ln[G(1+β)G(1-β)] - β² ln(2 - 2cos 2k_f).
double fh_log_det(long L, fermion1d::FermiMomentum k_f, double lambda);

/// ln|det(λI - G_L)| by partial-pivot LU.
double exact_log_det(long L, fermion1d::FermiMomentum k_f, double lambda);

struct ErrorRow {
  long L;
  double exact;
  double asymptotic;
  double abs_err;
};

std::vector<ErrorRow> fh_error_scan(std::span<const long> L_values,
                                    fermion1d::FermiMomentum k_f, double lambda);

}  // namespace entangle::fisher_hartwig
