#include "entangle/boson_chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entangle/error.hpp"

namespace entangle::boson {

using numerics::kPi;
using numerics::SymMatrix;

namespace {

constexpr double kNuTol = 1e-9;

// Panel breakpoints on [0, π]: geometric grading near k = 0 where 1/ω peaks
// on the scale of the mass, uniform panels of width ≤ 0.05 beyond.
std::vector<double> panel_edges(double mass) {
  constexpr double kWidth = 0.05;
  std::vector<double> edges{0.0};
  double x = std::min(mass, kWidth);
  while (x < kWidth) {
    edges.push_back(x);
    x *= 2.0;
  }
  edges.push_back(kWidth);
  const int n_uniform = static_cast<int>(std::ceil((kPi - kWidth) / kWidth));
  for (int i = 1; i <= n_uniform; ++i) edges.push_back(kWidth + (kPi - kWidth) * i / n_uniform);
  return edges;
}

// Returns {X_r, P_r} for r = 0..L-1 on the infinite chain at panel order p.
std::pair<std::vector<double>, std::vector<double>> chain_integrals(
    double mass, long L, const std::vector<double>& edges, int order) {
  const auto rule = numerics::gauss_legendre(order);
  std::vector<double> x(L, 0.0), p(L, 0.0);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double k = mid + half * rule.nodes[i];
      const double w = half * rule.weights[i];
      const double om = dispersion(k, mass);
      for (long r = 0; r < L; ++r) {
        const double c = std::cos(k * static_cast<double>(r));
        x[r] += w * c / (2.0 * om);
        p[r] += w * c * om / 2.0;
      }
    }
  }
  for (long r = 0; r < L; ++r) {
    x[r] /= kPi;
    p[r] /= kPi;
  }
  return {std::move(x), std::move(p)};
}

GaussianBosonState toeplitz_state(const std::vector<double>& x, const std::vector<double>& p) {
  const std::size_t L = x.size();
  GaussianBosonState s{SymMatrix(L), SymMatrix(L)};
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i; j < L; ++j) {
      s.x_corr.set(i, j, x[j - i]);
      s.p_corr.set(i, j, p[j - i]);
    }
  return s;
}

GaussianBosonState infinite_chain_state(double mass, long L) {
  const auto edges = panel_edges(mass);
  auto prev = chain_integrals(mass, L, edges, 8);
  for (int order = 16; order <= 512; order *= 2) {
    auto next = chain_integrals(mass, L, edges, order);
    double diff = 0.0;
    for (long r = 0; r < L; ++r)
      diff = std::max({diff, std::abs(next.first[r] - prev.first[r]),
                       std::abs(next.second[r] - prev.second[r])});
    if (diff <= 1e-12) return toeplitz_state(next.first, next.second);
    prev = std::move(next);
  }
  throw NumericalError("harmonic chain quadrature did not stabilize to 1e-12");
}

GaussianBosonState ring_state(double mass, int n_total, long L) {
  std::vector<double> x(L, 0.0), p(L, 0.0);
  for (int q = 0; q < n_total; ++q) {
    const double k = 2.0 * kPi * q / n_total;
    const double om = dispersion(k, mass);
    for (long r = 0; r < L; ++r) {
      const double c = std::cos(k * static_cast<double>(r));
      x[r] += c / (2.0 * om);
      p[r] += c * om / 2.0;
    }
  }
  for (long r = 0; r < L; ++r) {
    x[r] /= n_total;
    p[r] /= n_total;
  }
  return toeplitz_state(x, p);
}

}  // namespace

HarmonicChainSpec::HarmonicChainSpec(double mass, std::optional<int> ring_size)
    : mass_(mass), ring_size_(ring_size) {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw DomainError("harmonic chain needs mass > 0 (massless point has a zero mode)");
  if (ring_size && *ring_size < 2) throw DomainError("ring needs at least 2 sites");
}

HarmonicChainSpec HarmonicChainSpec::infinite(double mass) { return {mass, std::nullopt}; }
HarmonicChainSpec HarmonicChainSpec::ring(double mass, int n_total) { return {mass, n_total}; }

double dispersion(double k, double mass) {
  const double s = std::sin(0.5 * k);
  return std::sqrt(mass * mass + 4.0 * s * s);
}

GaussianBosonState ground_state_correlations(const HarmonicChainSpec& spec, long L) {
  if (L < 1) throw DomainError("block length must be >= 1");
  if (spec.is_ring()) {
    if (L > spec.ring_size()) throw DomainError("block longer than the ring");
    return ring_state(spec.mass(), spec.ring_size(), L);
  }
  return infinite_chain_state(spec.mass(), L);
}

GaussianBosonState state_from_coupling(const SymMatrix& k) {
  const auto eig = numerics::jacobi_eigen(k, false);
  if (eig.values.empty() || eig.values.front() <= 0.0)
    throw DomainError("coupling matrix must be positive definite");
  return {numerics::spectral_function(k, [](double w2) { return 0.5 / std::sqrt(w2); }),
          numerics::spectral_function(k, [](double w2) { return 0.5 * std::sqrt(w2); })};
}

GaussianBosonState restrict_state(const GaussianBosonState& s, std::span<const int> sites) {
  const auto n = static_cast<int>(s.x_corr.size());
  GaussianBosonState out{SymMatrix(sites.size()), SymMatrix(sites.size())};
  for (std::size_t a = 0; a < sites.size(); ++a) {
    if (sites[a] < 0 || sites[a] >= n) throw DomainError("site index outside the state");
    for (std::size_t b = a; b < sites.size(); ++b) {
      out.x_corr.set(a, b, s.x_corr(sites[a], sites[b]));
      out.p_corr.set(a, b, s.p_corr(sites[a], sites[b]));
    }
  }
  return out;
}

SymplecticSpectrum symplectic_spectrum(const GaussianBosonState& state) {
  const std::size_t n = state.x_corr.size();
  if (state.p_corr.size() != n) throw DomainError("X and P blocks differ in size");
  if (n == 0) return {};
  const auto xe = numerics::jacobi_eigen(state.x_corr, false);
  const auto pe = numerics::jacobi_eigen(state.p_corr, false);
  if (xe.values.front() <= 0.0 || pe.values.front() <= 0.0)
    throw DomainError("correlation matrices must be positive definite");

  const SymMatrix xh = numerics::spectral_function(state.x_corr, [](double v) { return std::sqrt(v); });
  const numerics::Matrix m =
      numerics::multiply(numerics::multiply(xh.dense(), state.p_corr.dense()), xh.dense());
  const auto eig = numerics::jacobi_eigen(SymMatrix::from_dense(m), false);

  SymplecticSpectrum out;
  out.nus.reserve(n);
  for (double mu : eig.values) {
    const double nu = std::sqrt(std::max(mu, 0.0));
    if (nu < 0.5 - kNuTol)
      throw NumericalError("symplectic eigenvalue " + std::to_string(nu) + " below 1/2");
    out.nus.push_back(std::max(nu, 0.5));
  }
  return out;
}

double mode_entropy(double nu) {
  if (nu < 0.5 - kNuTol)
    throw NumericalError("symplectic eigenvalue " + std::to_string(nu) + " below 1/2");
  const double lo = nu - 0.5;
  if (lo <= 0.0) return 0.0;
  const double hi = nu + 0.5;
  return hi * std::log(hi) - lo * std::log(lo);
}

double boson_entropy(const SymplecticSpectrum& s) {
  double e = 0.0;
  for (double nu : s.nus) e += mode_entropy(nu);
  return e;
}

double block_entropy(const HarmonicChainSpec& spec, long L) {
  return boson_entropy(symplectic_spectrum(ground_state_correlations(spec, L)));
}

std::vector<ScanRow> boson_entropy_scan(const HarmonicChainSpec& spec,
                                        std::span<const long> L_values) {
  if (L_values.empty()) throw DomainError("scan needs at least one L");
  if (!std::is_sorted(L_values.begin(), L_values.end()))
    throw DomainError("scan L values must be ascending");
  std::vector<ScanRow> rows;
  rows.reserve(L_values.size());
  for (long L : L_values) rows.push_back({L, block_entropy(spec, L)});
  return rows;
}

}  // namespace entangle::boson
