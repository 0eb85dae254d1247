#include "entangle/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "entangle/error.hpp"
#include "entangle/numerics.hpp"

namespace entangle::oracle {

using numerics::kPi;

namespace {

constexpr double kStateTol = 1e-12;

std::vector<int> modes_of(std::uint32_t bits, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (bits >> j & 1u) out.push_back(j);
  return out;
}

std::size_t pack(std::uint32_t b, const std::vector<int>& modes) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < modes.size(); ++k)
    if (b >> modes[k] & 1u) idx |= std::size_t{1} << k;
  return idx;
}

// Parity of moving every occupied subsystem mode ahead of every occupied
// environment mode with a smaller index.
int reorder_sign(std::uint32_t b, std::uint32_t sub_bits) {
  int swaps = 0;
  std::uint32_t env_below = 0;
  for (int j = 0; j < 32; ++j) {
    const std::uint32_t bit = 1u << j;
    if (!(b & bit)) continue;
    if (sub_bits & bit)
      swaps += std::popcount(env_below);
    else
      env_below |= bit;
  }
  return swaps % 2 ? -1 : 1;
}

// Accumulates w · tr_env|ψ⟩⟨ψ| into rho (dim_s × dim_s, row-major).
void accumulate_trace(const FockState& psi, double w, std::uint32_t sub_bits, Statistics stats,
                      std::vector<Complex>& rho) {
  const int n = psi.n_modes();
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1u;
  const auto sub = modes_of(sub_bits, n);
  const auto env = modes_of(all & ~sub_bits, n);
  const std::size_t ds = std::size_t{1} << sub.size();
  const std::size_t de = std::size_t{1} << env.size();

  std::vector<Complex> m(de * ds, Complex{});
  const auto amps = psi.amplitudes();
  for (std::uint32_t b = 0; b < amps.size(); ++b) {
    if (amps[b] == Complex{}) continue;
    const double sgn = stats == Statistics::kFermion ? reorder_sign(b, sub_bits) : 1.0;
    m[pack(b, env) * ds + pack(b, sub)] = sgn * amps[b];
  }
  for (std::size_t e = 0; e < de; ++e)
    for (std::size_t s1 = 0; s1 < ds; ++s1) {
      const Complex a = m[e * ds + s1];
      if (a == Complex{}) continue;
      for (std::size_t s2 = 0; s2 < ds; ++s2) rho[s1 * ds + s2] += w * a * std::conj(m[e * ds + s2]);
    }
}

void check_bits(std::uint32_t bits, int n) {
  if (n < 32 && (bits >> n) != 0) throw DomainError("subsystem bitmask exceeds the mode count");
}

Complex complex_det(std::vector<Complex> a, int n) {
  Complex det{1.0, 0.0};
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    if (a[piv * n + k] == Complex{}) return {};
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const Complex f = a[i * n + k] / a[k * n + k];
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

// c†_to c_from applied to basis string b; returns false when it annihilates.
bool hop(std::uint32_t b, int to, int from, std::uint32_t& out, int& sign) {
  if (!(b >> from & 1u)) return false;
  std::uint32_t mid = b & ~(1u << from);
  int s = std::popcount(b & ((1u << from) - 1u));
  if (mid >> to & 1u) return false;
  s += std::popcount(mid & ((1u << to) - 1u));
  out = mid | (1u << to);
  sign = s % 2 ? -1 : 1;
  return true;
}

double entropy_of(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s -= v * std::log(v);
  return s;
}

// Entropy of tr_env Σ w_k|ψ_k⟩⟨ψ_k| for real spin states. With M the
// d_sub × (K·d_env) matrix of √w_k ψ_k, ρ = M Mᵀ shares its nonzero spectrum
// with Mᵀ M; the smaller one is diagonalized.
double real_mixture_entropy(const std::vector<FockState>& states, const std::vector<double>& w,
                            std::uint32_t sub_bits) {
  const int n = states.front().n_modes();
  const std::uint32_t all = (1u << n) - 1u;
  const auto sub = modes_of(sub_bits, n);
  const auto env = modes_of(all & ~sub_bits, n);
  const std::size_t ds = std::size_t{1} << sub.size();
  const std::size_t de = std::size_t{1} << env.size();
  const std::size_t cols = states.size() * de;
  numerics::Matrix m(ds, cols, 0.0);
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto amps = states[k].amplitudes();
    for (std::uint32_t b = 0; b < amps.size(); ++b) {
      if (amps[b].imag() != 0.0) throw DomainError("mixture entropy helper needs real amplitudes");
      m(pack(b, sub), k * de + pack(b, env)) = std::sqrt(w[k]) * amps[b].real();
    }
  }
  const bool rows_small = ds <= cols;
  const std::size_t g = rows_small ? ds : cols;
  numerics::SymMatrix gram(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      double acc = 0.0;
      if (rows_small)
        for (std::size_t c = 0; c < cols; ++c) acc += m(i, c) * m(j, c);
      else
        for (std::size_t r = 0; r < ds; ++r) acc += m(r, i) * m(r, j);
      gram.set(i, j, acc);
    }
  auto p = numerics::symmetric_eigenvalues(gram).values;
  double tr = 0.0;
  for (double v : p) tr += v;
  if (std::abs(tr - 1.0) > kStateTol) throw NumericalError("mixture is not normalized");
  if (!p.empty() && p.front() < -1e-10)
    throw NumericalError("mixture has a negative eigenvalue " + std::to_string(p.front()));
  return std::max(entropy_of(p), 0.0);
}

}  // namespace

FockState::FockState(int n_modes, std::vector<Complex> amplitudes)
    : n_(n_modes), amps_(std::move(amplitudes)) {
  if (n_modes < 0) throw DomainError("mode count must be >= 0");
  if (n_modes > kMaxModes)
    throw ResourceError("oracle state with " + std::to_string(n_modes) + " modes exceeds the " +
                        std::to_string(kMaxModes) + "-mode cap");
  if (amps_.size() != (std::size_t{1} << n_modes))
    throw DomainError("amplitude count must equal 2^n_modes");
  double norm = 0.0;
  for (const auto& a : amps_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kStateTol) throw DomainError("state is not normalized");
}

DensityMatrix::DensityMatrix(int dim, std::vector<Complex> entries) : dim_(dim), e_(std::move(entries)) {
  if (dim < 1 || e_.size() != static_cast<std::size_t>(dim) * dim)
    throw DomainError("density matrix must be dim x dim");
  Complex tr{};
  for (int i = 0; i < dim; ++i) {
    tr += (*this)(i, i);
    for (int j = i; j < dim; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > kStateTol)
        throw NumericalError("density matrix is not Hermitian");
  }
  if (std::abs(tr - 1.0) > kStateTol) throw NumericalError("density matrix trace differs from 1");
}

DensityMatrix partial_trace(const FockState& psi, std::uint32_t subsystem_bits, Statistics stats) {
  const double w = 1.0;
  return partial_trace(std::span<const FockState>(&psi, 1), std::span<const double>(&w, 1),
                       subsystem_bits, stats);
}

DensityMatrix partial_trace(std::span<const FockState> states, std::span<const double> weights,
                            std::uint32_t subsystem_bits, Statistics stats) {
  if (states.empty() || states.size() != weights.size())
    throw DomainError("mixture needs one weight per state");
  const int n = states.front().n_modes();
  check_bits(subsystem_bits, n);
  const int ds = 1 << std::popcount(subsystem_bits);
  std::vector<Complex> rho(static_cast<std::size_t>(ds) * ds, Complex{});
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].n_modes() != n) throw DomainError("mixture states differ in mode count");
    accumulate_trace(states[k], weights[k], subsystem_bits, stats, rho);
  }
  return DensityMatrix(ds, std::move(rho));
}

std::vector<double> density_spectrum(const DensityMatrix& rho) {
  const int n = rho.dim();
  bool real = true;
  for (int i = 0; i < n && real; ++i)
    for (int j = 0; j < n; ++j)
      if (rho(i, j).imag() != 0.0) {
        real = false;
        break;
      }
  std::vector<double> p;
  if (real) {
    numerics::SymMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, 0.5 * (rho(i, j).real() + rho(j, i).real()));
    p = numerics::symmetric_eigenvalues(m).values;
  } else {
    // [[A, -B], [B, A]] has the spectrum of A + iB with every value doubled.
    numerics::SymMatrix m(2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const Complex v = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
        m.set(i, j, v.real());
        m.set(n + i, n + j, v.real());
        m.set(n + i, j, v.imag());
        m.set(n + j, i, -v.imag());
      }
    const auto all = numerics::symmetric_eigenvalues(m).values;
    for (int k = 0; k < n; ++k) p.push_back(0.5 * (all[2 * k] + all[2 * k + 1]));
  }
  return p;
}

double vn_entropy(const DensityMatrix& rho) {
  const auto p = density_spectrum(rho);
  if (!p.empty() && p.front() < -1e-10)
    throw NumericalError("density matrix has a negative eigenvalue " + std::to_string(p.front()));
  return std::max(entropy_of(p), 0.0);
}

FockState fermion_ring_ground_state(int n_sites, int n_particles) {
  if (n_sites < 1) throw DomainError("ring needs at least one site");
  if (n_sites > 12) throw ResourceError("oracle ring is capped at 12 sites");
  if (n_particles < 0 || n_particles > n_sites)
    throw DomainError("particle number must lie in [0, n_sites]");

  std::vector<int> ms(n_sites);
  for (int m = 0; m < n_sites; ++m) ms[m] = m;
  auto eps = [n_sites](int m) { return -2.0 * std::cos(2.0 * kPi * m / n_sites); };
  std::stable_sort(ms.begin(), ms.end(), [&](int a, int b) { return eps(a) < eps(b); });
  if (n_particles > 0 && n_particles < n_sites &&
      eps(ms[n_particles]) - eps(ms[n_particles - 1]) < 1e-12)
    throw NumericalError("degenerate ring ground state: " + std::to_string(n_sites) + " sites, " +
                         std::to_string(n_particles) + " particles");
  ms.resize(n_particles);
  double energy = 0.0;
  for (int m : ms) energy += eps(m);

  const std::uint32_t dim = 1u << n_sites;
  std::vector<Complex> amps(dim, Complex{});
  const double norm = 1.0 / std::sqrt(static_cast<double>(n_sites));
  for (std::uint32_t b = 0; b < dim; ++b) {
    if (std::popcount(b) != n_particles) continue;
    const auto sites = modes_of(b, n_sites);
    std::vector<Complex> mat(static_cast<std::size_t>(n_particles) * n_particles);
    for (int a = 0; a < n_particles; ++a)
      for (int c = 0; c < n_particles; ++c)
        mat[a * n_particles + c] = norm * std::polar(1.0, 2.0 * kPi * ms[a] * sites[c] / n_sites);
    amps[b] = n_particles == 0 ? Complex{1.0} : complex_det(std::move(mat), n_particles);
  }

  // Residual of H|ψ⟩ = E|ψ⟩ for the many-body hopping Hamiltonian.
  std::vector<Complex> hpsi(dim, Complex{});
  for (std::uint32_t b = 0; b < dim; ++b) {
    if (amps[b] == Complex{}) continue;
    for (int j = 0; j < n_sites && n_sites > 1; ++j) {
      const int k = (j + 1) % n_sites;
      if (n_sites == 2 && j == 1) break;
      std::uint32_t out;
      int sign;
      if (hop(b, j, k, out, sign)) hpsi[out] -= static_cast<double>(sign) * amps[b];
      if (hop(b, k, j, out, sign)) hpsi[out] -= static_cast<double>(sign) * amps[b];
    }
  }
  double resid = 0.0;
  for (std::uint32_t b = 0; b < dim; ++b) resid += std::norm(hpsi[b] - energy * amps[b]);
  if (std::sqrt(resid) > 1e-10)
    throw NumericalError("Slater determinant is not an eigenstate of the ring Hamiltonian");
  return FockState(n_sites, std::move(amps));
}

double exact_fermion_ring_entropy(int n_sites, int n_particles, std::uint32_t subsystem_bits) {
  const auto psi = fermion_ring_ground_state(n_sites, n_particles);
  return vn_entropy(partial_trace(psi, subsystem_bits, Statistics::kFermion));
}

FockState afm_ground_state(int n) {
  if (n < 1) throw DomainError("AFM sublattice size must be >= 1");
  if (n > 4) throw ResourceError("AFM oracle is capped at n = 4 (256 states)");
  const int modes = 2 * n;
  const std::uint32_t dim = 1u << modes;

  // Coupling of S_i·S_j in H: -1 within a sublattice, +1 across.
  auto coupling = [n](int i, int j) { return (i < n) == (j < n) ? -1.0 : 1.0; };
  numerics::Matrix h(dim);
  for (std::uint32_t b = 0; b < dim; ++b)
    for (int i = 0; i < modes; ++i)
      for (int j = 0; j < modes; ++j) {
        const double c = coupling(i, j);
        if (i == j) {
          h(b, b) += c * 0.75;
          continue;
        }
        const bool ui = b >> i & 1u, uj = b >> j & 1u;
        h(b, b) += c * (ui == uj ? 0.25 : -0.25);
        if (ui != uj) h(b ^ (1u << i) ^ (1u << j), b) += c * 0.5;
      }
  const auto full = numerics::symmetric_eigenvalues(numerics::SymMatrix::from_dense(h));
  if (full.values[1] - full.values[0] < 1e-8)
    throw NumericalError("AFM ground state is degenerate");

  // H conserves S_z and every multiplet has an M = 0 member: take the vector there.
  std::vector<std::uint32_t> sector;
  for (std::uint32_t b = 0; b < dim; ++b)
    if (std::popcount(b) == n) sector.push_back(b);
  numerics::SymMatrix hs(sector.size());
  for (std::size_t i = 0; i < sector.size(); ++i)
    for (std::size_t j = i; j < sector.size(); ++j) hs.set(i, j, h(sector[i], sector[j]));
  const auto eig = numerics::jacobi_eigen(hs, true);
  if (std::abs(eig.values[0] - full.values[0]) > 1e-9)
    throw NumericalError("AFM ground state is not in the M = 0 sector");
  std::vector<Complex> amps(dim, Complex{});
  for (std::size_t i = 0; i < sector.size(); ++i) amps[sector[i]] = (*eig.vectors)(i, 0);
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(norm);
  return FockState(modes, std::move(amps));
}

double exact_afm_entropy(int n, int n1) {
  if (n1 < 0 || n1 > n) throw DomainError("AFM subsystem size must lie in [0, n]");
  const auto psi = afm_ground_state(n);
  std::uint32_t bits = 0;
  for (int j = 0; j < n1; ++j) bits |= (1u << j) | (1u << (n + j));
  return vn_entropy(partial_trace(psi, bits));
}

FockState dicke_state(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("Dicke state needs 0 <= k <= n");
  if (n > kMaxModes) throw ResourceError("Dicke state exceeds the oracle mode cap");
  const std::uint32_t dim = 1u << n;
  const double amp = std::exp(-0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                      std::lgamma(n - k + 1.0)));
  std::vector<Complex> amps(dim, Complex{});
  for (std::uint32_t b = 0; b < dim; ++b)
    if (std::popcount(b) == k) amps[b] = amp;
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  for (auto& a : amps) a /= std::sqrt(norm);
  return FockState(n, std::move(amps));
}

double exact_fm_entropy(int total, int sub1) {
  if (total < 1 || sub1 < 0 || sub1 > total)
    throw DomainError("FM partition must satisfy 0 <= sub1 <= total");
  if (total > 10) throw ResourceError("FM oracle is capped at 10 spins");
  std::vector<FockState> states;
  for (int k = 0; k <= total; ++k) states.push_back(dicke_state(total, k));
  const std::vector<double> w(states.size(), 1.0 / static_cast<double>(states.size()));

  const std::uint32_t all = (1u << total) - 1u;
  const std::uint32_t bits1 = (1u << sub1) - 1u;
  const double e1 = real_mixture_entropy(states, w, bits1);
  const double e2 = real_mixture_entropy(states, w, all & ~bits1);

  // Nonzero spectrum of Σ w_k|ψ_k⟩⟨ψ_k| equals that of the weighted Gram matrix.
  const std::size_t m = states.size();
  numerics::SymMatrix gram(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      Complex ov{};
      const auto pa = states[a].amplitudes(), pb = states[b].amplitudes();
      for (std::size_t i = 0; i < pa.size(); ++i) ov += std::conj(pa[i]) * pb[i];
      gram.set(a, b, std::sqrt(w[a] * w[b]) * ov.real());
    }
  const double e0 = entropy_of(numerics::symmetric_eigenvalues(gram).values);
  return 0.5 * (e1 + e2 - e0);
}

}  // namespace entangle::oracle
