#include "entangle/fermion_highd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entangle/error.hpp"

namespace entangle::highd {

using numerics::kPi;

namespace {

double sinc_kernel(double k_f, long r) {
  if (r == 0) return k_f / kPi;
  const double dr = static_cast<double>(r);
  return std::sin(k_f * dr) / (kPi * dr);
}

long block_sites(const BlockSpec& b) {
  long n = 1;
  for (int a = 0; a < b.d; ++a) {
    n *= b.side;
    if (n > kMaxBlockSites)
      throw ResourceError("block of side " + std::to_string(b.side) + " in d = " +
                          std::to_string(b.d) + " exceeds the " +
                          std::to_string(kMaxBlockSites) + "-site cap");
  }
  return n;
}

struct SurfacePoint {
  std::vector<double> normal;
  double weight;
};

// Unit-cube surface: one point per face; normals are constant on each face.
std::vector<SurfacePoint> cube_faces(int d, double half_width) {
  std::vector<SurfacePoint> pts;
  const double area = std::pow(2.0 * half_width, d - 1);
  for (int a = 0; a < d; ++a)
    for (double sgn : {-1.0, 1.0}) {
      std::vector<double> n(d, 0.0);
      n[a] = sgn;
      pts.push_back({std::move(n), area});
    }
  return pts;
}

// Circle of radius k: Gauss–Legendre on quarter arcs, whose endpoints are
// exactly the kinks of |n·e_a|.
std::vector<SurfacePoint> circle(double radius) {
  const auto rule = numerics::gauss_legendre(32);
  std::vector<SurfacePoint> pts;
  for (int q = 0; q < 4; ++q) {
    const double a = q * 0.5 * kPi, b = a + 0.5 * kPi;
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double th = mid + half * rule.nodes[i];
      pts.push_back({{std::cos(th), std::sin(th)}, radius * half * rule.weights[i]});
    }
  }
  return pts;
}

}  // namespace

FermiSeaRegion::FermiSeaRegion(int d, SeaKind kind, double k_f) : d_(d), kind_(kind), k_f_(k_f) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(k_f > 0.0 && k_f < kPi)) throw DomainError("Fermi sea size must satisfy 0 < k_f < pi");
  if (kind == SeaKind::kSpherical && d != 2)
    throw CapabilityError("spherical Fermi seas are supported only for d = 2");
}

double fermi_correlation(const FermiSeaRegion& region, std::span<const long> r) {
  if (static_cast<int>(r.size()) != region.dim())
    throw DomainError("separation vector has the wrong dimension");
  if (region.kind() == SeaKind::kCubic) {
    double c = 1.0;
    for (long ra : r) c *= sinc_kernel(region.k_f(), ra);
    return c;
  }
  const double kf = region.k_f();
  const double rho = std::hypot(static_cast<double>(r[0]), static_cast<double>(r[1]));
  if (rho == 0.0) return kf * kf / (4.0 * kPi);
  return kf * std::cyl_bessel_j(1.0, kf * rho) / (2.0 * kPi * rho);
}

numerics::SymMatrix block_correlation_matrix(const FermiSeaRegion& region, const BlockSpec& block) {
  if (block.d != region.dim()) throw DomainError("block and Fermi sea dimensions differ");
  if (block.side < 1) throw DomainError("block side must be >= 1");
  const long n = block_sites(block);
  const int d = block.d;

  std::vector<std::vector<long>> coords(n, std::vector<long>(d));
  for (long i = 0; i < n; ++i) {
    long rem = i;
    for (int a = d - 1; a >= 0; --a) {
      coords[i][a] = rem % block.side;
      rem /= block.side;
    }
  }
  numerics::SymMatrix c(static_cast<std::size_t>(n));
  std::vector<long> r(d);
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j) {
      for (int a = 0; a < d; ++a) r[a] = coords[i][a] - coords[j][a];
      c.set(i, j, fermi_correlation(region, r));
    }
  return c;
}

double h(double x) {
  if (std::abs(x) > 1.0 + 1e-9)
    throw NumericalError("correlation eigenvalue " + std::to_string(x) + " outside [-1, 1]");
  if (1.0 - std::abs(x) <= 1e-9) return 0.0;
  const double p = 0.5 * (1.0 + x), q = 0.5 * (1.0 - x);
  return -p * std::log(p) - q * std::log(q);
}

double block_entropy(const FermiSeaRegion& region, const BlockSpec& block) {
  const auto eig = numerics::symmetric_eigenvalues(block_correlation_matrix(region, block));
  double s = 0.0;
  for (double c : eig.values) s += h(2.0 * c - 1.0);
  return s;
}

double widom_coefficient(const FermiSeaRegion& region) {
  const int d = region.dim();
  const auto omega = cube_faces(d, 0.5);
  const auto gamma = region.kind() == SeaKind::kSpherical ? circle(region.k_f())
                                                          : cube_faces(d, region.k_f());
  double integral = 0.0;
  for (const auto& x : omega)
    for (const auto& p : gamma) {
      double dot = 0.0;
      for (int a = 0; a < d; ++a) dot += x.normal[a] * p.normal[a];
      integral += std::abs(dot) * x.weight * p.weight;
    }
  return integral / (12.0 * std::pow(2.0 * kPi, d - 1));
}

double widom_coefficient_analytic(const FermiSeaRegion& region) {
  const int d = region.dim();
  if (region.kind() == SeaKind::kSpherical) return 2.0 * region.k_f() / (3.0 * kPi);
  return d * std::pow(region.k_f() / kPi, d - 1) / 3.0;
}

std::vector<ScanRow> area_law_scan(const FermiSeaRegion& region, std::span<const long> L_values) {
  if (L_values.empty()) throw DomainError("scan needs at least one L");
  if (!std::is_sorted(L_values.begin(), L_values.end()))
    throw DomainError("scan L values must be ascending");
  std::vector<ScanRow> rows;
  for (long L : L_values) {
    const double s = block_entropy(region, {region.dim(), L});
    rows.push_back({L, s, s / std::pow(static_cast<double>(L), region.dim() - 1)});
  }
  return rows;
}

}  // namespace entangle::highd
