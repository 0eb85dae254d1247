#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "entangle/error.hpp"
#include "entangle/numerics.hpp"
#include "entangle/spin_order.hpp"

using namespace entangle;
using namespace entangle::spin;

namespace {

double log_binom(long n, long k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Singlet of two spin-n/2 sublattices, each Dicke state split over
// (n1 | n - n1) spins; entropy of the (A1, B1) part from the Gram matrix
// of the amplitude tensor in the symmetric-subspace bases.
double dicke_split_entropy(long n, long n1) {
  const long n2 = n - n1;
  const long ds = (n1 + 1) * (n1 + 1), de = (n2 + 1) * (n2 + 1);
  numerics::Matrix m(static_cast<std::size_t>(ds), static_cast<std::size_t>(de), 0.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n + 1));
  for (long j = 0; j <= n1; ++j)          // ups in A1
    for (long jb = 0; jb <= n1; ++jb)     // ups in B1
      for (long p = 0; p <= n2; ++p) {    // ups in A2
        const long k = j + p;             // ups in A; B carries n - k
        const long q = n - k - jb;        // ups in B2
        if (q < 0 || q > n2) continue;
        const double a = std::exp(0.5 * (log_binom(n1, j) + log_binom(n2, p) - log_binom(n, k)));
        const double b = std::exp(0.5 * (log_binom(n1, jb) + log_binom(n2, q) - log_binom(n, n - k)));
        m(j * (n1 + 1) + jb, p * (n2 + 1) + q) = (k % 2 ? -1.0 : 1.0) * norm * a * b;
      }
  numerics::SymMatrix rho(static_cast<std::size_t>(ds));
  for (long r = 0; r < ds; ++r)
    for (long c = r; c < ds; ++c) {
      double s = 0.0;
      for (long e = 0; e < de; ++e) s += m(r, e) * m(c, e);
      rho.set(r, c, s);
    }
  double ent = 0.0;
  for (double w : numerics::symmetric_eigenvalues(rho).values)
    if (w > 1e-300) ent -= w * std::log(w);
  return ent;
}

}  // namespace

TEST_CASE("AFM worked values") {
  CHECK(afm_lambda_sq(2, 1, 0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(afm_lambda_sq(2, 1, 1) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(afm_entropy(2, 1) == doctest::Approx(0.836988).epsilon(1e-6));
  CHECK(afm_entropy(2, 1) == doctest::Approx(-0.75 * std::log(0.75) - 0.25 * std::log(1.0 / 12.0)).epsilon(1e-14));
  CHECK(std::abs(afm_entropy(7, 0)) < 1e-12);
  CHECK(afm_entropy(7, 7) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("AFM entropy matches the Dicke-basis singlet split") {
  for (auto [n, n1] : {std::pair{2L, 1L}, {5L, 2L}, {12L, 5L}, {30L, 10L}, {40L, 20L}}) {
    CAPTURE(n);
    CAPTURE(n1);
    CHECK(std::abs(afm_entropy(n, n1) - dicke_split_entropy(n, n1)) < 1e-10);
  }
}

TEST_CASE("AFM normalization over random partitions") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> dn(1, 4096);
  for (int t = 0; t < 200; ++t) {
    const long n = dn(rng);
    const long n1 = std::uniform_int_distribution<long>(0, n)(rng);
    const auto spec = afm_spectrum(n, n1);
    double s = 0.0;
    for (const auto& e : spec.entries) {
      CHECK(e.lambda_sq >= 0.0);
      CHECK(e.lambda_sq <= 1.0);
      s += (2.0 * e.s1 + 1.0) * e.lambda_sq;
    }
    CHECK(std::abs(s - 1.0) < 1e-10);
  }
}

TEST_CASE("AFM complement symmetry and monotone growth") {
  for (long n : {9L, 100L, 1000L})
    for (long n1 = 0; n1 <= n; n1 += std::max(1L, n / 9))
      CHECK(std::abs(afm_entropy(n, n1) - afm_entropy(n, n - n1)) < 1e-10);
  double prev = -1.0;
  for (long n1 = 0; n1 <= 500; n1 += 10) {
    const double e = afm_entropy(1000, n1);
    CHECK(e >= prev);
    prev = e;
  }
}

TEST_CASE("AFM sector weight vanishes beyond the smaller side") {
  CHECK(afm_lambda_sq(10, 3, 4) == 0.0);
  CHECK(afm_lambda_sq(10, 8, 3) == 0.0);
}

TEST_CASE("AFM asymptotic closed form at equal partition") {
  const long n = 400;
  CHECK(afm_entropy_asymptotic(n, n / 2) ==
        doctest::Approx(std::log(n / 4.0 + std::sqrt(numerics::kPi * n) / 4.0)).epsilon(1e-13));
}

TEST_CASE("AFM argument domain") {
  CHECK_THROWS_AS(afm_entropy(0, 0), DomainError);
  CHECK_THROWS_AS(afm_entropy(5, 6), DomainError);
  CHECK_THROWS_AS(afm_entropy(5, -1), DomainError);
}

TEST_CASE("FM half mutual information") {
  CHECK(fm_entropy(2, 1) == doctest::Approx((2 * std::log(2.0) - std::log(3.0)) / 2).epsilon(1e-14));
  CHECK(fm_entropy(10, 0) == 0.0);
  for (long t : {5L, 40L, 1001L})
    for (long s = 0; s <= t; s += std::max(1L, t / 7)) CHECK(fm_entropy(t, s) == doctest::Approx(fm_entropy(t, t - s)));
  CHECK_THROWS_AS(fm_entropy(3, 4), DomainError);
}

TEST_CASE("FM equal-partition slope one half") {
  std::vector<double> x, y;
  for (int p = 4; p <= 16; ++p) {
    const long m = 1L << p;
    x.push_back(std::log(static_cast<double>(m)));
    y.push_back(fm_entropy(2 * m, m));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  CHECK(std::abs(sxy / sxx - 0.5) < 0.01);
}
