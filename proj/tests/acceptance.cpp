// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "entangle/boson_chain.hpp"
#include "entangle/fermion1d.hpp"
#include "entangle/fermion_highd.hpp"
#include "entangle/fisher_hartwig.hpp"
#include "entangle/harness.hpp"
#include "entangle/oracle.hpp"
#include "entangle/spin_order.hpp"

using namespace entangle;
using numerics::kPi;
using fermion1d::FermiMomentum;

namespace {

int g_failed = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

// Wraps a criterion so an unexpected exception is reported as a failure.
template <class F>
void criterion(int id, const char* title, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

double fermion_fit_slope(double kf) {
  const std::vector<long> Ls{64, 128, 192, 256, 384, 512, 768, 1024};
  std::vector<harness::Point> pts;
  for (const auto& r : fermion1d::entropy_scan(Ls, FermiMomentum(kf)))
    pts.push_back({static_cast<double>(r.L), r.entropy});
  return harness::fit_log(pts).slope;
}

double boson_fit_slope(double mass) {
  const std::vector<long> Ls{8, 12, 16, 24, 32, 48, 64};
  std::vector<harness::Point> pts;
  for (const auto& r : boson::boson_entropy_scan(boson::HarmonicChainSpec::infinite(mass), Ls))
    pts.push_back({static_cast<double>(r.L), r.entropy});
  return harness::fit_log(pts).slope;
}

std::uint32_t mask_of(const std::vector<int>& sites) {
  std::uint32_t m = 0;
  for (int s : sites) m |= 1u << s;
  return m;
}

}  // namespace

int main() {
  criterion(1, "1D fermion log law", [] {
    Timer t;
    const double s1 = fermion_fit_slope(kPi / 2);
    const double s2 = fermion_fit_slope(kPi / 4);
    const double sec = t.seconds();
    const bool ok = std::abs(s1 - 1.0 / 3.0) <= 0.01 && std::abs(s2 - 1.0 / 3.0) <= 0.02 && sec <= 180.0;
    report(1, "1D fermion log law", ok,
           fmt("slope(pi/2)=%.6f tol 0.01, slope(pi/4)=%.6f tol 0.02, %.1fs of 180s", s1, s2, sec));
  });

  criterion(2, "single-site exactness", [] {
    const double err = std::abs(fermion1d::segment_entropy(1, FermiMomentum(kPi / 2)) - std::log(2.0));
    report(2, "single-site exactness", err <= 1e-12, fmt("|S(1)-ln2|=%.2e tol 1e-12", err));
  });

  criterion(3, "correlation matrix vs Fock oracle", [] {
    Timer t;
    const std::vector<int> b6{0, 1, 2}, b8{0, 1, 2, 3};
    const double e6 = std::abs(fermion1d::ring_block_entropy(6, 3, b6) -
                               oracle::exact_fermion_ring_entropy(6, 3, mask_of(b6)));
    const double e8 = std::abs(fermion1d::ring_block_entropy(8, 3, b8) -
                               oracle::exact_fermion_ring_entropy(8, 3, mask_of(b8)));
    report(3, "correlation matrix vs Fock oracle", e6 <= 1e-8 && e8 <= 1e-8,
           fmt("6-site diff=%.2e, 8-site diff=%.2e tol 1e-8, %.2fs", e6, e8, t.seconds()));
  });

  criterion(4, "validity-criterion breakdown", [] {
    const double half = fermion1d::local_log_slope(64, FermiMomentum(kPi / 2));
    const double low = fermion1d::local_log_slope(64, FermiMomentum(0.02));
    const double dh = std::abs(half - 1.0 / 3.0), dl = std::abs(low - 1.0 / 3.0);
    report(4, "validity-criterion breakdown", dh <= 0.02 && dl > 0.05,
           fmt("slope(pi/2)=%.5f dev %.4f (need <=0.02); slope(0.02)=%.5f dev %.4f (need >0.05)", half,
               dh, low, dl));
  });

  criterion(5, "Fisher-Hartwig accuracy", [] {
    const std::vector<long> Ls{16, 32, 64, 128, 256};
    const auto rows = fisher_hartwig::fh_error_scan(Ls, FermiMomentum(kPi / 2), 2.0);
    bool decreasing = true;
    std::string errs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && !(rows[i].abs_err < rows[i - 1].abs_err)) decreasing = false;
      errs += fmt("%s%.2e", i ? "," : "", rows[i].abs_err);
    }
    const double rate = (fisher_hartwig::exact_log_det(512, FermiMomentum(kPi / 2), 2.0) -
                         fisher_hartwig::exact_log_det(256, FermiMomentum(kPi / 2), 2.0)) /
                        256.0;
    const double dr = std::abs(rate - std::log(std::sqrt(3.0)));
    report(5, "Fisher-Hartwig accuracy", decreasing && dr <= 1e-3,
           fmt("abs_err=[%s] %s; rate=%.6f vs 0.549306 diff %.1e tol 1e-3", errs.c_str(),
               decreasing ? "decreasing" : "NOT decreasing", rate, dr));
  });

  criterion(6, "AFM equal partition", [] {
    Timer t;
    const double d = spin::afm_entropy(10000, 5000) - std::log(10000.0);
    const double gap = std::abs(spin::afm_entropy(2048, 1024) - spin::afm_entropy_asymptotic(2048, 1024));
    const bool ok = d >= -1.40 && d <= -1.375 && gap < 0.02;
    report(6, "AFM equal partition", ok,
           fmt("E-lnN=%.5f (need [-1.40,-1.375]); gap(n=2048)=%.5f (need <0.02); E-lnN-1=%.5f, %.2fs",
               d, gap, d - 1.0, t.seconds()));
  });

  criterion(7, "AFM unequal partition", [] {
    const double e = spin::afm_entropy(1000000, 1000);
    const double target = std::log(1000.0) - 1e-3;
    report(7, "AFM unequal partition", std::abs(e - target) <= 5e-4,
           fmt("E=%.6f vs ln(1e3)-1e-3=%.6f tol 5e-4; E-1=%.6f", e, target, e - 1.0));
  });

  criterion(8, "AFM normalization", [] {
    std::mt19937_64 rng(20240601);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const long n = std::uniform_int_distribution<long>(1, 4096)(rng);
      const long n1 = std::uniform_int_distribution<long>(0, n)(rng);
      double s = 0.0;
      for (const auto& e : spin::afm_spectrum(n, n1).entries) s += (2.0 * e.s1 + 1.0) * e.lambda_sq;
      worst = std::max(worst, std::abs(s - 1.0));
    }
    report(8, "AFM normalization", worst <= 1e-10, fmt("max|sum-1|=%.2e over 200 pairs tol 1e-10", worst));
  });

  criterion(9, "FM slope and oracle", [] {
    std::vector<harness::Point> pts;
    for (int p = 4; p <= 16; ++p) {
      const long m = 1L << p;
      pts.push_back({static_cast<double>(m), spin::fm_entropy(2 * m, m)});
    }
    const double slope = harness::fit_log(pts).slope;
    double worst = 0.0;
    for (int t = 1; t <= 10; ++t)
      for (int s = 0; s <= t; ++s)
        worst = std::max(worst, std::abs(spin::fm_entropy(t, s) - oracle::exact_fm_entropy(t, s)));
    report(9, "FM slope and oracle", std::abs(slope - 0.5) <= 0.01 && worst <= 1e-8,
           fmt("slope=%.5f tol 0.01; oracle max diff=%.2e tol 1e-8", slope, worst));
  });

  criterion(10, "boson two-mode oracle", [] {
    double worst = 0.0;
    for (double ratio : {1.0, 2.0, 10.0, 100.0}) {
      numerics::SymMatrix k(2);
      const double a = 0.5 * (ratio * ratio + 1.0), c = 0.5 * (ratio * ratio - 1.0);
      k.set(0, 0, a);
      k.set(1, 1, a);
      k.set(0, 1, -c);
      const std::vector<int> first{0};
      const double nu = boson::symplectic_spectrum(
                            boson::restrict_state(boson::state_from_coupling(k), first))
                            .nus.at(0);
      worst = std::max(worst, std::abs(nu - (std::sqrt(ratio) + 1.0 / std::sqrt(ratio)) / 4.0));
    }
    const double pure = boson::block_entropy(boson::HarmonicChainSpec::ring(0.1, 16), 16);
    report(10, "boson two-mode oracle", worst <= 1e-10 && std::abs(pure) <= 1e-7,
           fmt("max nu diff=%.2e tol 1e-10; pure-state S=%.2e tol 1e-7", worst, pure));
  });

  criterion(11, "boson massless scaling", [] {
    Timer t;
    const double slope = boson_fit_slope(1e-5);
    const double sec = t.seconds();
    const double rel = std::abs(slope - 1.0 / 3.0) / (1.0 / 3.0);
    const double deeper = boson_fit_slope(1e-10);
    report(11, "boson massless scaling", rel <= 0.10 && sec <= 120.0,
           fmt("slope(m=1e-5)=%.5f rel dev %.1f%% tol 10%%, %.1fs; slope(m=1e-10)=%.5f", slope, 100 * rel,
               sec, deeper));
  });

  criterion(12, "2D area law with log", [] {
    Timer t;
    const highd::FermiSeaRegion disk(2, highd::SeaKind::kSpherical, 1.0);
    std::vector<long> Ls;
    for (long L = 4; L <= 24; ++L) Ls.push_back(L);
    std::vector<harness::Point> pts;
    double lo = 1e300, hi = 0.0;
    for (const auto& r : highd::area_law_scan(disk, Ls)) {
      pts.push_back({static_cast<double>(r.L), r.entropy});
      const double w = r.entropy / (r.L * std::log(static_cast<double>(r.L)));
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    const double slope = harness::fit_area_log(pts, 2).slope;
    const double widom = highd::widom_coefficient(disk);
    const double rel = std::abs(slope - widom) / widom;
    const double sec = t.seconds();
    // Sandwich constants pinned at c- = 0.1, c+ = 1.0.
    const bool ok = slope > 0.0 && rel <= 0.25 && lo >= 0.1 && hi <= 1.0 && sec <= 600.0;
    report(12, "2D area law with log", ok,
           fmt("slope=%.5f vs %.6f rel dev %.1f%% tol 25%%; S/(L lnL) in [%.4f, %.4f] within [0.1, 1.0], %.1fs",
               slope, widom, 100 * rel, lo, hi, sec));
  });

  criterion(13, "Widom quadrature consistency", [] {
    double worst = 0.0;
    for (double kf : {0.5, 1.0}) {
      const highd::FermiSeaRegion disk(2, highd::SeaKind::kSpherical, kf);
      worst = std::max(worst, std::abs(highd::widom_coefficient(disk) - 2.0 * kf / (3.0 * kPi)));
    }
    report(13, "Widom quadrature consistency", worst <= 1e-6, fmt("max diff=%.2e tol 1e-6", worst));
  });

  criterion(14, "tensor-product spectrum", [] {
    double worst = 0.0;
    for (double kf : {1.1, kPi / 2})
      for (long L = 1; L <= 16; ++L) {
        const auto c1 = highd::block_correlation_matrix(highd::FermiSeaRegion(1, highd::SeaKind::kCubic, kf),
                                                        highd::BlockSpec{1, L});
        const auto e1 = numerics::symmetric_eigenvalues(c1).values;
        double prod = 0.0;
        for (double a : e1)
          for (double b : e1) prod += highd::h(2.0 * a * b - 1.0);
        const double direct = highd::block_entropy(highd::FermiSeaRegion(2, highd::SeaKind::kCubic, kf),
                                                   highd::BlockSpec{2, L});
        worst = std::max(worst, std::abs(direct - prod));
      }
    report(14, "tensor-product spectrum", worst <= 1e-8, fmt("max diff=%.2e over L<=16 tol 1e-8", worst));
  });

  std::printf("%d of 14 criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
