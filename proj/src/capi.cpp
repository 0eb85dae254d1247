#include "entangle.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "entangle/boson_chain.hpp"
#include "entangle/error.hpp"
#include "entangle/fermion1d.hpp"
#include "entangle/fermion_highd.hpp"
#include "entangle/fisher_hartwig.hpp"
#include "entangle/harness.hpp"
#include "entangle/spin_order.hpp"

struct ent_table {
  entangle::harness::Table table;
};

namespace {

thread_local std::string g_last_error;

template <class F>
ent_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return ENT_OK;
  } catch (const entangle::Error& e) {
    g_last_error = e.what();
    return static_cast<ent_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ENT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ENT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw entangle::DomainError(std::string(what) + " must not be NULL");
}

std::vector<long> to_vector(const long* values, std::size_t n) {
  if (n > 0) require(values, "L_values");
  return {values, values + n};
}

ent_table* new_table(entangle::harness::Table t) { return new ent_table{std::move(t)}; }

}  // namespace

extern "C" {

const char* ent_version(void) { return "1.0.0"; }

const char* ent_last_error(void) { return g_last_error.c_str(); }

void ent_table_free(ent_table* t) { delete t; }

ent_status ent_table_shape(const ent_table* t, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(t, "table");
    if (rows) *rows = t->table.rows.size();
    if (cols) *cols = t->table.columns.size();
  });
}

const char* ent_table_column(const ent_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

const char* ent_table_label(const ent_table* t, size_t row) {
  if (!t || row >= t->table.labels.size()) return nullptr;
  return t->table.labels[row].c_str();
}

ent_status ent_table_get(const ent_table* t, size_t row, size_t col, double* out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    if (row >= t->table.rows.size() || col >= t->table.columns.size())
      throw entangle::DomainError("table index out of range");
    *out = t->table.rows[row][col];
  });
}

ent_status ent_table_write_csv(const ent_table* t, const char* path) {
  return guarded([&] {
    require(t, "table");
    require(path, "path");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw entangle::DomainError(std::string("cannot open ") + path + " for writing");
    f << t->table.to_csv();
    if (!f) throw entangle::ResourceError(std::string("failed writing ") + path);
  });
}

ent_status ent_table_read_csv(const char* path, ent_table** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream f(path, std::ios::binary);
    if (!f) throw entangle::DomainError(std::string("cannot open ") + path);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = new_table(entangle::harness::parse_csv(ss.str()));
  });
}

ent_status ent_segment_entropy(long L, double k_f, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entangle::fermion1d::segment_entropy(L, entangle::fermion1d::FermiMomentum(k_f));
  });
}

ent_status ent_fermion1d_scan(const long* L_values, size_t n, double k_f, ent_table** out) {
  return guarded([&] {
    require(out, "out");
    const auto Ls = to_vector(L_values, n);
    entangle::harness::Table t{{"L", "entropy"}, {}, {}};
    for (const auto& r :
         entangle::fermion1d::entropy_scan(Ls, entangle::fermion1d::FermiMomentum(k_f)))
      t.rows.push_back({static_cast<double>(r.L), r.entropy});
    *out = new_table(std::move(t));
  });
}

ent_status ent_local_log_slope(long L, double k_f, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entangle::fermion1d::local_log_slope(L, entangle::fermion1d::FermiMomentum(k_f));
  });
}

ent_status ent_fh_scan(const long* L_values, size_t n, double k_f, double lambda, ent_table** out) {
  return guarded([&] {
    require(out, "out");
    const auto Ls = to_vector(L_values, n);
    entangle::harness::Table t{{"L", "exact", "asymptotic", "abs_err"}, {}, {}};
    for (const auto& r : entangle::fisher_hartwig::fh_error_scan(
             Ls, entangle::fermion1d::FermiMomentum(k_f), lambda))
      t.rows.push_back({static_cast<double>(r.L), r.exact, r.asymptotic, r.abs_err});
    *out = new_table(std::move(t));
  });
}

ent_status ent_fh_beta_sq(double lambda, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto b = entangle::fisher_hartwig::beta_of_lambda(lambda);
    *out = (b * b).real();
  });
}

ent_status ent_spin_afm(long n, long n1, double* exact, double* asymptotic) {
  return guarded([&] {
    require(exact, "exact");
    *exact = entangle::spin::afm_entropy(n, n1);
    if (asymptotic)
      *asymptotic = (n1 == 0 || n1 == n) ? std::numeric_limits<double>::quiet_NaN()
                                         : entangle::spin::afm_entropy_asymptotic(n, n1);
  });
}

ent_status ent_spin_fm(long total, long sub1, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = entangle::spin::fm_entropy(total, sub1);
  });
}

ent_status ent_spin_fm_equal_scan(const long* m_values, size_t n, ent_table** out) {
  return guarded([&] {
    require(out, "out");
    const auto ms = to_vector(m_values, n);
    entangle::harness::Table t{{"m", "entropy"}, {}, {}};
    for (long m : ms)
      t.rows.push_back({static_cast<double>(m), entangle::spin::fm_entropy(2 * m, m)});
    *out = new_table(std::move(t));
  });
}

ent_status ent_boson_scan(double mass, int ring_size, const long* L_values, size_t n,
                          ent_table** out) {
  return guarded([&] {
    require(out, "out");
    const auto Ls = to_vector(L_values, n);
    const auto spec = ring_size == 0 ? entangle::boson::HarmonicChainSpec::infinite(mass)
                                     : entangle::boson::HarmonicChainSpec::ring(mass, ring_size);
    entangle::harness::Table t{{"L", "entropy"}, {}, {}};
    for (const auto& r : entangle::boson::boson_entropy_scan(spec, Ls))
      t.rows.push_back({static_cast<double>(r.L), r.entropy});
    *out = new_table(std::move(t));
  });
}

namespace {
entangle::highd::FermiSeaRegion make_region(int d, ent_sea_kind kind, double k_f) {
  if (kind != ENT_SEA_CUBIC && kind != ENT_SEA_SPHERICAL)
    throw entangle::DomainError("unknown Fermi sea kind");
  return {d, kind == ENT_SEA_CUBIC ? entangle::highd::SeaKind::kCubic
                                   : entangle::highd::SeaKind::kSpherical,
          k_f};
}
}  // namespace

ent_status ent_highd_scan(int d, ent_sea_kind kind, double k_f, const long* L_values, size_t n,
                          ent_table** out) {
  return guarded([&] {
    require(out, "out");
    const auto Ls = to_vector(L_values, n);
    const auto region = make_region(d, kind, k_f);
    entangle::harness::Table t{{"L", "entropy", "entropy_per_area"}, {}, {}};
    for (const auto& r : entangle::highd::area_law_scan(region, Ls))
      t.rows.push_back({static_cast<double>(r.L), r.entropy, r.per_area});
    *out = new_table(std::move(t));
  });
}

ent_status ent_widom(int d, ent_sea_kind kind, double k_f, double* numeric, double* analytic) {
  return guarded([&] {
    const auto region = make_region(d, kind, k_f);
    if (numeric) *numeric = entangle::highd::widom_coefficient(region);
    if (analytic) *analytic = entangle::highd::widom_coefficient_analytic(region);
  });
}

namespace {
ent_status fit_impl(const double* L, const double* S, size_t n, int d, ent_fit* out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) {
      require(L, "L");
      require(S, "S");
    }
    std::vector<entangle::harness::Point> pts;
    for (size_t i = 0; i < n; ++i) pts.push_back({L[i], S[i]});
    const auto f = entangle::harness::fit_area_log(pts, d);
    *out = {f.slope, f.intercept, f.rms_residual, f.n_points};
  });
}
}  // namespace

ent_status ent_fit_log(const double* L, const double* S, size_t n, ent_fit* out) {
  return fit_impl(L, S, n, 1, out);
}

ent_status ent_fit_area_log(const double* L, const double* S, size_t n, int d, ent_fit* out) {
  return fit_impl(L, S, n, d, out);
}

ent_status ent_oracle_check(const char* suite, ent_table** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    entangle::harness::Table t{{"fast", "oracle", "abs_diff", "tolerance", "passed"}, {}, {}};
    for (const auto& c : entangle::harness::run_oracle_checks(suite)) {
      t.labels.push_back(c.name);
      t.rows.push_back({c.fast, c.oracle, std::abs(c.fast - c.oracle), c.tolerance,
                        c.passed ? 1.0 : 0.0});
    }
    *out = new_table(std::move(t));
  });
}

}  // extern "C"
