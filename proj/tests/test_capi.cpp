#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "entangle.h"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("version and status codes") {
  CHECK(std::string(ent_version()) == "1.0.0");
  double v = 0.0;
  CHECK(ent_segment_entropy(1, kPi / 2, &v) == ENT_OK);
  CHECK(std::abs(v - std::log(2.0)) < 1e-12);
  CHECK(std::string(ent_last_error()).empty());

  CHECK(ent_segment_entropy(1, 4.0, &v) == ENT_ERR_INPUT_DOMAIN);
  CHECK(!std::string(ent_last_error()).empty());
  CHECK(ent_segment_entropy(1, 1.0, nullptr) == ENT_ERR_INPUT_DOMAIN);
  double num = 0.0;
  CHECK(ent_widom(3, ENT_SEA_SPHERICAL, 1.0, &num, nullptr) == ENT_ERR_CAPABILITY);
  const long big[] = {65};
  ent_table* t = nullptr;
  CHECK(ent_highd_scan(2, ENT_SEA_CUBIC, 1.0, big, 1, &t) == ENT_ERR_RESOURCE);
  CHECK(t == nullptr);
  CHECK(ent_widom(2, static_cast<ent_sea_kind>(7), 1.0, &num, nullptr) == ENT_ERR_INPUT_DOMAIN);
}

TEST_CASE("fermion scan table and fit") {
  const long Ls[] = {64, 128, 256, 512};
  ent_table* t = nullptr;
  REQUIRE(ent_fermion1d_scan(Ls, 4, kPi / 2, &t) == ENT_OK);
  size_t rows = 0, cols = 0;
  CHECK(ent_table_shape(t, &rows, &cols) == ENT_OK);
  CHECK(rows == 4);
  CHECK(cols == 2);
  CHECK(std::string(ent_table_column(t, 1)) == "entropy");
  CHECK(ent_table_column(t, 2) == nullptr);
  CHECK(ent_table_label(t, 0) == nullptr);
  std::vector<double> L(rows), S(rows);
  for (size_t r = 0; r < rows; ++r) {
    CHECK(ent_table_get(t, r, 0, &L[r]) == ENT_OK);
    CHECK(ent_table_get(t, r, 1, &S[r]) == ENT_OK);
  }
  double dummy;
  CHECK(ent_table_get(t, 9, 0, &dummy) == ENT_ERR_INPUT_DOMAIN);
  ent_fit f{};
  CHECK(ent_fit_log(L.data(), S.data(), rows, &f) == ENT_OK);
  CHECK(std::abs(f.slope - 1.0 / 3.0) < 0.01);
  CHECK(f.n_points == 4);
  CHECK(ent_fit_log(L.data(), S.data(), 2, &f) == ENT_ERR_INPUT_DOMAIN);

  const auto path = std::filesystem::temp_directory_path() / "entangle_capi_roundtrip.csv";
  CHECK(ent_table_write_csv(t, path.string().c_str()) == ENT_OK);
  ent_table* back = nullptr;
  REQUIRE(ent_table_read_csv(path.string().c_str(), &back) == ENT_OK);
  double a, b;
  CHECK(ent_table_get(back, 3, 1, &a) == ENT_OK);
  CHECK(ent_table_get(t, 3, 1, &b) == ENT_OK);
  CHECK(std::abs(a - b) < 1e-11 * std::abs(b));
  ent_table_free(back);
  ent_table_free(t);
  std::filesystem::remove(path);
  ent_table_free(nullptr);
  CHECK(ent_table_read_csv("/nonexistent/x.csv", &back) == ENT_ERR_INPUT_DOMAIN);
}

TEST_CASE("other entry points") {
  double beta_sq = 0.0;
  CHECK(ent_fh_beta_sq(2.0, &beta_sq) == ENT_OK);
  CHECK(std::abs(beta_sq + std::pow(std::log(3.0) / (2 * kPi), 2)) < 1e-15);
  CHECK(ent_fh_beta_sq(0.5, &beta_sq) == ENT_ERR_INPUT_DOMAIN);

  double ex = 0.0, as = 0.0;
  CHECK(ent_spin_afm(2, 1, &ex, &as) == ENT_OK);
  CHECK(std::abs(ex - 0.836988216786) < 1e-9);
  CHECK(ent_spin_afm(2, 0, &ex, &as) == ENT_OK);
  CHECK(std::isnan(as));
  double fm = 0.0;
  CHECK(ent_spin_fm(2, 1, &fm) == ENT_OK);
  CHECK(std::abs(fm - 0.143841036226) < 1e-11);

  const long ms[] = {4, 8};
  ent_table* t = nullptr;
  CHECK(ent_spin_fm_equal_scan(ms, 2, &t) == ENT_OK);
  ent_table_free(t);

  const long Ls[] = {2, 4};
  CHECK(ent_boson_scan(0.5, 0, Ls, 2, &t) == ENT_OK);
  ent_table_free(t);
  CHECK(ent_boson_scan(0.5, 3, Ls, 2, &t) == ENT_ERR_INPUT_DOMAIN);
  CHECK(ent_boson_scan(0.0, 0, Ls, 2, &t) == ENT_ERR_INPUT_DOMAIN);
  CHECK(ent_fh_scan(Ls, 2, kPi / 2, 2.0, &t) == ENT_OK);
  size_t cols = 0;
  ent_table_shape(t, nullptr, &cols);
  CHECK(cols == 4);
  ent_table_free(t);

  double num = 0.0, ana = 0.0;
  CHECK(ent_widom(2, ENT_SEA_SPHERICAL, 1.0, &num, &ana) == ENT_OK);
  CHECK(std::abs(num - 2.0 / (3.0 * kPi)) < 1e-6);

  double slope = 0.0;
  CHECK(ent_local_log_slope(64, kPi / 2, &slope) == ENT_OK);
  CHECK(std::abs(slope - 1.0 / 3.0) < 0.02);

  CHECK(ent_oracle_check("spin", &t) == ENT_OK);
  REQUIRE(t != nullptr);
  CHECK(ent_table_label(t, 0) != nullptr);
  ent_table_free(t);
  CHECK(ent_oracle_check("bogus", &t) == ENT_ERR_INPUT_DOMAIN);
}
