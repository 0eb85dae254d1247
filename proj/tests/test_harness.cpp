#include <cmath>
#include <vector>

#include "doctest.h"
#include "entangle/error.hpp"
#include "entangle/harness.hpp"

using namespace entangle;
using namespace entangle::harness;

TEST_CASE("fit_log on exact data") {
  std::vector<Point> pts;
  for (double L : {4.0, 9.0, 30.0, 100.0}) pts.push_back({L, std::log(L) / 3.0 + 0.7});
  const auto f = fit_log(pts);
  CHECK(f.slope == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(f.rms_residual < 1e-12);
  CHECK(f.n_points == 4);

  pts.clear();
  for (double L : {2.0, 3.0, 5.0}) pts.push_back({L, 0.5 * std::log(L)});
  const auto g = fit_log(pts);
  CHECK(g.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(g.intercept) < 1e-12);
}

TEST_CASE("fit on its own predictions has zero residual") {
  std::vector<Point> pts{{2, 0.1}, {5, 0.9}, {11, 0.4}, {40, 2.0}};
  const auto f = fit_log(pts);
  for (auto& p : pts) p.S = f.slope * std::log(p.L) + f.intercept;
  CHECK(fit_log(pts).rms_residual < 1e-12);
}

TEST_CASE("fit_area_log divides by the boundary size") {
  std::vector<Point> pts;
  for (double L : {4.0, 8.0, 16.0}) pts.push_back({L, 0.2 * L * std::log(L) + 0.1 * L});
  const auto f = fit_area_log(pts, 2);
  CHECK(f.slope == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(0.1).epsilon(1e-12));
  std::vector<Point> one{{3, 1.0}, {6, 2.0}, {7, 2.2}};
  CHECK(fit_area_log(one, 1).slope == doctest::Approx(fit_log(one).slope));
}

TEST_CASE("fit preconditions") {
  std::vector<Point> two{{1, 0}, {2, 1}};
  CHECK_THROWS_AS(fit_log(two), DomainError);
  std::vector<Point> dup{{2, 0}, {2, 1}, {2, 2}};
  CHECK_THROWS_AS(fit_log(dup), DomainError);
  std::vector<Point> neg{{-1, 0}, {2, 1}, {3, 2}};
  CHECK_THROWS_AS(fit_log(neg), DomainError);
  CHECK_THROWS_AS(fit_area_log(dup, 0), DomainError);
}

TEST_CASE("linear + log fit") {
  std::vector<Point> pts;
  for (double L : {10.0, 20.0, 50.0, 100.0, 400.0}) pts.push_back({L, 0.01 * L + 0.3 * std::log(L) - 1.0});
  const auto f = fit_linear_log(pts);
  CHECK(f.linear == doctest::Approx(0.01).epsilon(1e-10));
  CHECK(f.log == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(f.constant == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("CSV formatting and round trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(64) == "64");
  Table t{{"L", "entropy"}, {{64, 1.0 / 3.0}, {128, 2.5e-13}}, {}};
  const std::string csv = t.to_csv();
  CHECK(csv == "L,entropy\n64,0.333333333333\n128,2.5e-13\n");
  const auto back = parse_csv(csv);
  CHECK(back.columns == t.columns);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[1][1] == 2.5e-13);
  CHECK(back.to_csv() == csv);

  Table lab{{"x"}, {{1}, {2}}, {"a", "b"}};
  CHECK(lab.to_csv() == "name,x\na,1\nb,2\n");
  const auto lb = parse_csv(lab.to_csv());
  CHECK(lb.labels == lab.labels);
  CHECK(lb.to_csv() == lab.to_csv());

  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), DomainError);
  CHECK_THROWS_AS(parse_csv("a\nfoo\n"), DomainError);
}

TEST_CASE("oracle suites all pass") {
  for (const char* suite : {"fermion", "spin", "boson", "all"}) {
    const auto checks = run_oracle_checks(suite);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
  CHECK_THROWS_AS(run_oracle_checks("nope"), DomainError);
}
