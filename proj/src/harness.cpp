#include "entangle/harness.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "entangle/boson_chain.hpp"
#include "entangle/error.hpp"
#include "entangle/fermion1d.hpp"
#include "entangle/oracle.hpp"
#include "entangle/spin_order.hpp"

namespace entangle::harness {

namespace {

void check_points(std::span<const Point> pts, std::size_t min_points) {
  if (pts.size() < min_points)
    throw DomainError("fit needs at least " + std::to_string(min_points) + " points");
  std::set<double> seen;
  for (const auto& p : pts) {
    if (!(p.L > 0.0) || !std::isfinite(p.S)) throw DomainError("fit points need L > 0 and finite S");
    if (!seen.insert(p.L).second) throw DomainError("fit points need distinct L");
  }
}

}  // namespace

ScalingFit fit_log(std::span<const Point> points) {
  check_points(points, 3);
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += std::log(p.L);
    my += p.S;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.L) - mx;
    sxx += dx * dx;
    sxy += dx * (p.S - my);
  }
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.S - (fit.slope * std::log(p.L) + fit.intercept);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  fit.n_points = static_cast<int>(points.size());
  return fit;
}

ScalingFit fit_area_log(std::span<const Point> points, int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  std::vector<Point> scaled;
  scaled.reserve(points.size());
  for (const auto& p : points) scaled.push_back({p.L, p.S / std::pow(p.L, d - 1)});
  return fit_log(scaled);
}

LinearLogFit fit_linear_log(std::span<const Point> points) {
  check_points(points, 4);
  // Normal equations on centered columns [L, ln L].
  const double n = static_cast<double>(points.size());
  double m1 = 0.0, m2 = 0.0, my = 0.0;
  for (const auto& p : points) {
    m1 += p.L;
    m2 += std::log(p.L);
    my += p.S;
  }
  m1 /= n;
  m2 /= n;
  my /= n;
  double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
  for (const auto& p : points) {
    const double x1 = p.L - m1, x2 = std::log(p.L) - m2, y = p.S - my;
    a11 += x1 * x1;
    a12 += x1 * x2;
    a22 += x2 * x2;
    b1 += x1 * y;
    b2 += x2 * y;
  }
  const double det = a11 * a22 - a12 * a12;
  if (!(std::abs(det) > 0.0)) throw NumericalError("linear+log fit is degenerate");
  LinearLogFit fit;
  fit.linear = (b1 * a22 - b2 * a12) / det;
  fit.log = (a11 * b2 - a12 * b1) / det;
  fit.constant = my - fit.linear * m1 - fit.log * m2;
  double ss = 0.0;
  for (const auto& p : points) {
    const double r = p.S - (fit.linear * p.L + fit.log * std::log(p.L) + fit.constant);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string Table::to_csv() const {
  std::string out;
  const bool labelled = !labels.empty();
  if (labelled) out += "name";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0 || labelled) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (labelled) out += labels[r];
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 || labelled) out += ',';
      out += format_number(rows[r][c]);
    }
    out += '\n';
  }
  return out;
}

Table parse_csv(std::string_view text) {
  Table t;
  std::istringstream in{std::string(text)};
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> f;
    std::string cur;
    for (char ch : s) {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    f.push_back(cur);
    return f;
  };
  if (!std::getline(in, line)) throw DomainError("empty CSV input");
  t.columns = split(line);
  // A leading "name" column carries row labels.
  const bool labelled = !t.columns.empty() && t.columns.front() == "name";
  const std::size_t width = t.columns.size();
  if (labelled) t.columns.erase(t.columns.begin());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != width) throw DomainError("CSV row has the wrong field count");
    if (labelled) {
      t.labels.push_back(fields.front());
      fields.erase(fields.begin());
    }
    std::vector<double> row;
    for (const auto& f : fields) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(f, &used);
      } catch (const std::exception&) {
        throw DomainError("non-numeric CSV field '" + f + "'");
      }
      if (used != f.size()) throw DomainError("non-numeric CSV field '" + f + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

OracleCheck check(std::string name, double fast, double oracle, double tol) {
  return {std::move(name), fast, oracle, tol, std::abs(fast - oracle) <= tol};
}

void fermion_checks(std::vector<OracleCheck>& out) {
  struct Case {
    int sites, particles;
    std::vector<int> block;
  };
  const std::vector<Case> cases{
      {6, 3, {0, 1, 2}}, {8, 3, {0, 1, 2, 3}}, {8, 5, {0, 1, 2}}, {10, 5, {0, 1, 2, 3, 4}},
      {6, 3, {0, 2, 4}}, {6, 0, {0, 1}},       {8, 8, {0, 1, 2}}};
  for (const auto& c : cases) {
    std::uint32_t bits = 0;
    for (int s : c.block) bits |= 1u << s;
    std::string name = "fermion_ring_" + std::to_string(c.sites) + "_" +
                       std::to_string(c.particles) + "_block";
    for (int s : c.block) name += "_" + std::to_string(s);
    out.push_back(check(name, fermion1d::ring_block_entropy(c.sites, c.particles, c.block),
                        oracle::exact_fermion_ring_entropy(c.sites, c.particles, bits), 1e-8));
  }
}

void spin_checks(std::vector<OracleCheck>& out) {
  for (int n = 1; n <= 4; ++n)
    for (int n1 = 0; n1 <= n; ++n1)
      out.push_back(check("afm_n" + std::to_string(n) + "_n1_" + std::to_string(n1),
                          spin::afm_entropy(n, n1), oracle::exact_afm_entropy(n, n1), 1e-8));
  for (int total = 1; total <= 10; ++total)
    for (int sub = 0; sub <= total; ++sub)
      out.push_back(check("fm_total" + std::to_string(total) + "_sub" + std::to_string(sub),
                          spin::fm_entropy(total, sub), oracle::exact_fm_entropy(total, sub), 1e-8));
}

void boson_checks(std::vector<OracleCheck>& out) {
  for (double ratio : {1.0, 2.0, 10.0, 100.0}) {
    const double wp = ratio, wm = 1.0;
    numerics::SymMatrix k(2);
    k.set(0, 0, 0.5 * (wp * wp + wm * wm));
    k.set(1, 1, 0.5 * (wp * wp + wm * wm));
    k.set(0, 1, 0.5 * (wp * wp - wm * wm));
    const int site0[] = {0};
    const auto reduced = boson::restrict_state(boson::state_from_coupling(k), site0);
    const double nu = boson::symplectic_spectrum(reduced).nus.at(0);
    const double closed = 0.25 * (std::sqrt(wp / wm) + std::sqrt(wm / wp));
    out.push_back(check("boson_two_mode_ratio_" + format_number(ratio), nu, closed, 1e-10));
  }
  const auto ring = boson::HarmonicChainSpec::ring(0.1, 16);
  out.push_back(check("boson_ring16_pure", boson::block_entropy(ring, 16), 0.0, 1e-7));
}

}  // namespace

std::vector<OracleCheck> run_oracle_checks(std::string_view suite) {
  std::vector<OracleCheck> out;
  const bool all = suite == "all";
  if (!all && suite != "fermion" && suite != "spin" && suite != "boson")
    throw DomainError("unknown oracle suite '" + std::string(suite) + "'");
  if (all || suite == "fermion") fermion_checks(out);
  if (all || suite == "spin") spin_checks(out);
  if (all || suite == "boson") boson_checks(out);
  return out;
}

}  // namespace entangle::harness
