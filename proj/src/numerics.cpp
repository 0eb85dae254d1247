#include "entangle/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entangle/error.hpp"

namespace entangle::numerics {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::max_abs() const noexcept {
  double r = 0.0;
  for (double v : data_) r = std::max(r, std::abs(v));
  return r;
}

SymMatrix SymMatrix::from_dense(const Matrix& a) {
  if (!a.square()) throw DomainError("symmetric matrix requires square input");
  const std::size_t n = a.rows();
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      if (!std::isfinite(v)) throw DomainError("non-finite matrix entry");
      s.set(i, j, v);
    }
  return s;
}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, 1.0);
  return s;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix s(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) s.set(i, i, diag[i]);
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite matrix entry");
  m_(i, j) = v;
  m_(j, i) = v;
}

double SymMatrix::frobenius() const noexcept {
  double s = 0.0;
  for (double v : m_.data()) s += v * v;
  return std::sqrt(s);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// Householder reduction of the lower triangle of `a` to tridiagonal form.
// On return d holds the diagonal and e[1..n-1] the subdiagonal.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n < 2) return;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  // Absolute floor: clusters near zero never meet a purely relative test.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d[i]) + std::abs(e[i]));
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= 0.5 * eps * norm) break;
      }
      if (m == l) break;
      if (++iter > 60) throw NumericalError("tridiagonal QL failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
}

void check_finite(const SymMatrix& m) {
  for (double v : m.dense().data())
    if (!std::isfinite(v)) throw DomainError("non-finite matrix entry");
}

}  // namespace

EigenResult symmetric_eigenvalues(const SymMatrix& m) {
  check_finite(m);
  const std::size_t n = m.size();
  EigenResult out;
  if (n == 0) return out;
  std::vector<double> a(m.dense().data().begin(), m.dense().data().end());
  std::vector<double> d(n), e(n);
  tridiagonalize(a, n, d, e);
  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  out.values = std::move(d);
  return out;
}

EigenResult jacobi_eigen(const SymMatrix& m, bool want_vectors) {
  check_finite(m);
  const std::size_t n = m.size();
  Matrix a = m.dense();
  Matrix v = Matrix::identity(n);
  const double threshold = 1e-13 * m.frobenius();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > 100) throw NumericalError("Jacobi eigensolver exceeded 100 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = akp - s * (akq + tau * akp);
          a(k, q) = a(q, k) = akq + s * (akp - tau * akq);
        }
        if (want_vectors)
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = vkp - s * (vkq + tau * vkp);
            v(k, q) = vkq + s * (vkp - tau * vkq);
          }
      }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenResult out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (want_vectors) {
    Matrix sorted(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) sorted(i, k) = v(i, order[k]);
    out.vectors = std::move(sorted);
  }
  return out;
}

LogDet log_abs_det(const Matrix& m) {
  if (!m.square()) throw DomainError("determinant requires a square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  for (double x : a.data())
    if (!std::isfinite(x)) throw DomainError("non-finite matrix entry");
  const double tol =
      static_cast<double>(std::max<std::size_t>(n, 1)) * std::numeric_limits<double>::epsilon() * a.max_abs();

  LogDet out{1, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    const double pv = a(piv, k);
    if (std::abs(pv) <= tol) return {0, -std::numeric_limits<double>::infinity()};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      out.sign = -out.sign;
    }
    if (pv < 0.0) out.sign = -out.sign;
    out.logabs += std::log(std::abs(pv));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / pv;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return out;
}

LogDet log_abs_det(const SymMatrix& m) { return log_abs_det(m.dense()); }

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("quadrature order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma requires a finite positive argument");
  return std::lgamma(x);
}

double log_barnes_g_pair(double beta_sq) {
  if (!std::isfinite(beta_sq)) throw DomainError("beta^2 must be finite");
  if (beta_sq > 0.25)
    throw DomainError("beta^2 = " + std::to_string(beta_sq) +
                      " lies outside the validated range beta^2 <= 0.25");
  if (beta_sq == 0.0) return 0.0;

  constexpr int kTerms = 100000;
  const double b = beta_sq;
  // Smallest terms first.
  double sum = 0.0;
  for (int n = kTerms; n >= 1; --n) {
    const double dn = n;
    sum += dn * std::log1p(-b / (dn * dn)) + b / dn;
  }
  // Each term is -b²/(2n³) + O(b³/n⁵); Euler–Maclaurin for Σ_{n>N} n⁻³.
  const double N = kTerms;
  const double zeta3_tail = 1.0 / (2 * N * N) - 1.0 / (2 * N * N * N) + 1.0 / (4 * N * N * N * N);
  sum += -0.5 * b * b * zeta3_tail;
  return -(1.0 + kEulerGamma) * b + sum;
}

double barnes_g_pair(double beta_sq) { return std::exp(log_barnes_g_pair(beta_sq)); }

}  // namespace entangle::numerics
