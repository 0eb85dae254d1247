#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace entangle::numerics {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : Matrix(n, n, fill) {}
  Matrix(std::size_t rows, std::size_t cols, double fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return data_; }
  double max_abs() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Symmetric matrix. Every mutation writes both triangles so entries stay
/// exactly symmetric; entries are finite by construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : m_(n) {}

  /// Symmetrizes (A + Aᵀ)/2. Throws DomainError on non-square or non-finite input.
  static SymMatrix from_dense(const Matrix& a);
  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> diag);

  std::size_t size() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v);

  const Matrix& dense() const noexcept { return m_; }
  double max_abs() const noexcept { return m_.max_abs(); }
  double frobenius() const noexcept;

 private:
  Matrix m_;
};

struct EigenResult {
  std::vector<double> values;          // ascending
  std::optional<Matrix> vectors;       // column k pairs with values[k]
};

/// Eigenvalues only, ascending. Householder tridiagonalization followed by
/// implicit QL; O(n³) with a small constant, used for the large correlation blocks.
EigenResult symmetric_eigenvalues(const SymMatrix& m);

/// Eigenvalues and orthonormal eigenvectors by cyclic Jacobi rotation.
/// Converges when the off-diagonal Frobenius norm drops below 1e-13·‖M‖_F;
/// throws NumericalError after 100 sweeps.
EigenResult jacobi_eigen(const SymMatrix& m, bool want_vectors = true);

/// f(M) = V f(Λ) Vᵀ for a spectral function f applied eigenvalue-wise.
template <class F>
SymMatrix spectral_function(const SymMatrix& m, F&& f) {
  const EigenResult eig = jacobi_eigen(m, true);
  const Matrix& v = *eig.vectors;
  const std::size_t n = m.size();
  std::vector<double> fl(n);
  for (std::size_t k = 0; k < n; ++k) fl[k] = f(eig.values[k]);
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += v(i, k) * fl[k] * v(j, k);
      out.set(i, j, s);
    }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b);

struct LogDet {
  int sign = 0;            // -1, 0, +1
  double logabs = 0.0;     // -inf when sign == 0
};

/// Partial-pivot LU; sign and log|det| accumulated pivot by pivot.
LogDet log_abs_det(const Matrix& m);
LogDet log_abs_det(const SymMatrix& m);

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// ∫_a^b f by an n-point Gauss–Legendre rule.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * s;
}

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// ln[G(1+β)G(1−β)] as a function of β² (real), Barnes G-function.
/// Valid for beta_sq ≤ 0.25.
double log_barnes_g_pair(double beta_sq);

/// G(1+β)G(1−β) = e^{-(1+γ)β²} ∏ₙ (1 − β²/n²)ⁿ e^{β²/n}.
double barnes_g_pair(double beta_sq);

}  // namespace entangle::numerics
