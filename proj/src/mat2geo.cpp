#include "econlab/mat2geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace econlab {

double norm(Vec2 v) { return std::hypot(v.x1, v.x2); }

Vec2 operator*(const Mat2& m, Vec2 x) { return {m.a11 * x.x1 + m.a12 * x.x2, m.a21 * x.x1 + m.a22 * x.x2}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

Mat2 operator*(double s, const Mat2& m) { return {s * m.a11, s * m.a12, s * m.a21, s * m.a22}; }

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

Mat2 inverse(const Mat2& m) {
  const double d = det2(m);
  if (d == 0.0) {
    throw SingularSystemError("2x2 matrix is singular");
  }
  return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

MatN::MatN(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw ArgumentError("matrix dimension must be at least 1");
}

MatN::MatN(std::size_t n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
  if (n == 0) throw ArgumentError("matrix dimension must be at least 1");
  if (a_.size() != n * n) throw ArgumentError("matrix needs n*n entries");
  for (double v : a_) {
    if (!std::isfinite(v)) throw ArgumentError("matrix entries must be finite");
  }
}

MatN MatN::identity(std::size_t n) {
  MatN m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

MatN MatN::diagonal(std::span<const double> d) {
  MatN m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatN MatN::with_column(std::size_t j, std::span<const double> b) const {
  if (j >= n_ || b.size() != n_) throw ArgumentError("column replacement out of range");
  MatN out = *this;
  for (std::size_t i = 0; i < n_; ++i) out(i, j) = b[i];
  return out;
}

MatrixComplex mc_mul(MatrixComplex p, MatrixComplex q) {
  const Mat2 prod = p.as_matrix() * q.as_matrix();
  // The product stays in span{I, J}: first column is (re, im).
  return {prod.a11, prod.a21};
}

bool mc_square_is_minus_identity(MatrixComplex p) {
  const Mat2 sq = p.as_matrix() * p.as_matrix();
  constexpr double tol = 1e-12;
  return std::abs(sq.a11 + 1.0) <= tol && std::abs(sq.a12) <= tol && std::abs(sq.a21) <= tol &&
         std::abs(sq.a22 + 1.0) <= tol;
}

Vec2 normalize_eigenvector(Vec2 v) {
  const double pivot = std::abs(v.x2) >= std::abs(v.x1) ? v.x2 : v.x1;
  if (pivot == 0.0) {
    throw ArgumentError("eigenvector must be nonzero");
  }
  return {v.x1 / pivot, v.x2 / pivot};
}

EigenDecomp2 make_eigen_decomp(double lambda1, Vec2 v1, double lambda2, Vec2 v2) {
  EigenDecomp2 d;
  d.lambda1 = lambda1;
  d.lambda2 = lambda2;
  d.v1 = v1;
  d.v2 = v2;
  d.P = Mat2::from_columns(v1, v2);
  d.P_inv = inverse(d.P);
  return d;
}

EigenDecomp2 ascending(const EigenDecomp2& d) {
  if (d.lambda1 <= d.lambda2) return d;
  return make_eigen_decomp(d.lambda2, d.v2, d.lambda1, d.v1);
}

double det2(const Mat2& m) { return m.a11 * m.a22 - m.a21 * m.a12; }

double parallelogram_area(Vec2 v1, Vec2 v2) {
  const double len2 = dot(v1, v1);
  if (len2 == 0.0) return 0.0;
  const double r = dot(v2, v1) / len2;
  const Vec2 h = v2 - r * v1;
  return std::sqrt(len2) * norm(h);
}

RotationScaling rotation_scaling(const Mat2& m, Vec2 x) {
  const Vec2 y = m * x;
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0 || ny == 0.0) {
    throw DomainError("rotation angle is undefined for a zero vector or zero image");
  }
  const double cross = x.x1 * y.x2 - x.x2 * y.x1;
  double angle = std::atan2(cross, dot(x, y));
  if (angle <= -std::numbers::pi) angle = std::numbers::pi;
  return {angle, ny / nx};
}

double eig2_discriminant_tolerance(const Mat2& m) {
  const double scale = std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
  return 1e-12 * std::max(1.0, scale * scale);
}

namespace {

// Null vector of m - lambda*I taken from its better-conditioned row.
Vec2 null_vector(const Mat2& m, double lambda) {
  const Vec2 r1{m.a11 - lambda, m.a12};
  const Vec2 r2{m.a21, m.a22 - lambda};
  const Vec2 row = norm(r1) >= norm(r2) ? r1 : r2;
  return normalize_eigenvector({-row.x2, row.x1});
}

}  // namespace

EigenDecomp2 eig2(const Mat2& m) {
  const double half_tr = 0.5 * m.trace();
  const double diff = m.a11 - m.a22;
  // (tr)^2 - 4 det written without the cancellation-prone difference.
  const double disc = diff * diff + 4.0 * m.a12 * m.a21;
  const double tol = eig2_discriminant_tolerance(m);

  if (disc < -tol) {
    const double im = 0.5 * std::sqrt(-disc);
    std::ostringstream msg;
    msg << "complex eigenvalues " << half_tr << " +/- " << im << "i";
    throw ComplexSpectrumError(msg.str(), {half_tr, im}, {half_tr, -im});
  }
  if (std::abs(disc) <= tol) {
    const double scale = std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
    const double off = std::max({std::abs(m.a11 - half_tr), std::abs(m.a12), std::abs(m.a21),
                                 std::abs(m.a22 - half_tr)});
    if (off > 1e-12 * std::max(1.0, scale)) {
      std::ostringstream msg;
      msg << "matrix is defective: repeated eigenvalue " << half_tr << " with a one-dimensional eigenspace";
      throw NotDiagonalizableError(msg.str(), half_tr);
    }
    return make_eigen_decomp(half_tr, {1.0, 0.0}, half_tr, {0.0, 1.0});
  }

  const double s = 0.5 * std::sqrt(disc);
  const double l1 = half_tr + s;
  const double l2 = half_tr - s;
  return make_eigen_decomp(l1, null_vector(m, l1), l2, null_vector(m, l2));
}

BasisChange change_of_basis_apply(const EigenDecomp2& d, Vec2 x) {
  BasisChange out;
  out.new_coords = d.P_inv * x;
  out.stretched = {d.lambda1 * out.new_coords.x1, d.lambda2 * out.new_coords.x2};
  out.y = d.P * out.stretched;
  return out;
}

double detN(const MatN& m) {
  const std::size_t n = m.n();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  MatN lu = m;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    const double pivot = lu(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

std::vector<double> cramer_solve(const MatN& a, std::span<const double> b) {
  const std::size_t n = a.n();
  if (b.size() != n) {
    throw ArgumentError("right-hand side length does not match the matrix");
  }
  double max_col = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a(i, j) * a(i, j);
    max_col = std::max(max_col, std::sqrt(s));
  }
  const double d = detN(a);
  if (!(std::abs(d) > 1e-12 * std::pow(max_col, static_cast<double>(n)))) {
    std::ostringstream msg;
    msg << "system is singular or nearly so (det = " << d << ")";
    throw SingularSystemError(msg.str());
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = detN(a.with_column(i, b)) / d;
  }
  return x;
}

MatN companion_matrix(std::span<const double> coeffs, double x) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw ArgumentError("polynomial needs at least one coefficient");
  MatN m(n);
  m(0, 0) = coeffs[n - 1] + x;
  for (std::size_t j = 1; j < n; ++j) m(0, j) = coeffs[n - 1 - j];
  for (std::size_t i = 1; i < n; ++i) {
    m(i, i) = x;
    m(i, i - 1) = -1.0;
  }
  return m;
}

double companion_det(std::span<const double> coeffs, double x) { return detN(companion_matrix(coeffs, x)); }

}  // namespace econlab
