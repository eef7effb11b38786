#pragma once

// Small-matrix geometry: determinants as areas and volumes, the rotation and
// scaling action of a 2x2 matrix, eigen change of basis, Cramer's rule, the
// companion-determinant form of a polynomial and complex numbers as 2x2
// matrices.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "econlab/errors.hpp"

namespace econlab {

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x1, s * v.x2}; }
inline double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
double norm(Vec2 v);

/// Row-major 2x2 matrix [[a11, a12], [a21, a22]].
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 from_columns(Vec2 c1, Vec2 c2) { return {c1.x1, c2.x1, c1.x2, c2.x2}; }

  Vec2 col1() const { return {a11, a21}; }
  Vec2 col2() const { return {a12, a22}; }
  double trace() const { return a11 + a22; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Vec2 operator*(const Mat2& m, Vec2 x);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& m);
Mat2 operator+(const Mat2& a, const Mat2& b);

/// Inverse via the adjugate. Throws Error(singular) when det == 0.
Mat2 inverse(const Mat2& m);

/// Dense square matrix, row-major.
class MatN {
 public:
  explicit MatN(std::size_t n);
  MatN(std::size_t n, std::vector<double> row_major);

  static MatN identity(std::size_t n);
  static MatN diagonal(std::span<const double> d);

  std::size_t n() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& data() const noexcept { return a_; }

  /// Copy with column j replaced by b.
  MatN with_column(std::size_t j, std::span<const double> b) const;

 private:
  std::size_t n_;
  std::vector<double> a_;
};

/// a + b*i, stored as the matrix re*I + im*J with J = [[0, -1], [1, 0]].
struct MatrixComplex {
  double re = 0.0;
  double im = 0.0;

  Mat2 as_matrix() const { return {re, -im, im, re}; }

  friend bool operator==(const MatrixComplex&, const MatrixComplex&) = default;
};

/// Product through the 2x2 matrix representation.
MatrixComplex mc_mul(MatrixComplex p, MatrixComplex q);

/// True iff the matrix of p squared equals -I within 1e-12 per entry.
bool mc_square_is_minus_identity(MatrixComplex p);

/// Real diagonalization A = P diag(lambda1, lambda2) P^-1, columns of P are v1, v2.
struct EigenDecomp2 {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Vec2 v1;
  Vec2 v2;
  Mat2 P;
  Mat2 P_inv;
};

/// Builds P and P^-1 from two eigenpairs; throws Error(singular) if v1, v2 are parallel.
EigenDecomp2 make_eigen_decomp(double lambda1, Vec2 v1, double lambda2, Vec2 v2);

/// Same pairs listed with ascending eigenvalues (lambda1 <= lambda2).
EigenDecomp2 ascending(const EigenDecomp2& d);

/// Scale so the largest-magnitude component is +1. On a tie the later
/// component wins.
Vec2 normalize_eigenvector(Vec2 v);

class ComplexSpectrumError : public Error {
 public:
  ComplexSpectrumError(const std::string& what, MatrixComplex upper, MatrixComplex lower)
      : Error(ErrorKind::complex_spectrum, what), upper_(upper), lower_(lower) {}

  /// Eigenvalue with positive imaginary part.
  MatrixComplex upper() const noexcept { return upper_; }
  MatrixComplex lower() const noexcept { return lower_; }

 private:
  MatrixComplex upper_;
  MatrixComplex lower_;
};

class NotDiagonalizableError : public Error {
 public:
  NotDiagonalizableError(const std::string& what, double eigenvalue)
      : Error(ErrorKind::not_diagonalizable, what), eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class SingularSystemError : public Error {
 public:
  explicit SingularSystemError(const std::string& what) : Error(ErrorKind::singular, what) {}
};

double det2(const Mat2& m);

/// Base times height: r = <v2,v1>/|v1|^2, h = v2 - r v1, area = |v1| |h|.
double parallelogram_area(Vec2 v1, Vec2 v2);

struct RotationScaling {
  double angle;   // radians in (-pi, pi]
  double factor;  // |m x| / |x|
};

RotationScaling rotation_scaling(const Mat2& m, Vec2 x);

/// Eigenvalues from the characteristic quadratic, eigenvectors from null
/// spaces. lambda1 >= lambda2, vectors normalized by normalize_eigenvector.
EigenDecomp2 eig2(const Mat2& m);

/// Discriminant threshold below which eig2 treats the spectrum as repeated.
double eig2_discriminant_tolerance(const Mat2& m);

struct BasisChange {
  Vec2 new_coords;  // P^-1 x
  Vec2 stretched;   // Lambda * new_coords
  Vec2 y;           // P * stretched
};

BasisChange change_of_basis_apply(const EigenDecomp2& d, Vec2 x);

/// Determinant by LU factorization with partial pivoting.
double detN(const MatN& m);

/// x_i = det(A with column i replaced by b) / det(A).
std::vector<double> cramer_solve(const MatN& a, std::span<const double> b);

/// The matrix A(x) with first row (a_{n-1} + x, a_{n-2}, ..., a_0), x on the
/// remaining diagonal and -1 on the subdiagonal. `coeffs` holds a_0..a_{n-1}.
MatN companion_matrix(std::span<const double> coeffs, double x);

/// det A(x) = x^n + a_{n-1} x^{n-1} + ... + a_0.
double companion_det(std::span<const double> coeffs, double x);

}  // namespace econlab
