#pragma once

// Brute-force references used only by the tests. Nothing here calls into
// the library except for the Rational number type.

#include <cstdint>
#include <vector>

#include "holweitz/rational.hpp"

namespace oracle {

using holweitz::Rational;
using Vec = std::vector<std::int64_t>;

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Matrix identity(int n);

  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Rational& s, const Matrix& x);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;
};

Matrix kron(const Matrix& x, const Matrix& y);
Rational trace(const Matrix& m);
int rank(Matrix m);
/// Basis of the null space, one vector per column of the result.
Matrix kernel(const Matrix& m);
/// Solves m x = b for a matrix with full column rank; throws if inconsistent.
std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& b);
Matrix inverse(const Matrix& m);

/// Weight multiplicity by Kostant's formula: alternating sum over the Weyl
/// group of the partition function of the positive roots.
/// cartan[i] holds the Dynkin labels of the i-th simple root; positive roots
/// are given by their coefficients over the simple roots.
std::int64_t kostant_multiplicity(const std::vector<Vec>& cartan, const std::vector<Vec>& positive_roots,
                                  const Vec& highest, const Vec& weight);

/// Dominant weights of the irrep with the given highest weight, with
/// multiplicities, found by searching the dominant weights below it.
std::vector<std::pair<Vec, std::int64_t>> kostant_dominant_character(const std::vector<Vec>& cartan,
                                                                     const std::vector<Vec>& positive_roots,
                                                                     const Vec& highest);

/// g2 realised inside so(7) as the stabiliser of the 3-form
/// e123 + e145 + e167 + e246 - e257 - e347 - e356.
struct G2Model {
  std::vector<Matrix> basis;  // 7x7 skew matrices
  Matrix gram;                // -1/2 tr(XY), the form induced from Lambda^2
  Matrix gram_inv;
  std::vector<Matrix> adjoint;  // ad(X_a) in the basis above
};
G2Model build_g2_model();

/// Casimir sum_a g^ab rho(X_a) rho(X_b) for a representation rho given by
/// matrices on the same basis.
Matrix casimir(const Matrix& gram_inv, const std::vector<Matrix>& rho);

/// Conformal weight operator -sum g^ab X_a (x) Y_b on a tensor product.
Matrix conformal_weight_operator(const Matrix& gram_inv, const std::vector<Matrix>& left,
                                 const std::vector<Matrix>& right);

/// Standard basis E_ij (i < j) of so(n) and its action on Lambda^p R^n.
std::vector<Matrix> so_basis(int n);
std::vector<Matrix> wedge_action(const std::vector<Matrix>& generators, int n, int p);

}  // namespace oracle
