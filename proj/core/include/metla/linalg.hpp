#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metla/scalar.hpp"

namespace metla {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row lists; every row must have the same length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix diagonal(const Vector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator-() const { return *this * Scalar(-1); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);
/// Block diagonal matrix with the given square blocks.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

struct EchelonForm {
  Matrix reduced;                   ///< reduced row echelon form, zero rows kept at the bottom
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row, so the result is deterministic.
EchelonForm row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}: one vector per free column, with a 1 in that column.
std::vector<Vector> nullspace(const Matrix& m);

/// Some x with a x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Sylvester signature: p negative squares, q positive squares, z zero squares.
struct Signature {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t z = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalization. Throws ContractViolation on non-symmetric input.
Signature signature_of_symmetric(const Matrix& m);

/// (b, c) with A^2 + bA + cI = 0, or nullopt when the minimal polynomial has degree > 2.
/// For A = lambda*I the answer is (-2 lambda, lambda^2).
std::optional<std::pair<Scalar, Scalar>> quadratic_relation(const Matrix& a);

}  // namespace metla
