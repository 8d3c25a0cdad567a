#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "symquot/cyclotomic.hpp"

namespace symquot {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix over Q(zeta_m). Every entry is stored at the
/// matrix conductor; operations promote to the lcm when conductors differ.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int conductor = 1);
  /// Promotes every entry to the lcm of the entry conductors and `conductor`.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries, int conductor = 1);

  static Matrix identity(std::size_t n, int conductor = 1);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, int conductor = 1);
  /// diag(a, b)
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }
  bool is_square() const { return rows_ == cols_; }

  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Cyclotomic& value);
  std::span<const Cyclotomic> entries() const { return data_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix embed(int conductor) const;
  Matrix transpose() const;
  Matrix scaled(const Cyclotomic& s) const;
  Vector apply(std::span<const Cyclotomic> v) const;

  bool is_zero() const;
  bool is_identity() const;

  std::size_t rank() const;
  /// Inverse when the matrix is square and nonsingular.
  std::optional<Matrix> inverse() const;
  /// Coefficients c_0..c_n of det(x I - M), low degree first.
  std::vector<Cyclotomic> characteristic_polynomial() const;
  Cyclotomic trace() const;

  std::size_t hash() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<Cyclotomic> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Gauss-Jordan elimination in place to reduced row echelon form, pivoting
/// on the first nonzero entry of each column. Returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<Vector>& rows, std::size_t cols);

/// Dot product sum_i a_i b_i (no conjugation).
Cyclotomic dot(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b);

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

}  // namespace symquot
