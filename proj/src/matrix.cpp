#include "symquot/matrix.hpp"

#include <ostream>

#include "symquot/error.hpp"

namespace symquot {

Matrix::Matrix(std::size_t rows, std::size_t cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      data_(rows * cols, Cyclotomic(Rational(0), conductor)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InputError("matrix entry count " + std::to_string(data_.size()) + " != " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (const auto& e : data_) conductor_ = lcm_conductor(conductor_, e.conductor());
  for (auto& e : data_) e = e.embed(conductor_);
}

Matrix Matrix::identity(std::size_t n, int conductor) {
  Matrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Cyclotomic(Rational(1), conductor);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, int conductor) {
  std::vector<Cyclotomic> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries), conductor);
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  const int m = lcm_conductor(a.conductor_, b.conductor_);
  Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_, m);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) out.set(a.rows_ + i, a.cols_ + j, b(i, j));
  return out;
}

void Matrix::set(std::size_t r, std::size_t c, const Cyclotomic& value) {
  if (value.conductor() == conductor_) {
    data_[r * cols_ + c] = value;
    return;
  }
  const int m = lcm_conductor(conductor_, value.conductor());
  if (m != conductor_) *this = embed(m);
  data_[r * cols_ + c] = value.embed(m);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(data_[r * cols_ + c]);
  return out;
}

Matrix Matrix::embed(int conductor) const {
  if (conductor == conductor_) return *this;
  Matrix out = *this;
  out.conductor_ = conductor;
  for (auto& e : out.data_) e = e.embed(conductor);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
  return out;
}

Matrix Matrix::scaled(const Cyclotomic& s) const {
  Matrix out = embed(lcm_conductor(conductor_, s.conductor()));
  for (auto& e : out.data_) {
    if (!e.is_zero()) e = e * s;
  }
  return out;
}

Vector Matrix::apply(std::span<const Cyclotomic> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  Vector out(rows_, Cyclotomic(Rational(0), conductor_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Cyclotomic acc(Rational(0), conductor_);
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = data_[i * cols_ + j];
      if (a.is_zero() || v[j].is_zero()) continue;
      acc += a * v[j];
    }
    out[i] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = data_[i * cols_ + j];
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> row_reduce(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    if (!rows[r][c].is_one()) {
      Cyclotomic inv = rows[r][c].inverse();
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[r][k] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Cyclotomic f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t Matrix::rank() const {
  std::vector<Vector> rows;
  rows.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
  return row_reduce(rows, cols_).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  if (n == 0) return Matrix(0, 0, conductor_);
  std::vector<Vector> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = row(i);
    aug[i].resize(2 * n, Cyclotomic(Rational(0), conductor_));
    aug[i][n + i] = Cyclotomic(Rational(1), conductor_);
  }
  auto pivots = row_reduce(aug, 2 * n);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix out(n, n, conductor_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] = aug[i][n + j];
  return out;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic acc(Rational(0), conductor_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += data_[i * cols_ + i];
  return acc;
}

std::vector<Cyclotomic> Matrix::characteristic_polynomial() const {
  if (rows_ != cols_) throw InputError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  const std::size_t n = rows_;
  std::vector<Cyclotomic> c(n + 1, Cyclotomic(Rational(0), conductor_));
  c[n] = Cyclotomic(Rational(1), conductor_);
  Matrix mk(n, n, conductor_);
  const Matrix id = identity(n, conductor_);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = (*this) * mk + id.scaled(c[n - k + 1]);
    Cyclotomic t = ((*this) * mk).trace();
    c[n - k] = -(t * Cyclotomic(Rational(1, static_cast<std::int64_t>(k))));
  }
  return c;
}

std::size_t Matrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& e : data_) h ^= e.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
  if (a.conductor_ != b.conductor_) {
    const int m = lcm_conductor(a.conductor_, b.conductor_);
    return a.embed(m) * b.embed(m);
  }
  Matrix out(a.rows_, b.cols_, a.conductor_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a.data_[i * a.cols_ + k];
      if (x.is_zero()) continue;
      const bool unit = x.is_one();
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& y = b.data_[k * b.cols_ + j];
        if (y.is_zero()) continue;
        auto& dst = out.data_[i * b.cols_ + j];
        if (unit) {
          dst += y;
        } else {
          dst += x * y;
        }
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum size mismatch");
  const int m = lcm_conductor(a.conductor_, b.conductor_);
  Matrix out = a.embed(m);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i].embed(m);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference size mismatch");
  const int m = lcm_conductor(a.conductor_, b.conductor_);
  Matrix out = a.embed(m);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i].embed(m);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

Cyclotomic dot(std::span<const Cyclotomic> a, std::span<const Cyclotomic> b) {
  if (a.size() != b.size()) throw InputError("dot product size mismatch");
  Cyclotomic acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc += a[i] * b[i];
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace symquot
