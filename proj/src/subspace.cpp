#include "symquot/subspace.hpp"

#include "symquot/error.hpp"

namespace symquot {

Subspace::Subspace(std::size_t ambient_dim, int conductor)
    : ambient_(ambient_dim), conductor_(conductor) {}

Subspace Subspace::span(std::size_t ambient_dim, std::vector<Vector> vectors, int conductor) {
  Subspace s(ambient_dim, conductor);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("vector does not match ambient dimension");
    for (const auto& e : v) s.conductor_ = lcm_conductor(s.conductor_, e.conductor());
  }
  for (auto& v : vectors) {
    for (auto& e : v) e = e.embed(s.conductor_);
  }
  s.pivots_ = row_reduce(vectors, ambient_dim);
  s.basis_ = std::move(vectors);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, int conductor) {
  return coordinate(ambient_dim, 0, ambient_dim, conductor);
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count,
                              int conductor) {
  if (first + count > ambient_dim) throw InputError("coordinate block out of range");
  Subspace s(ambient_dim, conductor);
  for (std::size_t i = 0; i < count; ++i) {
    Vector v(ambient_dim, Cyclotomic(Rational(0), conductor));
    v[first + i] = Cyclotomic(Rational(1), conductor);
    s.basis_.push_back(std::move(v));
    s.pivots_.push_back(first + i);
  }
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_, conductor_); }

bool Subspace::contains(std::span<const Cyclotomic> v) const {
  if (v.size() != ambient_) throw InputError("vector does not match ambient dimension");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Cyclotomic f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (!basis_[i][k].is_zero()) r[k] -= f * basis_[i][k];
    }
  }
  for (const auto& e : r) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  if (other.dim() > dim()) return false;
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Cyclotomic> v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector out;
  out.reserve(basis_.size());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw InputError("map does not match ambient dimension");
  std::vector<Vector> imgs;
  imgs.reserve(basis_.size());
  for (const auto& b : basis_) imgs.push_back(m.apply(b));
  return span(m.rows(), std::move(imgs), lcm_conductor(conductor_, m.conductor()));
}

Subspace Subspace::fixed_by(const Matrix& m) const {
  if (!m.is_square() || m.cols() != ambient_) throw InputError("map does not match ambient dimension");
  if (basis_.empty()) return *this;
  // columns (m - 1) b_i; kernel gives the combination coefficients
  const int cond = lcm_conductor(conductor_, m.conductor());
  std::vector<Vector> diffs;
  diffs.reserve(basis_.size());
  for (const auto& b : basis_) {
    Vector mb = m.apply(b);
    for (std::size_t k = 0; k < ambient_; ++k) mb[k] -= b[k];
    diffs.push_back(std::move(mb));
  }
  Matrix cols(ambient_, basis_.size(), cond);
  for (std::size_t j = 0; j < diffs.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) cols.set(i, j, diffs[j][i]);
  Subspace coeffs = kernel(cols);
  std::vector<Vector> out;
  for (const auto& c : coeffs.basis()) {
    Vector x(ambient_, Cyclotomic(Rational(0), cond));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      for (std::size_t k = 0; k < ambient_; ++k) {
        if (!basis_[j][k].is_zero()) x[k] += c[j] * basis_[j][k];
      }
    }
    out.push_back(std::move(x));
  }
  return span(ambient_, std::move(out), cond);
}

bool Subspace::pointwise_fixed_by(const Matrix& m) const {
  for (const auto& b : basis_) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Cyclotomic acc;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& a = m(i, j);
        if (a.is_zero() || b[j].is_zero()) continue;
        acc += a * b[j];
      }
      if (!(acc == b[i])) return false;
    }
  }
  return true;
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient_ * 131 + basis_.size();
  for (const auto& v : basis_)
    for (const auto& e : v) h ^= e.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw InputError("intersecting subspaces of different ambient spaces");
  const int cond = lcm_conductor(a.conductor_, b.conductor_);
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_, cond);
  if (b.contains(a)) return a;
  if (a.contains(b)) return b;
  const std::size_t n = a.ambient_;
  const std::size_t ka = a.dim();
  Matrix m(n, ka + b.dim(), cond);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, a.basis_[j][i]);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.set(i, ka + j, -b.basis_[j][i]);
  Subspace rel = kernel(m);
  std::vector<Vector> out;
  for (const auto& c : rel.basis()) {
    Vector x(n, Cyclotomic(Rational(0), cond));
    for (std::size_t j = 0; j < ka; ++j) {
      if (c[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!a.basis_[j][k].is_zero()) x[k] += c[j] * a.basis_[j][k];
      }
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(n, std::move(out), cond);
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw InputError("adding subspaces of different ambient spaces");
  std::vector<Vector> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, std::move(all), lcm_conductor(a.conductor_, b.conductor_));
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    for (std::size_t k = 0; k < a.ambient_; ++k) {
      if (!(a.basis_[i][k] == b.basis_[i][k])) return false;
    }
  return true;
}

std::strong_ordering canonical_order(const Subspace& a, const Subspace& b) {
  if (auto c = b.dim() <=> a.dim(); c != 0) return c;
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  for (std::size_t i = 0; i < a.basis_.size(); ++i)
    for (std::size_t k = 0; k < a.ambient_; ++k) {
      if (auto c = Cyclotomic::compare_repr(a.basis_[i][k], b.basis_[i][k]); c != 0) return c;
    }
  return std::strong_ordering::equal;
}

Subspace kernel(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const auto pivots = row_reduce(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  const int cond = m.conductor();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Cyclotomic(Rational(0), cond));
    v[f] = Cyclotomic(Rational(1), cond);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), std::move(basis), cond);
}

Matrix averaging_projector(std::span<const Matrix> elements) {
  if (elements.empty()) throw InputError("averaging over an empty set");
  Matrix sum = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) sum = sum + elements[i];
  return sum.scaled(Cyclotomic(Rational(1, static_cast<std::int64_t>(elements.size()))));
}

}  // namespace symquot
