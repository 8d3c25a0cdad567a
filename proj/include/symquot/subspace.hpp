#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "symquot/matrix.hpp"

namespace symquot {

/// Linear subspace of an ambient coordinate space.
///
/// Stored as the reduced row echelon form of a basis written as rows, i.e.
/// the reduced column echelon form of the basis matrix. That form is unique,
/// so two subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of `ambient_dim`-space.
  explicit Subspace(std::size_t ambient_dim, int conductor = 1);

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient_dim, std::vector<Vector> vectors, int conductor = 1);
  static Subspace full(std::size_t ambient_dim, int conductor = 1);
  /// Span of the coordinate vectors e_first .. e_{first+count-1}.
  static Subspace coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count,
                             int conductor = 1);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  int conductor() const { return conductor_; }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Basis as a dim x ambient matrix (rows are basis vectors).
  Matrix basis_matrix() const;

  bool contains(std::span<const Cyclotomic> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of `v` in the stored basis; requires contains(v).
  Vector coordinates(std::span<const Cyclotomic> v) const;

  /// Image under a linear map.
  Subspace image(const Matrix& m) const;
  /// {x in this : m x = x}
  Subspace fixed_by(const Matrix& m) const;
  /// True when m fixes every vector of this subspace.
  bool pointwise_fixed_by(const Matrix& m) const;

  std::size_t hash() const;

  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);
  /// Deterministic total order: larger dimension first, then by basis entries.
  friend std::strong_ordering canonical_order(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  int conductor_ = 1;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Exact null space {v : M v = 0}.
Subspace kernel(const Matrix& m);

/// (1/|H|) sum_{h in H} h. Its image is the common fixed space of H and its
/// kernel is the unique H-invariant complement of that space.
Matrix averaging_projector(std::span<const Matrix> elements);

}  // namespace symquot
