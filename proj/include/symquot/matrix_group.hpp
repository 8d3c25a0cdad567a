#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "symquot/matrix.hpp"
#include "symquot/subspace.hpp"

namespace symquot {

/// Sorted list of element indices into a MatrixGroup.
using IndexSet = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultMaxOrder = 10000;

/// A finite group of invertible matrices, fully enumerated.
///
/// Element 0 is the identity. The remaining elements appear in breadth-first
/// discovery order, multiplying each known element on the right by the
/// generators in input order, so the ordering is a pure function of the
/// generator list. All elements are stored at the group conductor.
class MatrixGroup {
 public:
  /// Throws OrderExceededError past `max_order` elements and InputError for
  /// singular, non-square or mis-sized generators.
  static MatrixGroup close(std::size_t dim, std::vector<Matrix> generators,
                           std::size_t max_order = kDefaultMaxOrder, int conductor = 1);

  std::size_t dim() const { return dim_; }
  int conductor() const { return conductor_; }
  std::size_t order() const { return elements_.size(); }

  const Matrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  /// Element index of each generator, in generator order.
  const std::vector<std::size_t>& generator_indices() const { return generator_indices_; }

  std::optional<std::size_t> index_of(const Matrix& m) const;
  /// Index of element(a) * element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }
  std::size_t element_order(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  int conductor_ = 1;
  std::vector<Matrix> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<Matrix> elements_;
  std::vector<std::size_t> inverses_;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index_;
};

/// Partition of a group into conjugacy classes. Classes are ordered by their
/// smallest element index, which is also the class representative.
struct ConjClassPartition {
  std::vector<IndexSet> classes;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t representative(std::size_t c) const { return classes[c].front(); }
};

ConjClassPartition conjugacy_classes(const MatrixGroup& g);

/// {i : g_i v = v}
IndexSet stabilizer(const MatrixGroup& g, std::span<const Cyclotomic> v);

/// Smallest subgroup containing `subset`, as a sorted index set.
IndexSet generated_subgroup(const MatrixGroup& g, std::span<const std::size_t> subset);

/// {i : g_i fixes every vector of f}
IndexSet pointwise_stabilizer(const MatrixGroup& g, const Subspace& f);

/// Common fixed space of the listed elements.
Subspace fixed_space(const MatrixGroup& g, std::span<const std::size_t> subset);

/// One G-orbit of closed pairs (F, H(F)) from the fixed-space lattice.
struct FixedSpaceLatticeEntry {
  Subspace subspace;        // F
  IndexSet stabilizer;      // H(F), the pointwise stabilizer
  std::size_t orbit_size = 1;
  bool orbit_representative = true;
};

/// Closure of {V^g} under intersection, reduced to closed subspaces
/// (V^{H(F)} == F) and to one representative per G-orbit. The
/// representative of an orbit is its least member in canonical subspace
/// order, and entries are sorted the same way (largest dimension first).
std::vector<FixedSpaceLatticeEntry> fixed_space_lattice(const MatrixGroup& g);

}  // namespace symquot
