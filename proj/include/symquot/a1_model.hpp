#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symquot/matrix.hpp"

namespace symquot::a1 {

/// A_d: span of x^(2d-b) y^b, b = 0..2d, inside C[x, y].
struct GradedPiece {
  std::size_t degree = 0;
  std::size_t dim() const { return 2 * degree + 1; }
};

/// E = x d/dy, F = y d/dx, H = x d/dx - y d/dy on A_d in the monomial basis.
struct Sl2Action {
  Matrix e;
  Matrix f;
  Matrix h;
};

Sl2Action sl2_action(std::size_t d);

/// 2d + 1, cross-checked against a direct count of monomials x^a y^b with
/// a + b = 2d. Throws ConsistencyError if the counts disagree.
std::size_t hilbert_dim(std::size_t d);

/// dim of the degree-d part of m^k, from the span of products of k
/// homogeneous elements of positive degree.
std::size_t ideal_power_dims(std::size_t k, std::size_t d);

/// Matrix of multiplication by the monomial x^(2-b) y^b of A_1, A_d -> A_(d+1).
Matrix multiplication_map(std::size_t b, std::size_t d);

/// [H,E] = 2E, [H,F] = -2F, [E,F] = H on every A_d with d <= max_degree.
bool sl2_commutators_check(std::size_t max_degree);

/// dim ker E = 1 on A_d and F-iterates of the highest-weight vector span A_d.
bool is_irreducible_piece(std::size_t d);

/// A graded ideal truncated at degree D, as the set of degrees it contains.
/// power == -1 marks the zero ideal; otherwise the ideal is m^power.
struct GradedIdeal {
  std::vector<bool> degrees;  // degrees[d] = (A_d is contained)
  int power = -1;

  std::string label() const;
  bool operator==(const GradedIdeal&) const = default;
};

/// All sl(2)-invariant graded ideals of A up to degree D, ordered
/// 0, A, m, m^2, ..., m^D. Throws ConsistencyError if an invariant ideal is
/// found that is not a power of the maximal ideal.
std::vector<GradedIdeal> sl2_invariant_ideals(std::size_t max_degree);

}  // namespace symquot::a1
