#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symquot/matrix_group.hpp"

namespace symquot {

/// A finite group acting on V_o = C^n.
struct Representation {
  std::string name;
  MatrixGroup group;

  std::size_t dim() const { return group.dim(); }
};

/// V = V_o (+) V_o* with G acting by g (+) (g^T)^-1 and the standard form
/// Omega = [[0, I], [-I, 0]]. Element i of `doubled` is the double of
/// element i of `base.group`.
struct SymplecticDouble {
  Representation base;
  MatrixGroup doubled;
  Matrix omega;
  Subspace lagrangian;  // V_o, the first n coordinates

  std::size_t n() const { return base.dim(); }
  /// V_o*, the last n coordinates.
  Subspace dual_block() const;
  /// Omega(x, y) = x^T Omega y
  Cyclotomic pairing(std::span<const Cyclotomic> x, std::span<const Cyclotomic> y) const;
};

Matrix standard_symplectic_form(std::size_t n, int conductor = 1);

/// Throws ConsistencyError if the doubled enumeration does not mirror the base.
SymplecticDouble make_double(const Representation& rep);

/// g^T Omega g == Omega for every element.
bool check_symplectic(const MatrixGroup& group, const Matrix& omega);

/// Omega is identically zero on `s`.
bool is_isotropic(const Matrix& omega, const Subspace& s);

/// Every generator entry is fixed by complex conjugation, i.e. the
/// representation is real in the given basis. A false result means "not
/// verified", not "no invariant real form exists".
bool check_real_structure(const Representation& rep);

/// Weight spaces T^p of the standard C* action (lambda on V_o, 1 on V_o*).
struct WeightDecomposition {
  std::map<int, Subspace> weights;
};

/// Computes the weight spaces as eigenspaces of the action matrix, checks
/// that Omega has weight one and that Omega(T^p, T^q) = 0 unless p + q = 1,
/// with T^p and T^{1-p} perfectly paired. Throws ConsistencyError otherwise.
WeightDecomposition cstar_weight_check(const SymplecticDouble& d);

struct AttractionRecord {
  std::size_t rank = 0;          // k
  std::size_t fixed_dim = 0;     // dim F
  std::size_t lagrangian_fixed_dim = 0;  // dim (V_o cap F)
  bool matches = false;          // lagrangian_fixed_dim == n - k
};

/// Per lattice entry (F, H): k = (2n - dim F) / 2 and dim(V_o cap F), with
/// the count n - k checked. Mismatches are reported, not thrown.
std::vector<AttractionRecord> attraction_stratum_dims(const SymplecticDouble& d,
                                                      const std::vector<FixedSpaceLatticeEntry>& lattice);

}  // namespace symquot
