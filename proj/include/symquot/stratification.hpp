#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symquot/reflection.hpp"
#include "symquot/symplectic_double.hpp"

namespace symquot {

/// Half the codimension of V^{G_v} in V.
std::size_t rank_of(const SymplecticDouble& d, std::span<const Cyclotomic> v);

/// One G-conjugacy class of pairs (F, H) with F = V^H.
struct StratumRecord {
  std::size_t rank = 0;          // k = (2n - dim F) / 2
  Subspace fixed;                // F
  IndexSet stabilizer;           // H
  std::size_t stratum_dim = 0;   // 2n - 2k
  std::size_t multiplicity = 1;  // number of G-conjugates of (F, H)
};

/// Records sorted by rank, one per lattice orbit.
std::vector<StratumRecord> strata_table(const SymplecticDouble& d);
std::vector<StratumRecord> strata_table(const SymplecticDouble& d,
                                        const std::vector<FixedSpaceLatticeEntry>& lattice);

struct MirrorPair {
  std::size_t stratum = 0;          // index into the strata table
  std::size_t stabilizer_order = 0;
  bool generator_is_reflection = false;
  std::optional<std::size_t> reflection_class;  // index into M
};

struct MirrorMatch {
  bool hypothesis_verified = false;  // real structure holds in-basis
  std::vector<MirrorPair> pairs;
  std::size_t rank_one_classes = 0;
  std::size_t reflection_classes = 0;  // |M|
  bool bijective = false;
  std::vector<std::string> findings;
};

/// Pairs each rank-1 stratum class with the reflection class of the
/// nontrivial element of its order-2 stabilizer.
MirrorMatch mirror_match(const SymplecticDouble& d, const std::vector<StratumRecord>& strata,
                         const ConjClassPartition& classes, const std::vector<IndexSet>& reflection_classes);
MirrorMatch mirror_match(const SymplecticDouble& d);

/// A vector of `f` whose stabilizer is exactly `h`, chosen deterministically
/// on the moment curve sum_i t^i b_i.
Vector generic_point(const MatrixGroup& group, const Subspace& f, const IndexSet& h);

/// Local model at v: the stabilizer acting on the invariant complement V'.
struct SliceModel {
  Vector point;
  IndexSet stabilizer;          // G_v, indices into the doubled group
  Subspace complement;          // V' = ker P
  Subspace invariant;           // V^{G_v} = im P
  Subspace lagrangian_part;     // V_o' = V_o cap V'
  Subspace dual_part;           // V_o* cap V'
  std::optional<SymplecticDouble> induced;  // absent when V' = 0
  bool direct_sum = false;      // V = V' (+) V^{G_v}
  bool invariant_complement = false;
  bool nondegenerate = false;   // Omega restricted to V'
  bool splits = false;          // V' = V_o' (+) (V_o')*
  std::vector<std::string> notices;

  bool well_formed() const { return direct_sum && invariant_complement && nondegenerate && splits; }
};

SliceModel slice(const SymplecticDouble& d, std::span<const Cyclotomic> v);

/// Exponents 2 k_Y keyed by position in M.
struct ClassVector {
  std::map<std::size_t, std::int64_t> exponents;
};

/// Exponent list in M order divided by its gcd; proportional class vectors
/// give equal descriptors. Throws InputError for odd, nonpositive or
/// mis-keyed exponents.
std::vector<std::int64_t> el_descriptor(std::size_t reflection_class_count, const ClassVector& exponents);
std::vector<std::int64_t> el_descriptor(const SymplecticDouble& d, const ClassVector& exponents);

}  // namespace symquot
