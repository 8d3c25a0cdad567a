#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symquot/matrix_group.hpp"
#include "symquot/symplectic_double.hpp"

namespace symquot {

enum class Tristate { False, True, Unknown };

std::string to_string(Tristate t);

/// {g != 1 : dim ker(g - 1) = n - 1}
IndexSet find_reflections(const Representation& rep);

/// The set M: conjugacy classes that consist of reflections, in class order.
std::vector<IndexSet> reflection_classes(const Representation& rep, const ConjClassPartition& classes);
std::vector<IndexSet> reflection_classes(const Representation& rep);

bool is_reflection_generated(const Representation& rep);

struct ReflectionReport {
  IndexSet reflections;
  std::vector<IndexSet> classes;  // M
  std::vector<std::size_t> class_orders;  // element order per class of M
  bool reflection_generated = false;
  bool all_order_two = false;
  bool real_structure = false;
  Tristate uniqueness = Tristate::False;
  std::size_t predicted_picard_rank = 0;  // = |M|
};

ReflectionReport reflection_report(const Representation& rep, const ConjClassPartition& classes);

/// Truncated Hilbert series of the invariant ring, c_0 .. c_N.
struct MolienSeries {
  std::vector<Rational> coefficients;

  std::size_t truncation() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// (1/|G|) sum_g 1/det(1 - t g), expanded exactly through t^N. Throws
/// ConsistencyError if a coefficient is not a nonnegative integer.
MolienSeries molien(const Representation& rep, std::size_t n_terms);
MolienSeries molien(const Representation& rep, const ConjClassPartition& classes, std::size_t n_terms);

/// Greedy factorization of a series as prod 1/(1 - t^d_i) with exactly
/// `rank` factors. Returns nullopt when no such factorization exists within
/// the truncation, or when fewer than `rank` factors are visible (ambiguous).
std::optional<std::vector<std::size_t>> factor_series(const MolienSeries& series, std::size_t rank);

struct InvariantDegrees {
  std::vector<std::size_t> degrees;
  std::size_t truncation = 0;     // series length actually used
  bool product_matches = false;   // prod d_i == |G|
  bool reflection_count_matches = false;  // sum (d_i - 1) == #reflections
};

/// Degrees of the basic invariants, read off the Molien series. Retries with
/// doubled truncation (up to 8x) when the truncation is too short.
std::optional<InvariantDegrees> invariant_degrees(const Representation& rep, std::size_t n_terms);

struct SmoothnessVerdict {
  bool smooth = false;  // reflection generated
  std::optional<InvariantDegrees> degrees;
  std::vector<std::string> findings;
  bool consistent = true;  // false when the degree identities fail
};

SmoothnessVerdict smoothness_verdict(const Representation& rep, std::size_t n_terms = 24);

struct CrepantVerdict {
  struct Hypotheses {
    bool symplectic = false;
    bool lagrangian = false;
    bool real_structure = false;
  } hypotheses;
  bool necessary_condition = false;
  Tristate uniqueness = Tristate::False;
  bool slice_consistency = false;
  std::vector<std::string> notes;
};

/// Hypothesis checks, the reflection-generation necessary condition for a
/// smooth projective crepant resolution, the single-class uniqueness flag,
/// and reflection generation of every stratum slice.
CrepantVerdict crepant_necessary_verdict(const SymplecticDouble& d);

}  // namespace symquot
