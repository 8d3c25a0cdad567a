#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symquot/reflection.hpp"
#include "symquot/stratification.hpp"

namespace symquot {

struct AnalysisOptions {
  std::size_t molien_degree = 24;
  bool slice_details = false;  // include per-slice sections in the report
};

struct SliceSummary {
  std::size_t stratum = 0;
  std::size_t stabilizer_order = 0;
  std::size_t complement_dim = 0;
  std::size_t lagrangian_dim = 0;
  bool well_formed = false;
  bool reflection_generated = true;  // vacuous when V' = 0
  std::vector<std::string> notices;
};

struct AnalysisReport {
  std::string name;
  std::size_t dimension = 0;
  int conductor = 1;
  std::size_t order = 0;
  std::size_t class_count = 0;
  ReflectionReport reflections;
  CrepantVerdict verdict;
  std::vector<StratumRecord> strata;
  MirrorMatch mirrors;
  std::vector<AttractionRecord> attraction;
  std::vector<std::size_t> weight_dims;  // dim T^1, dim T^0
  std::vector<SliceSummary> slices;
  MolienSeries molien;
  std::optional<InvariantDegrees> degrees;
  std::vector<std::string> findings;
  double timing_ms = 0;
  AnalysisOptions options;
};

/// Full pipeline: double, hypotheses, reflections, strata, mirrors,
/// attraction, weights, slices, verdict, Molien series and degrees. Throws
/// ConsistencyError naming the failed stage when sections disagree.
AnalysisReport analyze(const Representation& rep, const AnalysisOptions& options = {});

/// Verdict from precomputed pieces; `slice_generated[i]` is the reflection
/// generation of the slice at stratum i.
CrepantVerdict crepant_necessary_verdict(const SymplecticDouble& d, const ReflectionReport& r,
                                         const std::vector<StratumRecord>& strata,
                                         const std::vector<bool>& slice_generated);

/// Report as JSON with "schema": 1. Key order is fixed; only "timing_ms"
/// varies between runs.
nlohmann::ordered_json to_json(const AnalysisReport& report);

std::string to_text(const AnalysisReport& report);

}  // namespace symquot
