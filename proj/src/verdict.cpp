#include "symquot/analysis.hpp"

namespace symquot {

CrepantVerdict crepant_necessary_verdict(const SymplecticDouble& d, const ReflectionReport& r,
                                         const std::vector<StratumRecord>& strata,
                                         const std::vector<bool>& slice_generated) {
  CrepantVerdict v;
  v.hypotheses.symplectic = check_symplectic(d.doubled, d.omega);
  v.hypotheses.lagrangian = is_isotropic(d.omega, d.lagrangian) && d.lagrangian.dim() == d.n();
  for (const auto& g : d.doubled.generators()) {
    if (!d.lagrangian.contains(d.lagrangian.image(g))) v.hypotheses.lagrangian = false;
  }
  v.hypotheses.real_structure = r.real_structure;
  v.necessary_condition = r.reflection_generated;
  v.uniqueness = r.uniqueness;
  if (!v.necessary_condition) {
    v.notes.push_back("not generated by reflections: no smooth projective crepant resolution exists");
  } else {
    v.notes.push_back("reflection generation is necessary, not known to be sufficient");
  }
  if (v.uniqueness == Tristate::Unknown) {
    v.notes.push_back("uniqueness unknown: real structure not verified in the given basis");
  }
  v.slice_consistency = true;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (!slice_generated[i]) {
      v.slice_consistency = false;
      v.notes.push_back("slice at rank " + std::to_string(strata[i].rank) + " is not reflection generated");
    }
  }
  return v;
}

CrepantVerdict crepant_necessary_verdict(const SymplecticDouble& d) {
  const ReflectionReport r = reflection_report(d.base, conjugacy_classes(d.base.group));
  const auto strata = strata_table(d);
  std::vector<bool> generated;
  for (const auto& s : strata) {
    const SliceModel m = slice(d, generic_point(d.doubled, s.fixed, s.stabilizer));
    generated.push_back(!m.induced || is_reflection_generated(m.induced->base));
  }
  return crepant_necessary_verdict(d, r, strata, generated);
}

}  // namespace symquot
