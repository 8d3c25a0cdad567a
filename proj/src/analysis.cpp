#include "symquot/analysis.hpp"

#include <chrono>
#include <sstream>

#include "symquot/error.hpp"

namespace symquot {

namespace {

template <class F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(std::string(name) + ": " + e.what());
  }
}

nlohmann::ordered_json rational_json(const Rational& r) {
  std::int64_t v = 0;
  if (r.is_integer() && r.to_int64(v)) return v;
  return r.to_string();
}

const char* stratum_kind(std::size_t rank) { return rank >= 2 ? "orbit class" : "component"; }

}  // namespace

AnalysisReport analyze(const Representation& rep, const AnalysisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport out;
  out.options = options;
  out.name = rep.name;
  out.dimension = rep.dim();
  out.conductor = rep.group.conductor();
  out.order = rep.group.order();

  const SymplecticDouble d = stage("double", [&] { return make_double(rep); });
  const auto classes = conjugacy_classes(rep.group);
  out.class_count = classes.classes.size();

  out.reflections = stage("reflections", [&] { return reflection_report(rep, classes); });
  const bool real = out.reflections.real_structure;

  const auto lattice = fixed_space_lattice(d.doubled);
  out.strata = strata_table(d, lattice);

  out.mirrors = stage("mirrors", [&] { return mirror_match(d, out.strata, classes, out.reflections.classes); });
  if (real && !out.mirrors.bijective) {
    throw ConsistencyError("mirrors: rank-1 strata do not match the reflection classes");
  }

  out.attraction = attraction_stratum_dims(d, lattice);
  for (std::size_t i = 0; i < out.attraction.size(); ++i) {
    const auto& a = out.attraction[i];
    if (!a.matches) {
      out.findings.push_back("attraction: lattice entry " + std::to_string(i) + " has dim(V_o cap F) = " +
                             std::to_string(a.lagrangian_fixed_dim) + ", expected n - k = " +
                             std::to_string(d.n() - a.rank));
    }
  }

  const auto weights = stage("weights", [&] { return cstar_weight_check(d); });
  out.weight_dims = {weights.weights.at(1).dim(), weights.weights.at(0).dim()};

  std::vector<bool> slice_generated;
  for (std::size_t i = 0; i < out.strata.size(); ++i) {
    const auto& s = out.strata[i];
    const SliceModel m = stage("slices", [&] {
      return slice(d, generic_point(d.doubled, s.fixed, s.stabilizer));
    });
    if (!m.well_formed()) throw ConsistencyError("slices: slice at stratum " + std::to_string(i) + " is malformed");
    SliceSummary sum;
    sum.stratum = i;
    sum.stabilizer_order = m.stabilizer.size();
    sum.complement_dim = m.complement.dim();
    sum.lagrangian_dim = m.lagrangian_part.dim();
    sum.well_formed = true;
    sum.reflection_generated = !m.induced || is_reflection_generated(m.induced->base);
    sum.notices = m.notices;
    slice_generated.push_back(sum.reflection_generated);
    out.slices.push_back(std::move(sum));
  }

  out.verdict = stage("verdict", [&] { return crepant_necessary_verdict(d, out.reflections, out.strata, slice_generated); });
  if (!out.verdict.hypotheses.symplectic || !out.verdict.hypotheses.lagrangian) {
    throw ConsistencyError("verdict: the double fails a hypothesis that holds by construction");
  }

  out.molien = stage("molien", [&] { return molien(rep, classes, options.molien_degree); });
  if (out.reflections.reflection_generated) {
    out.degrees = invariant_degrees(rep, options.molien_degree);
    if (!out.degrees) {
      out.findings.push_back("degrees: Molien series does not factor into " + std::to_string(rep.dim()) + " terms");
    } else if (!out.degrees->product_matches || !out.degrees->reflection_count_matches) {
      throw ConsistencyError("degrees: invariant degrees violate the Shephard-Todd identities");
    }
  }

  if (out.reflections.predicted_picard_rank != out.reflections.classes.size()) {
    throw ConsistencyError("report: Picard rank prediction differs from |M|");
  }
  if (real) {
    if (out.mirrors.rank_one_classes != out.reflections.classes.size()) {
      throw ConsistencyError("report: rank-1 classes differ from |M|");
    }
    if (!out.reflections.all_order_two) throw ConsistencyError("report: reflection of order > 2 in a real group");
  }

  out.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using json = nlohmann::ordered_json;
  const bool real = r.reflections.real_structure;
  json j;
  j["schema"] = 1;
  j["group"] = {{"name", r.name},
                {"dimension", r.dimension},
                {"conductor", r.conductor},
                {"order", r.order},
                {"conjugacy_classes", r.class_count}};
  j["hypotheses"] = {{"symplectic", r.verdict.hypotheses.symplectic},
                     {"lagrangian", r.verdict.hypotheses.lagrangian},
                     {"real_structure", real ? "verified" : "not verified"}};

  json classes = json::array();
  for (std::size_t i = 0; i < r.reflections.classes.size(); ++i) {
    classes.push_back({{"size", r.reflections.classes[i].size()},
                       {"element_order", r.reflections.class_orders[i]},
                       {"representative", r.reflections.classes[i].front()}});
  }
  j["reflections"] = {{"count", r.reflections.reflections.size()},
                      {"classes", classes},
                      {"reflection_generated", r.reflections.reflection_generated},
                      {"all_order_two", r.reflections.all_order_two}};

  j["verdict"] = {{"necessary_condition", r.verdict.necessary_condition},
                  {"uniqueness", to_string(r.verdict.uniqueness)},
                  {"slice_consistency", r.verdict.slice_consistency},
                  {"predicted_picard_rank", r.reflections.predicted_picard_rank},
                  {"notes", r.verdict.notes}};

  json strata = json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"rank", s.rank},
                      {"dim", s.stratum_dim},
                      {"stabilizer_order", s.stabilizer.size()},
                      {"multiplicity", s.multiplicity},
                      {"kind", stratum_kind(s.rank)}});
  }
  j["strata"] = strata;

  json pairs = json::array();
  for (const auto& p : r.mirrors.pairs) {
    pairs.push_back({{"stratum", p.stratum},
                     {"stabilizer_order", p.stabilizer_order},
                     {"reflection", p.generator_is_reflection},
                     {"reflection_class", p.reflection_class ? json(*p.reflection_class) : json(nullptr)}});
  }
  j["mirrors"] = {{"status", real ? "verified" : "skipped: hypothesis real_structure unverified"},
                  {"rank_one_classes", r.mirrors.rank_one_classes},
                  {"reflection_classes", r.mirrors.reflection_classes},
                  {"bijective", r.mirrors.bijective},
                  {"pairs", pairs}};

  json attraction = json::array();
  for (const auto& a : r.attraction) {
    attraction.push_back({{"rank", a.rank}, {"lagrangian_fixed_dim", a.lagrangian_fixed_dim}, {"matches", a.matches}});
  }
  j["attraction"] = attraction;
  j["weights"] = {{"T1", r.weight_dims.at(0)}, {"T0", r.weight_dims.at(1)}, {"pairing", "verified"}};

  if (r.options.slice_details) {
    json slices = json::array();
    for (const auto& s : r.slices) {
      slices.push_back({{"stratum", s.stratum},
                        {"stabilizer_order", s.stabilizer_order},
                        {"complement_dim", s.complement_dim},
                        {"lagrangian_dim", s.lagrangian_dim},
                        {"well_formed", s.well_formed},
                        {"reflection_generated", s.reflection_generated},
                        {"notices", s.notices}});
    }
    j["slices"] = slices;
  }

  json series = json::array();
  for (const auto& c : r.molien.coefficients) series.push_back(rational_json(c));
  json degrees = nullptr;
  if (r.degrees) {
    degrees = {{"degrees", r.degrees->degrees},
               {"truncation", r.degrees->truncation},
               {"product_matches_order", r.degrees->product_matches},
               {"reflection_count_matches", r.degrees->reflection_count_matches}};
  }
  j["molien"] = {{"truncation", r.molien.truncation()}, {"coefficients", series}, {"invariant_degrees", degrees}};
  j["findings"] = r.findings;
  j["timing_ms"] = r.timing_ms;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  const bool real = r.reflections.real_structure;
  out << "group " << r.name << ": order " << r.order << ", dimension " << r.dimension << ", conductor "
      << r.conductor << "\n";
  out << "hypotheses: symplectic " << (r.verdict.hypotheses.symplectic ? "yes" : "no") << ", lagrangian "
      << (r.verdict.hypotheses.lagrangian ? "yes" : "no") << ", real structure "
      << (real ? "verified" : "not verified") << "\n";
  out << "reflections: " << r.reflections.reflections.size() << " in " << r.reflections.classes.size()
      << " classes, generated: " << (r.reflections.reflection_generated ? "yes" : "no") << "\n";
  out << "verdict:\n";
  out << "  necessary condition  " << (r.verdict.necessary_condition ? "true" : "false") << "\n";
  out << "  uniqueness           " << to_string(r.verdict.uniqueness) << "\n";
  out << "  slice consistency    " << (r.verdict.slice_consistency ? "true" : "false") << "\n";
  out << "  Picard rank          " << r.reflections.predicted_picard_rank << "\n";
  for (const auto& n : r.verdict.notes) out << "  note: " << n << "\n";
  out << "strata:\n";
  for (const auto& s : r.strata) {
    out << "  k=" << s.rank << "  dim " << s.stratum_dim << "  |H|=" << s.stabilizer.size() << "  "
        << s.multiplicity << " conjugates  (" << stratum_kind(s.rank) << ")\n";
  }
  out << "mirrors: " << (real ? "" : "[hypothesis unverified] ") << r.mirrors.rank_one_classes
      << " rank-1 classes, " << r.mirrors.reflection_classes << " reflection classes, bijective "
      << (r.mirrors.bijective ? "yes" : "no") << "\n";
  out << "weights: dim T1 = " << r.weight_dims.at(0) << ", dim T0 = " << r.weight_dims.at(1) << "\n";
  if (r.options.slice_details) {
    out << "slices:\n";
    for (const auto& s : r.slices) {
      out << "  stratum " << s.stratum << ": |G_v|=" << s.stabilizer_order << "  dim V'=" << s.complement_dim
          << "  reflection generated " << (s.reflection_generated ? "yes" : "no") << "\n";
      for (const auto& n : s.notices) out << "    " << n << "\n";
    }
  }
  out << "molien:";
  for (const auto& c : r.molien.coefficients) out << " " << c.to_string();
  out << "\n";
  if (r.degrees) {
    out << "invariant degrees:";
    for (auto d : r.degrees->degrees) out << " " << d;
    out << "\n";
  }
  for (const auto& f : r.findings) out << "finding: " << f << "\n";
  return out.str();
}

}  // namespace symquot
