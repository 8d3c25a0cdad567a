#include "symquot/reflection.hpp"

#include "symquot/error.hpp"

namespace symquot {

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Unknown:
      return "unknown";
  }
  return "unknown";
}

IndexSet find_reflections(const Representation& rep) {
  const auto& g = rep.group;
  const std::size_t n = g.dim();
  const Matrix id = Matrix::identity(n, g.conductor());
  IndexSet out;
  for (std::size_t i = 1; i < g.order(); ++i) {
    if ((g.element(i) - id).rank() == 1) out.push_back(i);
  }
  return out;
}

std::vector<IndexSet> reflection_classes(const Representation& rep, const ConjClassPartition& classes) {
  const IndexSet refl = find_reflections(rep);
  std::vector<bool> is_refl(rep.group.order(), false);
  for (auto i : refl) is_refl[i] = true;
  std::vector<IndexSet> out;
  for (const auto& c : classes.classes) {
    std::size_t hits = 0;
    for (auto i : c) hits += is_refl[i] ? 1 : 0;
    if (hits == 0) continue;
    if (hits != c.size()) throw ConsistencyError("conjugacy class mixes reflections and non-reflections");
    out.push_back(c);
  }
  return out;
}

std::vector<IndexSet> reflection_classes(const Representation& rep) {
  return reflection_classes(rep, conjugacy_classes(rep.group));
}

bool is_reflection_generated(const Representation& rep) {
  const IndexSet refl = find_reflections(rep);
  return generated_subgroup(rep.group, refl).size() == rep.group.order();
}

ReflectionReport reflection_report(const Representation& rep, const ConjClassPartition& classes) {
  ReflectionReport r;
  r.reflections = find_reflections(rep);
  r.classes = reflection_classes(rep, classes);
  r.reflection_generated = generated_subgroup(rep.group, r.reflections).size() == rep.group.order();
  r.all_order_two = true;
  for (const auto& c : r.classes) {
    r.class_orders.push_back(rep.group.element_order(c.front()));
    if (r.class_orders.back() != 2) r.all_order_two = false;
  }
  r.real_structure = check_real_structure(rep);
  r.predicted_picard_rank = r.classes.size();
  if (!r.reflection_generated || r.classes.size() != 1) {
    r.uniqueness = Tristate::False;
  } else {
    r.uniqueness = r.real_structure ? Tristate::True : Tristate::Unknown;
  }
  return r;
}

MolienSeries molien(const Representation& rep, const ConjClassPartition& classes, std::size_t n_terms) {
  const auto& g = rep.group;
  const std::size_t n = g.dim();
  const int cond = g.conductor();
  std::vector<Cyclotomic> total(n_terms + 1, Cyclotomic(Rational(0), cond));
  for (const auto& c : classes.classes) {
    // det(1 - t g) = t^n p(1/t), so its t^j coefficient is p_{n-j}
    const auto p = g.element(c.front()).characteristic_polynomial();
    std::vector<Cyclotomic> q(n + 1);
    for (std::size_t j = 0; j <= n; ++j) q[j] = p[n - j];
    std::vector<Cyclotomic> s(n_terms + 1, Cyclotomic(Rational(0), cond));
    s[0] = Cyclotomic(Rational(1), cond);
    for (std::size_t k = 1; k <= n_terms; ++k) {
      Cyclotomic acc(Rational(0), cond);
      for (std::size_t j = 1; j <= std::min(k, n); ++j) {
        if (!q[j].is_zero()) acc -= q[j] * s[k - j];
      }
      s[k] = acc;
    }
    const Cyclotomic weight(Rational(static_cast<std::int64_t>(c.size())), cond);
    for (std::size_t k = 0; k <= n_terms; ++k) total[k] += weight * s[k];
  }
  MolienSeries out;
  const Rational inv_order(1, static_cast<std::int64_t>(g.order()));
  for (std::size_t k = 0; k <= n_terms; ++k) {
    auto value = total[k].rational_value();
    if (!value) throw ConsistencyError("Molien coefficient is not rational");
    Rational c = *value * inv_order;
    if (!c.is_integer() || c.sign() < 0) {
      throw ConsistencyError("Molien coefficient " + c.to_string() + " is not a nonnegative integer");
    }
    out.coefficients.push_back(c);
  }
  return out;
}

MolienSeries molien(const Representation& rep, std::size_t n_terms) {
  return molien(rep, conjugacy_classes(rep.group), n_terms);
}

namespace {

enum class Factoring { Complete, Short, Failed };

// Repeatedly strips 1/(1 - t^d) for the smallest d with a nonzero defect.
Factoring greedy_factor(const MolienSeries& series, std::size_t rank, std::vector<std::size_t>& degrees) {
  std::vector<Rational> s = series.coefficients;
  degrees.clear();
  if (s.empty() || !s[0].is_one()) return Factoring::Failed;
  for (;;) {
    std::size_t d = 1;
    while (d < s.size() && s[d].is_zero()) ++d;
    if (d == s.size()) break;
    if (s[d].sign() < 0 || degrees.size() == rank) return Factoring::Failed;
    degrees.push_back(d);
    for (std::size_t k = s.size(); k-- > d;) s[k] -= s[k - d];
  }
  return degrees.size() == rank ? Factoring::Complete : Factoring::Short;
}

}  // namespace

std::optional<std::vector<std::size_t>> factor_series(const MolienSeries& series, std::size_t rank) {
  std::vector<std::size_t> degrees;
  if (greedy_factor(series, rank, degrees) != Factoring::Complete) return std::nullopt;
  return degrees;
}

std::optional<InvariantDegrees> invariant_degrees(const Representation& rep, std::size_t n_terms) {
  const auto classes = conjugacy_classes(rep.group);
  const std::size_t reflections = find_reflections(rep).size();
  std::size_t terms = std::max<std::size_t>(n_terms, 1);
  for (int attempt = 0; attempt < 4; ++attempt, terms *= 2) {
    std::vector<std::size_t> degrees;
    const auto status = greedy_factor(molien(rep, classes, terms), rep.dim(), degrees);
    if (status == Factoring::Short) continue;
    if (status == Factoring::Failed) return std::nullopt;
    InvariantDegrees out;
    out.degrees = degrees;
    out.truncation = terms;
    std::size_t product = 1;
    std::size_t exponent_sum = 0;
    for (auto d : out.degrees) {
      product *= d;
      exponent_sum += d - 1;
    }
    out.product_matches = product == rep.group.order();
    out.reflection_count_matches = exponent_sum == reflections;
    return out;
  }
  return std::nullopt;
}

SmoothnessVerdict smoothness_verdict(const Representation& rep, std::size_t n_terms) {
  SmoothnessVerdict v;
  v.smooth = is_reflection_generated(rep);
  if (!v.smooth) return v;
  v.degrees = invariant_degrees(rep, n_terms);
  if (!v.degrees) {
    v.findings.push_back("invariant degrees not determined from the Molien series");
    return v;
  }
  if (!v.degrees->product_matches) {
    v.consistent = false;
    v.findings.push_back("product of invariant degrees differs from the group order");
  }
  if (!v.degrees->reflection_count_matches) {
    v.consistent = false;
    v.findings.push_back("sum of (degree - 1) differs from the number of reflections");
  }
  return v;
}

}  // namespace symquot
