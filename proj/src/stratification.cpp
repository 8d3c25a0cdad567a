#include "symquot/stratification.hpp"

#include <algorithm>
#include <numeric>

#include "symquot/error.hpp"

namespace symquot {

namespace {

// Greedy generating set for a subgroup given as an index set.
std::vector<std::size_t> subgroup_generators(const MatrixGroup& g, const IndexSet& members) {
  std::vector<std::size_t> gens;
  IndexSet span{0};
  for (std::size_t h : members) {
    if (std::binary_search(span.begin(), span.end(), h)) continue;
    gens.push_back(h);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

// Restriction of the base elements `gens` to the invariant subspace u of C^n.
Representation restricted_representation(const MatrixGroup& base, const std::vector<std::size_t>& gens,
                                         const Subspace& u, std::size_t expected_order) {
  std::vector<Matrix> restricted;
  const std::size_t m = u.dim();
  for (std::size_t i : gens) {
    Matrix r(m, m, base.conductor());
    for (std::size_t j = 0; j < m; ++j) {
      Vector coords = u.coordinates(base.element(i).apply(u.basis()[j]));
      for (std::size_t k = 0; k < m; ++k) r.set(k, j, coords[k]);
    }
    restricted.push_back(std::move(r));
  }
  return {"slice", MatrixGroup::close(m, std::move(restricted), expected_order, base.conductor())};
}

}  // namespace

std::size_t rank_of(const SymplecticDouble& d, std::span<const Cyclotomic> v) {
  const IndexSet gv = stabilizer(d.doubled, v);
  const Subspace f = fixed_space(d.doubled, gv);
  return (2 * d.n() - f.dim()) / 2;
}

std::vector<StratumRecord> strata_table(const SymplecticDouble& d,
                                        const std::vector<FixedSpaceLatticeEntry>& lattice) {
  std::vector<StratumRecord> out;
  const std::size_t two_n = 2 * d.n();
  for (const auto& e : lattice) {
    StratumRecord r;
    r.fixed = e.subspace;
    r.stabilizer = e.stabilizer;
    r.rank = (two_n - e.subspace.dim()) / 2;
    r.stratum_dim = two_n - 2 * r.rank;
    r.multiplicity = e.orbit_size;
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
  return out;
}

std::vector<StratumRecord> strata_table(const SymplecticDouble& d) {
  return strata_table(d, fixed_space_lattice(d.doubled));
}

MirrorMatch mirror_match(const SymplecticDouble& d, const std::vector<StratumRecord>& strata,
                         const ConjClassPartition& classes, const std::vector<IndexSet>& m) {
  MirrorMatch out;
  out.hypothesis_verified = check_real_structure(d.base);
  out.reflection_classes = m.size();
  const Matrix id = Matrix::identity(d.n(), d.base.group.conductor());
  std::vector<std::size_t> class_to_m(classes.classes.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) class_to_m[classes.class_of[m[i].front()]] = i;

  std::vector<std::size_t> hits(m.size(), 0);
  bool all_ok = true;
  for (std::size_t s = 0; s < strata.size(); ++s) {
    if (strata[s].rank != 1) continue;
    ++out.rank_one_classes;
    MirrorPair p;
    p.stratum = s;
    p.stabilizer_order = strata[s].stabilizer.size();
    if (p.stabilizer_order == 2) {
      const std::size_t h = strata[s].stabilizer[1];
      p.generator_is_reflection = (d.base.group.element(h) - id).rank() == 1;
      std::size_t mi = class_to_m[classes.class_of[h]];
      if (mi < m.size()) {
        p.reflection_class = mi;
        ++hits[mi];
      }
    } else {
      out.findings.push_back("rank-1 stratum " + std::to_string(s) + " has stabilizer of order " +
                             std::to_string(p.stabilizer_order));
    }
    if (!p.generator_is_reflection || !p.reflection_class) all_ok = false;
    out.pairs.push_back(p);
  }
  out.bijective = all_ok && out.rank_one_classes == m.size() &&
                  std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  if (!out.bijective) {
    out.findings.push_back(std::to_string(out.rank_one_classes) + " rank-1 classes vs " +
                           std::to_string(m.size()) + " reflection classes");
  }
  return out;
}

MirrorMatch mirror_match(const SymplecticDouble& d) {
  const auto classes = conjugacy_classes(d.base.group);
  return mirror_match(d, strata_table(d), classes, reflection_classes(d.base, classes));
}

Vector generic_point(const MatrixGroup& group, const Subspace& f, const IndexSet& h) {
  const int cond = group.conductor();
  for (std::int64_t t = 2; t < 2 + 64; ++t) {
    Vector v(f.ambient_dim(), Cyclotomic(Rational(0), cond));
    Rational coeff(1);
    for (const auto& b : f.basis()) {
      coeff *= Rational(t);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!b[k].is_zero()) v[k] += b[k] * Cyclotomic(coeff, cond);
      }
    }
    if (stabilizer(group, v) == h) return v;
  }
  throw ConsistencyError("no generic point found for a lattice subspace");
}

SliceModel slice(const SymplecticDouble& d, std::span<const Cyclotomic> v) {
  const MatrixGroup& g = d.doubled;
  const std::size_t two_n = 2 * d.n();
  const int cond = g.conductor();
  SliceModel s;
  s.point.assign(v.begin(), v.end());
  s.stabilizer = stabilizer(g, v);

  std::vector<Matrix> members;
  for (std::size_t i : s.stabilizer) members.push_back(g.element(i));
  const Matrix p = averaging_projector(members);
  const Matrix id = Matrix::identity(two_n, cond);
  s.complement = kernel(p);
  s.invariant = kernel(p - id);
  s.lagrangian_part = intersect(d.lagrangian, s.complement);
  s.dual_part = intersect(d.dual_block(), s.complement);

  if (s.stabilizer.size() == g.order()) s.notices.push_back("degenerate slice: G_v = G reproduces the input");
  if (s.stabilizer.size() == 1) s.notices.push_back("degenerate slice: G_v is trivial and V' = 0");

  s.direct_sum = s.complement.dim() + s.invariant.dim() == two_n &&
                 (s.complement + s.invariant).dim() == two_n;
  s.invariant_complement = std::all_of(members.begin(), members.end(), [&](const Matrix& h) {
    return s.complement.contains(s.complement.image(h));
  });
  const std::size_t m = s.complement.dim();
  if (m == 0) {
    s.nondegenerate = true;
  } else {
    Matrix gram(m, m, cond);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) gram.set(i, j, d.pairing(s.complement.basis()[i], s.complement.basis()[j]));
    s.nondegenerate = gram.rank() == m;
  }
  s.splits = s.lagrangian_part.dim() == s.dual_part.dim() &&
             s.lagrangian_part.dim() + s.dual_part.dim() == m &&
             (s.lagrangian_part + s.dual_part).dim() == m;

  if (s.lagrangian_part.dim() > 0) {
    // V_o' as a subspace of the base space C^n
    std::vector<Vector> base_vectors;
    for (const auto& b : s.lagrangian_part.basis()) base_vectors.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(d.n()));
    const Subspace u = Subspace::span(d.n(), base_vectors, cond);
    const auto gens = subgroup_generators(g, s.stabilizer);
    Representation rep = restricted_representation(d.base.group, gens, u, s.stabilizer.size());
    if (rep.group.order() != s.stabilizer.size()) {
      throw ConsistencyError("stabilizer does not act faithfully on its slice");
    }
    rep.name = d.base.name + " slice";
    s.induced = make_double(rep);
  }
  return s;
}

std::vector<std::int64_t> el_descriptor(std::size_t reflection_class_count, const ClassVector& exponents) {
  if (exponents.exponents.size() != reflection_class_count) {
    throw InputError("class vector must have exactly one exponent per reflection class");
  }
  std::vector<std::int64_t> out;
  std::int64_t g = 0;
  for (std::size_t i = 0; i < reflection_class_count; ++i) {
    auto it = exponents.exponents.find(i);
    if (it == exponents.exponents.end()) throw InputError("class vector is missing class " + std::to_string(i));
    if (it->second <= 0 || it->second % 2 != 0) {
      throw InputError("exponent " + std::to_string(it->second) + " is not a positive even integer");
    }
    out.push_back(it->second);
    g = std::gcd(g, it->second);
  }
  for (auto& e : out) e /= g;
  return out;
}

std::vector<std::int64_t> el_descriptor(const SymplecticDouble& d, const ClassVector& exponents) {
  return el_descriptor(reflection_classes(d.base).size(), exponents);
}

}  // namespace symquot
