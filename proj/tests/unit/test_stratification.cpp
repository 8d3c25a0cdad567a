#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symquot/catalog.hpp"
#include "symquot/error.hpp"
#include "symquot/stratification.hpp"

using namespace symquot;

namespace {

Vector random_vector(std::mt19937& rng, std::size_t n, int conductor) {
  std::uniform_int_distribution<int> d(-9, 9);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Rational(d(rng)), conductor);
  return v;
}

Vector zero(std::size_t n) { return Vector(n, Cyclotomic(0)); }

// A_2 written in a basis where the generators have non-real entries.
Representation twisted_a2() {
  const auto a2 = catalog("weyl:A2");
  const Matrix p(2, 2, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic::zeta(3, 1)}, 3);
  const Matrix p_inv = *p.inverse();
  std::vector<Matrix> gens;
  for (const auto& g : a2.group.generators()) gens.push_back(p * g * p_inv);
  return {"twisted", MatrixGroup::close(2, gens, kDefaultMaxOrder, 3)};
}

const char* const kGroups[] = {"cyclic:2", "cyclic:3", "neg2d", "symmetric:3", "weyl:A2",
                               "weyl:B2",  "weyl:G2",  "weyl:A3", "weyl:B3"};

}  // namespace

TEST_CASE("rank_of examples") {
  std::mt19937 rng(1);
  const auto a2 = make_double(catalog("weyl:A2"));
  CHECK(rank_of(a2, random_vector(rng, 4, 1)) == 0);
  CHECK(rank_of(a2, zero(4)) == 2);
  const auto pm = make_double(catalog("cyclic:2"));
  CHECK(rank_of(pm, zero(2)) == 1);
}

TEST_CASE("rank is G-invariant") {
  std::mt19937 rng(8);
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    const auto lat = fixed_space_lattice(d.doubled);
    std::uniform_int_distribution<std::size_t> pick(0, d.doubled.order() - 1);
    std::uniform_int_distribution<std::size_t> entry(0, lat.size() - 1);
    for (int t = 0; t < 30; ++t) {
      const Subspace& f = lat[entry(rng)].subspace;
      Vector v = zero(2 * d.n());
      for (auto& x : v) x = x.embed(d.doubled.conductor());
      for (const auto& b : f.basis()) {
        const Cyclotomic c(std::uniform_int_distribution<int>(-5, 5)(rng));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
      }
      CHECK(rank_of(d, d.doubled.element(pick(rng)).apply(v)) == rank_of(d, v));
    }
  }
}

TEST_CASE("strata_table examples") {
  const auto pm = strata_table(make_double(catalog("cyclic:2")));
  REQUIRE(pm.size() == 2);
  CHECK((pm[0].rank == 0 && pm[0].stratum_dim == 2));
  CHECK((pm[1].rank == 1 && pm[1].stratum_dim == 0));

  const auto a2 = strata_table(make_double(catalog("weyl:A2")));
  REQUIRE(a2.size() == 3);
  CHECK((a2[0].rank == 0 && a2[0].stratum_dim == 4));
  CHECK((a2[1].rank == 1 && a2[1].stratum_dim == 2 && a2[1].multiplicity == 3));
  CHECK((a2[2].rank == 2 && a2[2].stratum_dim == 0));

  const auto t = strata_table(make_double(Representation{"trivial", MatrixGroup::close(3, {})}));
  REQUIRE(t.size() == 1);
  CHECK((t[0].rank == 0 && t[0].stratum_dim == 6));
}

TEST_CASE("strata satisfy the dimension formula") {
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    const auto table = strata_table(d);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& s = table[i];
      CHECK(s.fixed.dim() % 2 == 0);
      CHECK(s.stratum_dim == 2 * d.n() - 2 * s.rank);
      CHECK(s.stratum_dim == s.fixed.dim());
      CHECK(pointwise_stabilizer(d.doubled, s.fixed) == s.stabilizer);
      if (i > 0) CHECK(table[i - 1].rank <= s.rank);
    }
  }
}

TEST_CASE("mirror matching") {
  const auto pm = mirror_match(make_double(catalog("cyclic:2")));
  CHECK(pm.bijective);
  CHECK(pm.rank_one_classes == 1);
  const auto a2 = mirror_match(make_double(catalog("weyl:A2")));
  CHECK((a2.bijective && a2.rank_one_classes == 1 && a2.reflection_classes == 1));
  const auto b2 = mirror_match(make_double(catalog("weyl:B2")));
  CHECK((b2.bijective && b2.rank_one_classes == 2 && b2.reflection_classes == 2));
  REQUIRE(b2.pairs.size() == 2);
  CHECK(b2.pairs[0].reflection_class != b2.pairs[1].reflection_class);
  for (const auto& p : b2.pairs) CHECK(p.stabilizer_order == 2);

  const auto c3 = mirror_match(make_double(catalog("cyclic:3")));
  CHECK_FALSE(c3.hypothesis_verified);
  CHECK_FALSE(c3.bijective);
  CHECK(c3.pairs.at(0).stabilizer_order == 3);
}

TEST_CASE("generic points realize their stabilizers") {
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    for (const auto& s : strata_table(d)) {
      const Vector v = generic_point(d.doubled, s.fixed, s.stabilizer);
      CHECK(s.fixed.contains(v));
      CHECK(stabilizer(d.doubled, v) == s.stabilizer);
    }
  }
}

TEST_CASE("slice examples") {
  const auto a2 = make_double(catalog("weyl:A2"));
  const auto origin = slice(a2, zero(4));
  CHECK(origin.stabilizer.size() == 6);
  CHECK(origin.complement.dim() == 4);
  CHECK(origin.well_formed());
  REQUIRE(origin.induced);
  CHECK(origin.induced->base.group.order() == 6);
  CHECK_FALSE(origin.notices.empty());

  const auto table = strata_table(a2);
  const auto mirror = slice(a2, generic_point(a2.doubled, table[1].fixed, table[1].stabilizer));
  CHECK(mirror.stabilizer.size() == 2);
  CHECK(mirror.complement.dim() == 2);
  CHECK(mirror.well_formed());
  REQUIRE(mirror.induced);
  CHECK(mirror.induced->n() == 1);
  CHECK(mirror.induced->base.group.order() == 2);
  CHECK(mirror.induced->base.group.element(1) == Matrix(1, 1, {Cyclotomic(-1)}));

  std::mt19937 rng(2);
  const auto generic = slice(a2, random_vector(rng, 4, 1));
  CHECK(generic.stabilizer.size() == 1);
  CHECK(generic.complement.dim() == 0);
  CHECK_FALSE(generic.induced);
  CHECK(generic.well_formed());
}

TEST_CASE("slices at every stratum are well formed") {
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    for (const auto& s : strata_table(d)) {
      const auto m = slice(d, generic_point(d.doubled, s.fixed, s.stabilizer));
      CHECK(m.well_formed());
      CHECK(m.complement.dim() + m.invariant.dim() == 2 * d.n());
      CHECK(m.invariant == s.fixed);
      if (m.induced) CHECK(check_symplectic(m.induced->doubled, m.induced->omega));
    }
  }
}

TEST_CASE("el_descriptor") {
  const auto a2 = make_double(catalog("weyl:A2"));
  CHECK(el_descriptor(a2, ClassVector{{{0, 2}}}) == std::vector<std::int64_t>{1});
  const auto b2 = make_double(catalog("weyl:B2"));
  const auto first = el_descriptor(b2, ClassVector{{{0, 4}, {1, 2}}});
  CHECK(first == std::vector<std::int64_t>{2, 1});
  CHECK(el_descriptor(b2, ClassVector{{{0, 8}, {1, 4}}}) == first);
  CHECK_THROWS_AS(el_descriptor(b2, ClassVector{{{0, 3}, {1, 2}}}), InputError);
  CHECK_THROWS_AS(el_descriptor(b2, ClassVector{{{0, 0}, {1, 2}}}), InputError);
  CHECK_THROWS_AS(el_descriptor(b2, ClassVector{{{0, 2}}}), InputError);
  CHECK_THROWS_AS(el_descriptor(b2, ClassVector{{{0, 2}, {5, 2}}}), InputError);
}

TEST_CASE("uniqueness is unknown without a real basis") {
  const auto rep = twisted_a2();
  CHECK(rep.group.order() == 6);
  CHECK_FALSE(check_real_structure(rep));
  const auto v = crepant_necessary_verdict(make_double(rep));
  CHECK(v.necessary_condition);
  CHECK(v.uniqueness == Tristate::Unknown);
  const auto m = mirror_match(make_double(rep));
  CHECK_FALSE(m.hypothesis_verified);
}
