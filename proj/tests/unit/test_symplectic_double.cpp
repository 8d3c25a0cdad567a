#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symquot/catalog.hpp"
#include "symquot/error.hpp"
#include "symquot/symplectic_double.hpp"

using namespace symquot;

namespace {

const char* const kGroups[] = {"cyclic:2", "cyclic:3", "cyclic:4", "neg2d", "symmetric:3",
                               "weyl:A2",  "weyl:B2",  "weyl:G2",  "weyl:A3", "weyl:B3"};

}  // namespace

TEST_CASE("double of {+1, -1}") {
  const auto d = make_double(catalog("cyclic:2"));
  CHECK(d.doubled.order() == 2);
  CHECK(d.doubled.element(1) == Matrix::identity(2).scaled(Cyclotomic(-1)));
  CHECK(d.omega == Matrix(2, 2, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1), Cyclotomic(0)}));
  CHECK(d.pairing(Vector{Cyclotomic(1), Cyclotomic(0)}, Vector{Cyclotomic(0), Cyclotomic(1)}) == Cyclotomic(1));
}

TEST_CASE("double of trivial and S3 groups") {
  const auto t = make_double(Representation{"trivial", MatrixGroup::close(3, {})});
  CHECK(t.doubled.order() == 1);
  CHECK(t.doubled.dim() == 6);

  const auto d = make_double(catalog("weyl:A2"));
  CHECK(d.doubled.order() == 6);
  for (const auto& g : d.doubled.elements()) CHECK(g.transpose() * d.omega * g == d.omega);
}

TEST_CASE("doubles mirror the base enumeration") {
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    for (std::size_t i = 0; i < d.doubled.order(); ++i) {
      const Matrix& big = d.doubled.element(i);
      const Matrix& g = d.base.group.element(i);
      const Matrix inv_t = d.base.group.element(d.base.group.inverse(i)).transpose();
      for (std::size_t r = 0; r < d.n(); ++r)
        for (std::size_t c = 0; c < d.n(); ++c) {
          CHECK(big(r, c) == g(r, c));
          CHECK(big(d.n() + r, d.n() + c) == inv_t(r, c));
          CHECK(big(r, d.n() + c).is_zero());
        }
    }
  }
}

TEST_CASE("check_symplectic") {
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    CHECK(check_symplectic(d.doubled, d.omega));
    CHECK(is_isotropic(d.omega, d.lagrangian));
    CHECK(d.lagrangian.dim() == d.n());
    CHECK(is_isotropic(d.omega, d.dual_block()));
  }
  Matrix flip = Matrix::identity(2);
  flip.set(0, 0, Cyclotomic(-1));
  CHECK_FALSE(check_symplectic(MatrixGroup::close(2, {flip}), standard_symplectic_form(1)));
  CHECK(check_symplectic(MatrixGroup::close(2, {}), standard_symplectic_form(1)));
}

TEST_CASE("check_real_structure") {
  CHECK(check_real_structure(catalog("symmetric:4")));
  CHECK(check_real_structure(catalog("cyclic:2")));
  CHECK_FALSE(check_real_structure(catalog("cyclic:3")));
  CHECK_FALSE(check_real_structure(catalog("cyclic:4")));
}

TEST_CASE("weight spaces and pairing") {
  const auto one = cstar_weight_check(make_double(catalog("cyclic:2")));
  CHECK(one.weights.at(1).dim() == 1);
  CHECK(one.weights.at(0).dim() == 1);
  const auto two = cstar_weight_check(make_double(catalog("weyl:B2")));
  CHECK(two.weights.at(1).dim() == 2);
  CHECK(two.weights.at(0).dim() == 2);
  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    const auto w = cstar_weight_check(d);
    CHECK(w.weights.at(1) == d.lagrangian);
    CHECK(w.weights.at(0) == d.dual_block());
  }
}

TEST_CASE("attraction dimensions") {
  const auto pm = make_double(catalog("cyclic:2"));
  const auto recs = attraction_stratum_dims(pm, fixed_space_lattice(pm.doubled));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].rank == 0);
  CHECK(recs[0].lagrangian_fixed_dim == 1);
  CHECK(recs[1].rank == 1);
  CHECK(recs[1].lagrangian_fixed_dim == 0);

  const auto a2 = make_double(catalog("weyl:A2"));
  const auto lat = fixed_space_lattice(a2.doubled);
  const auto r = attraction_stratum_dims(a2, lat);
  REQUIRE(r.size() == 3);
  CHECK(r[1].rank == 1);
  CHECK(r[1].lagrangian_fixed_dim == 1);

  for (const char* name : kGroups) {
    const auto d = make_double(catalog(name));
    const auto l = fixed_space_lattice(d.doubled);
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(l[i].subspace.dim() % 2 == 0);
      CHECK(l[i].subspace.dim() == 2 * intersect(d.lagrangian, l[i].subspace).dim());
    }
    for (const auto& rec : attraction_stratum_dims(d, l)) CHECK(rec.matches);
  }
}
