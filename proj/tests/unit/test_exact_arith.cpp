#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "symquot/cyclotomic.hpp"
#include "symquot/error.hpp"
#include "symquot/matrix.hpp"
#include "symquot/rational.hpp"
#include "symquot/subspace.hpp"

using namespace symquot;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(cyclotomic_field(m).degree));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclotomic(m, c);
}

// Numeric evaluation at zeta = exp(2 pi i / m); independent of the reduction tables.
std::complex<double> evaluate(const Cyclotomic& x) {
  std::complex<double> acc = 0;
  const double m = x.conductor();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const auto q = x.coeffs()[i].to_mpq();
    acc += q.get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / m);
  }
  return acc;
}

Matrix rational_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Cyclotomic> e;
  std::size_t r = 0, c = 0;
  for (auto row : rows) {
    c = row.size();
    for (int x : row) e.emplace_back(x);
    ++r;
  }
  return Matrix(r, c, e);
}

const int kConductors[] = {1, 2, 3, 4, 5, 7, 8, 9, 12};

}  // namespace

TEST_CASE("rational normalization and overflow promotion") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK_THROWS_AS(Rational(1, 0), InputError);

  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;  // 2^124 spills into GMP
  CHECK(sq.to_string() == "21267647932558653966460912964485513216");
  CHECK(sq / big == big);   // and demotes again
  CHECK((sq / big).hash() == big.hash());
  CHECK(Rational::parse("-21/14") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1/"), InputError);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_field(1).modulus == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_field(2).modulus == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_field(3).modulus == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_field(4).modulus == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_field(12).modulus == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_field(105).degree == 48);
  CHECK_THROWS_AS(cyclotomic_field(0), InputError);
}

TEST_CASE("cyclo_parse examples") {
  CHECK(Cyclotomic::parse("1/2", 1) == Cyclotomic(Rational(1, 2)));
  CHECK(Cyclotomic::parse("z^1 + z^3", 4).is_zero());
  // Phi_3 = t^2 + t + 1, so zeta_3^2 = -1 - zeta_3
  auto z2 = Cyclotomic::parse("z^2", 3);
  CHECK(z2.coeffs()[0] == Rational(-1));
  CHECK(z2.coeffs()[1] == Rational(-1));
  CHECK(z2.format() == "-1 - z^1");
  CHECK(Cyclotomic::parse(" 3/4 * z ^ 2 - 1 ", 5) ==
        Cyclotomic::zeta(5, 2) * Cyclotomic(Rational(3, 4)) - Cyclotomic(1));
  CHECK(Cyclotomic::parse("z", 4) == Cyclotomic::zeta(4));
}

TEST_CASE("cyclo_parse errors carry positions") {
  try {
    Cyclotomic::parse("1 + z^4", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
  try {
    Cyclotomic::parse("1 + * 2", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(Cyclotomic::parse("", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("z", 1), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("2*z", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1/0", 3), ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1", 0), InputError);
}

TEST_CASE("cyclo_conjugate examples") {
  CHECK(Cyclotomic(Rational(3, 4)).conjugate() == Cyclotomic(Rational(3, 4)));
  CHECK(Cyclotomic::zeta(3).conjugate() == Cyclotomic::parse("-1 - z^1", 3));
  CHECK(Cyclotomic::zeta(4).conjugate() == -Cyclotomic::zeta(4));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int m : kConductors) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_cyclotomic(rng, m);
      auto b = random_cyclotomic(rng, m);
      auto c = random_cyclotomic(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      // numeric oracle for the reduction tables
      CHECK(std::abs(evaluate(a * b) - evaluate(a) * evaluate(b)) < 1e-9);
      CHECK(std::abs(evaluate(a.conjugate()) - std::conj(evaluate(a))) < 1e-9);
    }
  }
}

TEST_CASE("format/parse round trip and embedding") {
  std::mt19937 rng(11);
  for (int m : kConductors) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_cyclotomic(rng, m);
      CHECK(Cyclotomic::parse(a.format(), m) == a);
      for (int k : {2, 3}) {
        auto up = a.embed(m * k);
        CHECK(up == a);
        auto down = up.restrict_to(m);
        REQUIRE(down.has_value());
        CHECK(down->conductor() == m);
        CHECK(Cyclotomic::compare_repr(*down, a) == std::strong_ordering::equal);
        CHECK(std::abs(evaluate(up) - evaluate(a)) < 1e-9);
      }
    }
  }
  CHECK_FALSE(Cyclotomic::zeta(4).restrict_to(2).has_value());
  CHECK(Cyclotomic::zeta(6, 3).restrict_to(1) == Cyclotomic(-1));
}

TEST_CASE("kernel examples") {
  auto zero = Matrix(2, 2);
  CHECK(kernel(zero) == Subspace::full(2));
  auto id = Matrix::identity(2);
  CHECK(kernel(id - id).dim() == 2);
  auto swap = rational_matrix({{0, 1}, {1, 0}});
  auto k = kernel(swap - id);
  REQUIRE(k.dim() == 1);
  CHECK(k.basis()[0] == Vector{Cyclotomic(1), Cyclotomic(1)});
  CHECK(kernel(id).dim() == 0);
}

TEST_CASE("kernel/rank duality on random matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int m : {1, 3, 4, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto rows = static_cast<std::size_t>(size(rng));
      const auto cols = static_cast<std::size_t>(size(rng));
      std::vector<Cyclotomic> e;
      for (std::size_t i = 0; i < rows * cols; ++i) {
        // sparse-ish entries so that rank deficiency actually occurs
        e.push_back(pick(rng) == 0 ? random_cyclotomic(rng, m) : Cyclotomic(Rational(0), m));
      }
      Matrix mat(rows, cols, e, m);
      auto ker = kernel(mat);
      CHECK(ker.dim() + mat.rank() == cols);
      for (const auto& v : ker.basis()) {
        for (const auto& x : mat.apply(v)) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("averaging projector examples") {
  auto id = Matrix::identity(2);
  std::vector<Matrix> trivial{id};
  CHECK(averaging_projector(trivial) == id);

  std::vector<Matrix> sign{id, id.scaled(Cyclotomic(-1))};
  CHECK(averaging_projector(sign).is_zero());

  auto swap = rational_matrix({{0, 1}, {1, 0}});
  std::vector<Matrix> h{id, swap};
  auto p = averaging_projector(h);
  auto half = Cyclotomic(Rational(1, 2));
  CHECK(p == Matrix(2, 2, {half, half, half, half}));
  CHECK(kernel(p - id) == Subspace::span(2, {{Cyclotomic(1), Cyclotomic(1)}}));
  CHECK(kernel(p) == Subspace::span(2, {{Cyclotomic(1), Cyclotomic(-1)}}));
}

TEST_CASE("averaging projector is idempotent and equivariant") {
  // cyclic group generated by a 3x3 cyclotomic matrix of order 12
  auto z = Cyclotomic::zeta(12);
  Matrix g(3, 3, {Cyclotomic(0), Cyclotomic(1), Cyclotomic(0),   //
                  Cyclotomic(0), Cyclotomic(0), Cyclotomic(1),   //
                  z * z * z * z, Cyclotomic(0), Cyclotomic(0)},
           12);
  std::vector<Matrix> h{Matrix::identity(3, 12)};
  while (!(h.back() * g).is_identity()) h.push_back(h.back() * g);
  auto p = averaging_projector(h);
  CHECK(p * p == p);
  for (const auto& x : h) {
    CHECK(x * p == p);
    CHECK(p * x == p);
  }
}

TEST_CASE("subspace operations") {
  auto x = Subspace::coordinate(3, 0, 2);
  auto y = Subspace::coordinate(3, 1, 2);
  CHECK(intersect(x, y) == Subspace::coordinate(3, 1, 1));
  CHECK((x + y) == Subspace::full(3));
  CHECK(Subspace::full(3).contains(x));
  CHECK_FALSE(x.contains(y));
  auto v = Vector{Cyclotomic(2), Cyclotomic(5), Cyclotomic(0)};
  CHECK(x.coordinates(v) == Vector{Cyclotomic(2), Cyclotomic(5)});
  // equal spans give equal canonical forms
  auto a = Subspace::span(3, {{Cyclotomic(1), Cyclotomic(2), Cyclotomic(3)},
                              {Cyclotomic(0), Cyclotomic(1), Cyclotomic(1)}});
  auto b = Subspace::span(3, {{Cyclotomic(1), Cyclotomic(3), Cyclotomic(4)},
                              {Cyclotomic(2), Cyclotomic(5), Cyclotomic(7)}});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("characteristic polynomial and inverse") {
  auto m = rational_matrix({{2, 1}, {1, 3}});
  auto cp = m.characteristic_polynomial();  // x^2 - 5x + 5
  CHECK(cp == std::vector<Cyclotomic>{Cyclotomic(5), Cyclotomic(-5), Cyclotomic(1)});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(rational_matrix({{1, 2}, {2, 4}}).inverse().has_value());
}
