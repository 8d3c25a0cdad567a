#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symquot/analysis.hpp"
#include "symquot/catalog.hpp"
#include "symquot/error.hpp"
#include "symquot/group_file.hpp"

using namespace symquot;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_group_file(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t error_column(std::string_view text) {
  try {
    parse_group_file(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

TEST_CASE("parse_group_file examples") {
  const auto pm = parse_group_file("conductor: 1\ndimension: 1\ngenerator:\n  -1\n");
  CHECK(pm.conductor == 1);
  REQUIRE(pm.generators.size() == 1);
  CHECK(pm.generators[0] == Matrix(1, 1, {Cyclotomic(-1)}));
  CHECK(to_representation(pm).group.order() == 2);

  const auto trivial = parse_group_file("# nothing\n\ndimension: 3\n");
  CHECK(trivial.generators.empty());
  CHECK(to_representation(trivial).group.order() == 1);

  const auto z3 = parse_group_file("name: Z3\nconductor: 3\ndimension: 1\ngenerator:\n  z^1  # zeta\n");
  CHECK(z3.name == "Z3");
  CHECK(z3.generators[0](0, 0) == Cyclotomic::zeta(3, 1));
  CHECK(to_representation(z3).group.order() == 3);
}

TEST_CASE("parse_group_file errors") {
  const char* two_by_three = "dimension: 2\ngenerator:\n  1, 0, 0\n  0, 1, 0\n";
  CHECK_THROWS_AS(parse_group_file(two_by_three), ParseError);
  CHECK(error_line(two_by_three) == 3);

  CHECK(error_line("dimension: 2\ngenerator:\n  1, 0\n") == 2);
  CHECK(error_line("conductor: 0\ndimension: 1\n") == 1);
  CHECK(error_line("conductor: -4\ndimension: 1\n") == 1);
  CHECK(error_line("colour: red\n") == 1);
  CHECK(error_line("conductor: 1\n") > 0);

  const char* bad_literal = "conductor: 3\ndimension: 1\ngenerator:\n  1 + z^5\n";
  CHECK(error_line(bad_literal) == 4);
  CHECK(error_column(bad_literal) > 3);
  CHECK(error_line("dimension: 2\ngenerator:\n  1, \n  0, 1\n") == 3);
}

TEST_CASE("group files round trip") {
  for (const char* name : {"cyclic:2", "cyclic:5", "weyl:A3", "weyl:B2", "weyl:G2", "neg2d"}) {
    const auto rep = catalog(name);
    GroupFile f;
    f.name = name;
    f.conductor = rep.group.conductor();
    f.dimension = rep.dim();
    f.generators = rep.group.generators();
    const std::string text = serialize_group_file(f);
    const GroupFile back = parse_group_file(text);
    CHECK(back == f);
    CHECK(serialize_group_file(back) == text);
  }
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int t = 0; t < 20; ++t) {
    GroupFile f;
    f.conductor = 12;
    f.dimension = 2;
    std::vector<Cyclotomic> e;
    for (int i = 0; i < 4; ++i) e.push_back(Cyclotomic(Rational(coeff(rng), 3), 12) + Cyclotomic::zeta(12, t % 12));
    f.generators.emplace_back(2, 2, e, 12);
    CHECK(parse_group_file(serialize_group_file(f)) == f);
  }
}

TEST_CASE("catalog examples") {
  const auto c2 = catalog("cyclic:2");
  CHECK(c2.dim() == 1);
  CHECK(c2.group.order() == 2);
  const auto s3 = catalog("symmetric:3");
  CHECK((s3.dim() == 3 && s3.group.order() == 6));
  CHECK(catalog("weyl:B2").group.order() == 8);
  CHECK(catalog("weyl:A4").group.order() == 120);
  CHECK(catalog("weyl:B3").group.order() == 48);
  CHECK(catalog("weyl:D5").group.order() == 1920);
  CHECK(catalog("neg2d").group.order() == 2);
  CHECK_THROWS_AS(catalog("weyl:A0"), InputError);
  CHECK_THROWS_AS(catalog("weyl:E6"), InputError);
}

TEST_CASE("analyze examples") {
  const auto c2 = analyze(catalog("cyclic:2"));
  CHECK(c2.verdict.necessary_condition);
  CHECK(c2.verdict.uniqueness == Tristate::True);
  REQUIRE(c2.strata.size() == 2);
  CHECK((c2.strata[0].rank == 0 && c2.strata[0].stratum_dim == 2));
  CHECK((c2.strata[1].rank == 1 && c2.strata[1].stratum_dim == 0));
  CHECK(c2.reflections.classes.size() == 1);

  const auto neg = analyze(catalog("neg2d"));
  CHECK_FALSE(neg.verdict.necessary_condition);
  CHECK(neg.reflections.reflections.empty());
  CHECK(neg.verdict.notes.front().find("no smooth projective crepant resolution") != std::string::npos);

  const auto b2 = analyze(catalog("weyl:B2"));
  CHECK(b2.reflections.classes.size() == 2);
  CHECK(b2.verdict.uniqueness == Tristate::False);
  REQUIRE(b2.degrees);
  CHECK(b2.degrees->degrees == std::vector<std::size_t>{2, 4});
}

TEST_CASE("reports are consistent and deterministic") {
  for (const char* name : {"cyclic:2", "cyclic:3", "neg2d", "weyl:A2", "weyl:B2", "weyl:G2", "weyl:A3", "symmetric:4"}) {
    const auto a = analyze(catalog(name), {24, true});
    const auto b = analyze(catalog(name), {24, true});
    CHECK(without_timing(to_json(a)).dump() == without_timing(to_json(b)).dump());
    CHECK(a.reflections.predicted_picard_rank == a.reflections.classes.size());
    if (a.reflections.real_structure) CHECK(a.mirrors.rank_one_classes == a.reflections.classes.size());
    const auto j = to_json(a);
    CHECK(j["schema"] == 1);
    CHECK(j.contains("slices"));
  }
  const auto z3 = to_json(analyze(catalog("cyclic:3")));
  CHECK(z3["mirrors"]["status"] == "skipped: hypothesis real_structure unverified");
  CHECK(z3["verdict"]["uniqueness"] == "false");
}

TEST_CASE("file and catalog inputs agree") {
  const auto file = parse_group_file(
      "name: weyl:A2\ndimension: 2\ngenerator:\n  -1, 1\n  0, 1\ngenerator:\n  1, 0\n  1, -1\n");
  const auto from_file = to_json(analyze(to_representation(file)));
  const auto from_catalog = to_json(analyze(catalog("weyl:A2")));
  CHECK(without_timing(from_file).dump() == without_timing(from_catalog).dump());
}
