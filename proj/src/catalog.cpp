#include "symquot/catalog.hpp"

#include <charconv>

#include "symquot/error.hpp"

namespace symquot {

namespace {

Cyclotomic num(std::int64_t v) { return Cyclotomic(Rational(v)); }

// Simple reflections s_i(a_j) = a_j - c_ij a_i in the basis of simple roots.
std::vector<Matrix> cartan_reflections(const std::vector<std::vector<std::int64_t>>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix s = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s.set(i, j, s(i, j) - num(cartan[i][j]));
    out.push_back(std::move(s));
  }
  return out;
}

Matrix swap(std::size_t n, std::size_t a, std::size_t b, std::int64_t sign = 1) {
  Matrix m = Matrix::identity(n);
  m.set(a, a, num(0));
  m.set(b, b, num(0));
  m.set(a, b, num(sign));
  m.set(b, a, num(sign));
  return m;
}

std::vector<Matrix> adjacent_transpositions(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(swap(n, i, i + 1));
  return out;
}

std::size_t parse_index(const std::string& name, const std::string& digits, std::size_t lo, std::size_t hi) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("unknown catalog group '" + name + "'");
  }
  if (v < lo || v > hi) {
    throw InputError("catalog group '" + name + "' outside the supported range " + std::to_string(lo) + ".." +
                     std::to_string(hi));
  }
  return v;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

Representation catalog(const std::string& name, std::size_t max_order) {
  auto build = [&](std::size_t dim, std::vector<Matrix> gens, int conductor = 1) {
    return Representation{name, MatrixGroup::close(dim, std::move(gens), max_order, conductor)};
  };
  if (name == "neg2d") {
    Matrix m = Matrix::identity(2).scaled(num(-1));
    return build(2, {m});
  }
  if (name == "weyl:G2") return build(2, cartan_reflections({{2, -1}, {-3, 2}}));
  if (starts_with(name, "weyl:A")) {
    const std::size_t n = parse_index(name, name.substr(6), 1, 8);
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      c[i][i] = 2;
      if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return build(n, cartan_reflections(c));
  }
  if (starts_with(name, "weyl:B")) {
    const std::size_t n = parse_index(name, name.substr(6), 1, 6);
    auto gens = adjacent_transpositions(n);
    Matrix flip = Matrix::identity(n);
    flip.set(n - 1, n - 1, num(-1));
    gens.push_back(std::move(flip));
    return build(n, std::move(gens));
  }
  if (starts_with(name, "weyl:D")) {
    const std::size_t n = parse_index(name, name.substr(6), 2, 6);
    auto gens = adjacent_transpositions(n);
    gens.push_back(swap(n, n - 2, n - 1, -1));
    return build(n, std::move(gens));
  }
  if (starts_with(name, "cyclic:")) {
    const std::size_t m = parse_index(name, name.substr(7), 1, 1000);
    const int cond = static_cast<int>(m);
    return build(1, {Matrix(1, 1, {Cyclotomic::zeta(cond, 1)}, cond)}, cond);
  }
  if (starts_with(name, "symmetric:")) {
    const std::size_t n = parse_index(name, name.substr(10), 1, 8);
    return build(n, adjacent_transpositions(n));
  }
  throw InputError("unknown catalog group '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"cyclic:2", "cyclic:3", "cyclic:4", "neg2d", "symmetric:3", "symmetric:4",
          "weyl:A1", "weyl:A2", "weyl:A3", "weyl:A4", "weyl:B2", "weyl:B3",
          "weyl:D4", "weyl:G2"};
}

}  // namespace symquot
