#include "symquot/a1_model.hpp"

#include <algorithm>

#include "symquot/error.hpp"
#include "symquot/subspace.hpp"

namespace symquot::a1 {

namespace {

Cyclotomic num(std::int64_t v) { return Cyclotomic(Rational(v)); }

// Product of the basis monomials b1 of A_d1 and b2 of A_d2 is basis
// monomial b1 + b2 of A_(d1+d2).
Vector monomial(std::size_t d, std::size_t b) {
  Vector v(2 * d + 1, num(0));
  v[b] = num(1);
  return v;
}

Vector multiply(const Vector& p, std::size_t dp, const Vector& q, std::size_t dq) {
  Vector out(2 * (dp + dq) + 1, num(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!q[j].is_zero()) out[i + j] += p[i] * q[j];
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

Sl2Action sl2_action(std::size_t d) {
  const std::size_t n = 2 * d + 1;
  Sl2Action s{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t b = 0; b < n; ++b) {
    const auto a = static_cast<std::int64_t>(2 * d - b);
    const auto bb = static_cast<std::int64_t>(b);
    // x d/dy: x^a y^b -> b x^(a+1) y^(b-1)
    if (b > 0) s.e.set(b - 1, b, num(bb));
    // y d/dx: x^a y^b -> a x^(a-1) y^(b+1)
    if (b + 1 < n) s.f.set(b + 1, b, num(a));
    s.h.set(b, b, num(a - bb));
  }
  return s;
}

std::size_t hilbert_dim(std::size_t d) {
  std::size_t count = 0;
  for (std::size_t a = 0; a <= 2 * d; ++a)
    for (std::size_t b = 0; b <= 2 * d; ++b) count += (a + b == 2 * d) ? 1 : 0;
  if (count != 2 * d + 1) throw ConsistencyError("monomial count of A_d differs from 2d + 1");
  return count;
}

Matrix multiplication_map(std::size_t b, std::size_t d) {
  Matrix m(2 * d + 3, 2 * d + 1);
  for (std::size_t j = 0; j < 2 * d + 1; ++j) m.set(j + b, j, num(1));
  return m;
}

std::size_t ideal_power_dims(std::size_t k, std::size_t d) {
  // S(k, d) = sum_{j >= 1} A_j S(k - 1, d - j), S(0, d) = A_d
  std::vector<std::vector<Subspace>> s(k + 1);
  for (std::size_t e = 0; e <= d; ++e) s[0].push_back(Subspace::full(2 * e + 1));
  for (std::size_t level = 1; level <= k; ++level) {
    for (std::size_t e = 0; e <= d; ++e) {
      std::vector<Vector> products;
      for (std::size_t j = 1; j <= e; ++j) {
        const Subspace& rest = s[level - 1][e - j];
        for (std::size_t b = 0; b <= 2 * j; ++b)
          for (const auto& r : rest.basis()) products.push_back(multiply(monomial(j, b), j, r, e - j));
      }
      s[level].push_back(Subspace::span(2 * e + 1, std::move(products)));
    }
  }
  return s[k][d].dim();
}

bool sl2_commutators_check(std::size_t max_degree) {
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto s = sl2_action(d);
    if (!(commutator(s.h, s.e) == s.e.scaled(num(2)))) return false;
    if (!(commutator(s.h, s.f) == s.f.scaled(num(-2)))) return false;
    if (!(commutator(s.e, s.f) == s.h)) return false;
  }
  return true;
}

bool is_irreducible_piece(std::size_t d) {
  const auto s = sl2_action(d);
  const Subspace highest = kernel(s.e);
  if (highest.dim() != 1) return false;
  std::vector<Vector> orbit{highest.basis()[0]};
  for (std::size_t i = 0; i < 2 * d; ++i) orbit.push_back(s.f.apply(orbit.back()));
  return Subspace::span(2 * d + 1, std::move(orbit)).dim() == 2 * d + 1;
}

std::string GradedIdeal::label() const {
  if (power < 0) return "0";
  if (power == 0) return "A";
  if (power == 1) return "m";
  return "m^" + std::to_string(power);
}

std::vector<GradedIdeal> sl2_invariant_ideals(std::size_t max_degree) {
  const std::size_t pieces = max_degree + 1;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    if (hilbert_dim(d) != 2 * d + 1 || !is_irreducible_piece(d)) {
      throw ConsistencyError("A_" + std::to_string(d) + " is not an irreducible sl(2)-module");
    }
  }
  // pairwise distinct irreducible pieces: invariant subspaces are sums of whole pieces
  std::vector<bool> surjective(pieces, false);
  for (std::size_t d = 0; d + 1 < pieces; ++d) {
    std::vector<Vector> image;
    for (std::size_t b = 0; b <= 2; ++b) {
      const Matrix m = multiplication_map(b, d);
      for (std::size_t j = 0; j < 2 * d + 1; ++j) image.push_back(m.column(j));
    }
    surjective[d] = Subspace::span(2 * d + 3, std::move(image)).dim() == 2 * d + 3;
  }

  std::vector<GradedIdeal> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pieces); ++mask) {
    GradedIdeal ideal;
    ideal.degrees.resize(pieces);
    for (std::size_t d = 0; d < pieces; ++d) ideal.degrees[d] = (mask >> d) & 1;
    // A_j A_d is nonzero for all j, d, so containing A_d forces A_(d+1)
    bool closed = true;
    for (std::size_t d = 0; d + 1 < pieces; ++d) {
      if (ideal.degrees[d] && surjective[d] && !ideal.degrees[d + 1]) closed = false;
    }
    if (!closed) continue;
    auto first = std::find(ideal.degrees.begin(), ideal.degrees.end(), true);
    if (first == ideal.degrees.end()) {
      ideal.power = -1;
    } else {
      ideal.power = static_cast<int>(first - ideal.degrees.begin());
      for (std::size_t d = 0; d < pieces; ++d) {
        const std::size_t expected = ideal.degrees[d] ? 2 * d + 1 : 0;
        if (ideal_power_dims(static_cast<std::size_t>(ideal.power), d) != expected) {
          throw ConsistencyError("invariant ideal " + ideal.label() + " is not a power of the maximal ideal");
        }
      }
    }
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.power < b.power; });
  return out;
}

}  // namespace symquot::a1
