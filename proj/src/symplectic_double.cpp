#include "symquot/symplectic_double.hpp"

#include "symquot/error.hpp"

namespace symquot {

namespace {

Matrix double_of(const Matrix& g, const Matrix& g_inverse) {
  return Matrix::block_diagonal(g, g_inverse.transpose());
}

Matrix cstar_action(std::size_t n, const Rational& lambda, int conductor) {
  Matrix l = Matrix::identity(2 * n, conductor);
  for (std::size_t i = 0; i < n; ++i) l.set(i, i, Cyclotomic(lambda, conductor));
  return l;
}

}  // namespace

Subspace SymplecticDouble::dual_block() const {
  return Subspace::coordinate(2 * n(), n(), n(), doubled.conductor());
}

Cyclotomic SymplecticDouble::pairing(std::span<const Cyclotomic> x, std::span<const Cyclotomic> y) const {
  return dot(x, omega.apply(y));
}

Matrix standard_symplectic_form(std::size_t n, int conductor) {
  Matrix omega(2 * n, 2 * n, conductor);
  for (std::size_t i = 0; i < n; ++i) {
    omega.set(i, n + i, Cyclotomic(Rational(1), conductor));
    omega.set(n + i, i, Cyclotomic(Rational(-1), conductor));
  }
  return omega;
}

SymplecticDouble make_double(const Representation& rep) {
  const auto& base = rep.group;
  const std::size_t n = base.dim();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < base.generators().size(); ++k) {
    const std::size_t i = base.generator_indices()[k];
    gens.push_back(double_of(base.element(i), base.element(base.inverse(i))));
  }
  SymplecticDouble d{rep, MatrixGroup::close(2 * n, std::move(gens), base.order(), base.conductor()),
                     standard_symplectic_form(n, base.conductor()),
                     Subspace::coordinate(2 * n, 0, n, base.conductor())};
  if (d.doubled.order() != base.order()) {
    throw ConsistencyError("doubled group order differs from the base group");
  }
  for (std::size_t i = 0; i < base.order(); ++i) {
    if (!(d.doubled.element(i) == double_of(base.element(i), base.element(base.inverse(i))))) {
      throw ConsistencyError("doubled enumeration does not mirror the base group");
    }
  }
  return d;
}

bool check_symplectic(const MatrixGroup& group, const Matrix& omega) {
  if (omega.rows() != group.dim() || omega.cols() != group.dim()) return false;
  for (const auto& g : group.elements()) {
    if (!(g.transpose() * omega * g == omega)) return false;
  }
  return true;
}

bool is_isotropic(const Matrix& omega, const Subspace& s) {
  for (const auto& x : s.basis()) {
    Vector ox = omega.apply(x);
    for (const auto& y : s.basis()) {
      if (!dot(y, ox).is_zero()) return false;
    }
  }
  return true;
}

bool check_real_structure(const Representation& rep) {
  for (const auto& g : rep.group.generators()) {
    for (const auto& e : g.entries()) {
      if (!(e.conjugate() == e)) return false;
    }
  }
  return true;
}

WeightDecomposition cstar_weight_check(const SymplecticDouble& d) {
  const std::size_t n = d.n();
  const int cond = d.doubled.conductor();
  const Rational probe(2);
  const Matrix action = cstar_action(n, probe, cond);
  const Matrix id = Matrix::identity(2 * n, cond);

  // the form has weight one: lambda^* Omega = lambda Omega
  for (const Rational& lambda : {Rational(2), Rational(-3), Rational(5, 7)}) {
    Matrix l = cstar_action(n, lambda, cond);
    if (!(l.transpose() * d.omega * l == d.omega.scaled(Cyclotomic(lambda, cond)))) {
      throw ConsistencyError("symplectic form does not have weight one");
    }
  }

  WeightDecomposition out;
  out.weights[1] = kernel(action - id.scaled(Cyclotomic(probe, cond)));
  out.weights[0] = kernel(action - id);
  if (!(out.weights[1] == d.lagrangian) || !(out.weights[0] == d.dual_block())) {
    throw ConsistencyError("weight spaces differ from V_o and V_o*");
  }
  std::size_t total = 0;
  Subspace sum(2 * n, cond);
  for (const auto& [p, t] : out.weights) {
    total += t.dim();
    sum = sum + t;
  }
  if (total != 2 * n || sum.dim() != 2 * n) throw ConsistencyError("weight spaces do not split V");

  for (const auto& [p, tp] : out.weights) {
    auto partner = out.weights.find(1 - p);
    if (partner == out.weights.end() || partner->second.dim() != tp.dim()) {
      throw ConsistencyError("pairing violation: dim T^p != dim T^(1-p)");
    }
    for (const auto& [q, tq] : out.weights) {
      if (p + q == 1) continue;
      for (const auto& x : tp.basis())
        for (const auto& y : tq.basis()) {
          if (!d.pairing(x, y).is_zero()) throw ConsistencyError("pairing violation: Omega(T^p, T^q) != 0");
        }
    }
    // T^p and T^(1-p) are perfectly paired
    const auto& tq = partner->second;
    if (tp.dim() > 0) {
      Matrix gram(tp.dim(), tq.dim(), cond);
      for (std::size_t i = 0; i < tp.dim(); ++i)
        for (std::size_t j = 0; j < tq.dim(); ++j) gram.set(i, j, d.pairing(tp.basis()[i], tq.basis()[j]));
      if (gram.rank() != tp.dim()) throw ConsistencyError("pairing violation: degenerate weight pairing");
    }
  }
  return out;
}

std::vector<AttractionRecord> attraction_stratum_dims(const SymplecticDouble& d,
                                                      const std::vector<FixedSpaceLatticeEntry>& lattice) {
  const std::size_t n = d.n();
  std::vector<AttractionRecord> out;
  for (const auto& e : lattice) {
    AttractionRecord r;
    r.fixed_dim = e.subspace.dim();
    r.rank = (2 * n - r.fixed_dim) / 2;
    r.lagrangian_fixed_dim = intersect(d.lagrangian, e.subspace).dim();
    r.matches = (r.fixed_dim % 2 == 0) && r.lagrangian_fixed_dim + r.rank == n;
    out.push_back(r);
  }
  return out;
}

}  // namespace symquot
