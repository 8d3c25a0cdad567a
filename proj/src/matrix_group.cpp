#include "symquot/matrix_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "symquot/error.hpp"

namespace symquot {

MatrixGroup MatrixGroup::close(std::size_t dim, std::vector<Matrix> generators,
                               std::size_t max_order, int conductor) {
  MatrixGroup g;
  g.dim_ = dim;
  g.conductor_ = conductor;
  for (const auto& m : generators) {
    if (m.rows() != dim || m.cols() != dim) {
      throw InputError("generator is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    g.conductor_ = lcm_conductor(g.conductor_, m.conductor());
  }
  for (auto& m : generators) {
    m = m.embed(g.conductor_);
    if (m.rank() != dim) throw InputError("generator is not invertible");
  }
  g.generators_ = std::move(generators);

  auto add = [&](Matrix m) {
    if (g.elements_.size() >= max_order) throw OrderExceededError(max_order);
    g.index_.emplace(m, g.elements_.size());
    g.elements_.push_back(std::move(m));
  };
  add(Matrix::identity(dim, g.conductor_));
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : g.generators_) {
      Matrix p = g.elements_[head] * s;
      if (!g.index_.count(p)) add(std::move(p));
    }
  }
  for (const auto& s : g.generators_) g.generator_indices_.push_back(g.index_.at(s));

  g.inverses_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    auto inv = g.elements_[i].inverse();
    auto it = inv ? g.index_.find(*inv) : g.index_.end();
    if (it == g.index_.end()) throw ConsistencyError("group enumeration is not closed under inverse");
    g.inverses_[i] = it->second;
  }
  return g;
}

std::optional<std::size_t> MatrixGroup::index_of(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  Matrix probe = m;
  if (m.conductor() != conductor_) {
    if (conductor_ % m.conductor() == 0) {
      probe = m.embed(conductor_);
    } else {
      std::vector<Cyclotomic> e;
      for (const auto& x : m.entries()) {
        auto r = x.restrict_to(std::gcd(conductor_, x.conductor()));
        if (!r) return std::nullopt;
        e.push_back(r->embed(conductor_));
      }
      probe = Matrix(dim_, dim_, std::move(e), conductor_);
    }
  }
  auto it = index_.find(probe);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::multiply(std::size_t a, std::size_t b) const {
  auto it = index_.find(elements_[a] * elements_[b]);
  if (it == index_.end()) throw ConsistencyError("group is not closed under multiplication");
  return it->second;
}

std::size_t MatrixGroup::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t cur = i; cur != 0; cur = multiply(cur, i)) ++k;
  return k;
}

ConjClassPartition conjugacy_classes(const MatrixGroup& g) {
  // Orbits of x -> s x s^-1 over the generators s; since the generators
  // generate G these are exactly the conjugacy classes.
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  ConjClassPartition out;
  out.class_of.assign(g.order(), kUnassigned);
  const auto& gens = g.generator_indices();
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (out.class_of[start] != kUnassigned) continue;
    const std::size_t c = out.classes.size();
    IndexSet members{start};
    out.class_of[start] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t s : gens) {
        std::size_t y = g.multiply(g.multiply(s, members[head]), g.inverse(s));
        if (out.class_of[y] == kUnassigned) {
          out.class_of[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

IndexSet stabilizer(const MatrixGroup& g, std::span<const Cyclotomic> v) {
  if (v.size() != g.dim()) throw InputError("vector does not match group dimension");
  IndexSet out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Vector w = g.element(i).apply(v);
    bool fixed = true;
    for (std::size_t k = 0; k < w.size() && fixed; ++k) fixed = (w[k] == v[k]);
    if (fixed) out.push_back(i);
  }
  return out;
}

IndexSet generated_subgroup(const MatrixGroup& g, std::span<const std::size_t> subset) {
  std::vector<bool> seen(g.order(), false);
  IndexSet members{0};
  seen[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t s : subset) {
      std::size_t p = g.multiply(members[head], s);
      if (!seen[p]) {
        seen[p] = true;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

IndexSet pointwise_stabilizer(const MatrixGroup& g, const Subspace& f) {
  IndexSet out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (f.pointwise_fixed_by(g.element(i))) out.push_back(i);
  }
  return out;
}

Subspace fixed_space(const MatrixGroup& g, std::span<const std::size_t> subset) {
  Subspace x = Subspace::full(g.dim(), g.conductor());
  for (std::size_t i : subset) {
    if (!x.pointwise_fixed_by(g.element(i))) x = x.fixed_by(g.element(i));
  }
  return x;
}

std::vector<FixedSpaceLatticeEntry> fixed_space_lattice(const MatrixGroup& g) {
  const std::size_t n = g.dim();
  const Matrix id = Matrix::identity(n, g.conductor());

  // distinct element fixed spaces V^g, each with one witnessing element
  std::vector<Subspace> lattice;
  std::vector<std::size_t> witness;
  std::vector<std::size_t> space_of(g.order());
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Subspace f = kernel(g.element(i) - id);
    auto [it, inserted] = index.emplace(f, lattice.size());
    if (inserted) {
      lattice.push_back(std::move(f));
      witness.push_back(i);
    }
    space_of[i] = it->second;
  }
  const std::size_t generating = lattice.size();

  // closure under intersection with the generating spaces
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    for (std::size_t j = 0; j < generating; ++j) {
      const Matrix& w = g.element(witness[j]);
      if (lattice[a].pointwise_fixed_by(w)) continue;
      Subspace meet = lattice[a].fixed_by(w);
      if (!index.count(meet)) {
        index.emplace(meet, lattice.size());
        lattice.push_back(std::move(meet));
      }
    }
  }

  // pointwise stabilizers and the closedness test
  std::vector<IndexSet> stabilizers(lattice.size());
  std::vector<bool> closed(lattice.size(), false);
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    std::vector<bool> contains(generating, false);
    Subspace meet = Subspace::full(n, g.conductor());
    for (std::size_t j = 0; j < generating; ++j) {
      if (!lattice[a].pointwise_fixed_by(g.element(witness[j]))) continue;
      contains[j] = true;
      if (meet.dim() > lattice[a].dim()) meet = intersect(meet, lattice[j]);
    }
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (contains[space_of[i]]) stabilizers[a].push_back(i);
    }
    closed[a] = (meet == lattice[a]);
  }

  // G-orbits, walked with the generators
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit_of(lattice.size(), kNone);
  std::vector<FixedSpaceLatticeEntry> out;
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    if (!closed[a] || orbit_of[a] != kNone) continue;
    std::vector<std::size_t> orbit{a};
    orbit_of[a] = a;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& s : g.generators()) {
        Subspace img = lattice[orbit[head]].image(s);
        auto it = index.find(img);
        if (it == index.end() || !closed[it->second]) {
          throw ConsistencyError("fixed-space lattice is not stable under the group");
        }
        if (orbit_of[it->second] == kNone) {
          orbit_of[it->second] = a;
          orbit.push_back(it->second);
        }
      }
    }
    std::size_t rep = *std::min_element(orbit.begin(), orbit.end(), [&](std::size_t x, std::size_t y) {
      return canonical_order(lattice[x], lattice[y]) < 0;
    });
    out.push_back({lattice[rep], stabilizers[rep], orbit.size(), true});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return canonical_order(x.subspace, y.subspace) < 0;
  });
  return out;
}

}  // namespace symquot
