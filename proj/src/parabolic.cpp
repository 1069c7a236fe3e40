#include "coxplane/parabolic.h"

#include "coxplane/errors.h"
#include "coxplane/union_find.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace coxplane {

namespace {

// Dot products of roots against fixed-space bases are either exactly zero up
// to rounding or bounded well away from it.
constexpr double kOrthTolerance = 1e-7;

Parabolic closure_of(const CoxeterSystem& sys, Matrix fixed) {
  Parabolic p;
  p.reflset = DynBitset(static_cast<std::size_t>(sys.num_positive));
  for (int t = 0; t < sys.num_positive; ++t) {
    const Vector& a = sys.coords[static_cast<std::size_t>(t)];
    if (fixed.cols() == 0 || (fixed.transpose() * a).cwiseAbs().maxCoeff() < kOrthTolerance) p.reflset.set(static_cast<std::size_t>(t));
  }
  p.rank = sys.rank - static_cast<int>(fixed.cols());
  p.fixed_basis = std::move(fixed);
  return p;
}

}  // namespace

int OrbitPoints::act(const GroupElement& g, int p) const {
  const int img = index.find(g.matrix() * points[static_cast<std::size_t>(p)]);
  if (img < 0) throw InternalError("orbit is not closed under a group element");
  return img;
}

OrbitPoints orbit_of(const CoxeterSystem& sys, const Vector& v) {
  OrbitPoints o;
  o.index = VectorRegistry(sys.eps);
  std::deque<int> queue{o.index.insert(v)};
  while (!queue.empty()) {
    const Vector x = o.index[static_cast<std::size_t>(queue.front())];
    queue.pop_front();
    for (const auto& s : sys.simple_reflections) {
      const std::size_t before = o.index.size();
      const int idx = o.index.insert(s.matrix() * x);
      if (o.index.size() != before) queue.push_back(idx);
    }
  }
  o.points = o.index.items();
  o.reflection_action.resize(sys.reflections.size());
  for (std::size_t t = 0; t < sys.reflections.size(); ++t) {
    auto& row = o.reflection_action[t];
    row.resize(o.points.size());
    for (std::size_t p = 0; p < o.points.size(); ++p) row[p] = o.act(sys.reflections[t], static_cast<int>(p));
  }
  return o;
}

Vector fundamental_weight(const CoxeterSystem& sys, int i) {
  if (i < 0 || i >= sys.rank) throw IndexOutOfRange("fundamental weight index out of range");
  const Vector w = sys.simple_roots.partialPivLu().solve(Vector::Unit(sys.rank, i));
  return w.normalized();
}

long long fundamental_orbit_size(const CoxeterSystem& sys, int i) {
  CoxeterMatrix sub;
  for (int a = 0; a < sys.rank; ++a) {
    if (a == i) continue;
    std::vector<int> row;
    for (int b = 0; b < sys.rank; ++b)
      if (b != i) row.push_back(sys.coxeter[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    sub.push_back(std::move(row));
  }
  return group_order(sys) / coxeter_group_order(sub);
}

int smallest_orbit_index(const CoxeterSystem& sys) {
  int best = 0;
  for (int i = 1; i < sys.rank; ++i)
    if (fundamental_orbit_size(sys, i) < fundamental_orbit_size(sys, best)) best = i;
  return best;
}

OrbitPoints smallest_orbit(const CoxeterSystem& sys) {
  const int i = smallest_orbit_index(sys);
  OrbitPoints o = orbit_of(sys, fundamental_weight(sys, i));
  if (static_cast<long long>(o.size()) != fundamental_orbit_size(sys, i))
    throw InternalError("orbit size disagrees with the parabolic index formula");
  return o;
}

Parabolic parabolic_from_reflections(const CoxeterSystem& sys, const std::vector<int>& seed) {
  Matrix rows(static_cast<Eigen::Index>(seed.size()), sys.rank);
  for (std::size_t k = 0; k < seed.size(); ++k) {
    const int t = seed[k];
    if (t < 0 || t >= sys.num_positive) throw IndexOutOfRange("reflection index out of range");
    rows.row(static_cast<Eigen::Index>(k)) = sys.coords[static_cast<std::size_t>(t)].transpose();
  }
  return closure_of(sys, null_space(rows));
}

Parabolic parabolic_from_reflections(const CoxeterSystem& sys, const DynBitset& seed) {
  return parabolic_from_reflections(sys, seed.indices());
}

Parabolic parabolic_fixing(const CoxeterSystem& sys, const Matrix& subspace) {
  if (subspace.cols() == 0) return closure_of(sys, Matrix(sys.rank, 0));
  // Orthonormalize; the caller may hand over any spanning set.
  return closure_of(sys, row_space(subspace.transpose()));
}

Parabolic standard_parabolic(const CoxeterSystem& sys, const std::vector<int>& simples) {
  for (int s : simples)
    if (s < 0 || s >= sys.rank) throw IndexOutOfRange("simple index out of range");
  return parabolic_from_reflections(sys, simples);
}

Parabolic conjugate(const CoxeterSystem& sys, const Parabolic& par, const GroupElement& g) {
  Parabolic p;
  p.reflset = DynBitset(par.reflset.size());
  par.reflset.for_each([&](std::size_t t) { p.reflset.set(static_cast<std::size_t>(sys.positive_of(g(static_cast<int>(t))))); });
  p.fixed_basis = g.matrix() * par.fixed_basis;
  p.rank = par.rank;
  return p;
}

std::vector<Parabolic> enumerate_parabolics(const CoxeterSystem& sys, std::size_t max_count) {
  std::vector<Parabolic> out;
  std::unordered_set<DynBitset, DynBitsetHash> seen;
  auto add = [&](Parabolic p) {
    if (!seen.insert(p.reflset).second) return false;
    if (out.size() >= max_count)
      throw BudgetExceeded("more than " + std::to_string(max_count) + " parabolic subgroups in " + sys.type.label());
    out.push_back(std::move(p));
    return true;
  };
  add(closure_of(sys, Matrix::Identity(sys.rank, sys.rank)));
  std::size_t level_begin = 0;
  for (int rank = 0; rank < sys.rank; ++rank) {
    const std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (int t = 0; t < sys.num_positive; ++t) {
        if (out[k].reflset.test(static_cast<std::size_t>(t))) continue;
        // Cut the fixed space of out[k] by the hyperplane of t.
        const Matrix f = out[k].fixed_basis;  // out may reallocate below
        const Matrix restricted = sys.coords[static_cast<std::size_t>(t)].transpose() * f;
        add(closure_of(sys, f * null_space(restricted)));
      }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(level_end), out.end(),
              [](const Parabolic& a, const Parabolic& b) { return a.reflset < b.reflset; });
    level_begin = level_end;
  }
  return out;
}

std::vector<int> conjugacy_classes(const CoxeterSystem& sys, const std::vector<Parabolic>& pars) {
  std::unordered_map<DynBitset, int, DynBitsetHash> where;
  for (std::size_t k = 0; k < pars.size(); ++k) where.emplace(pars[k].reflset, static_cast<int>(k));
  UnionFind uf(pars.size());
  for (std::size_t k = 0; k < pars.size(); ++k) {
    for (const auto& s : sys.simple_reflections) {
      DynBitset img(pars[k].reflset.size());
      pars[k].reflset.for_each([&](std::size_t t) { img.set(static_cast<std::size_t>(sys.positive_of(s(static_cast<int>(t))))); });
      auto it = where.find(img);
      if (it == where.end()) throw InternalError("parabolic list is not closed under conjugation");
      uf.unite(static_cast<int>(k), it->second);
    }
  }
  // Renumber classes densely in order of first appearance.
  std::vector<int> out(pars.size());
  std::unordered_map<int, int> dense;
  for (std::size_t k = 0; k < pars.size(); ++k) {
    const int root = uf.find(static_cast<int>(k));
    auto [it, fresh] = dense.emplace(root, static_cast<int>(dense.size()));
    out[k] = it->second;
  }
  return out;
}

Partition orbit_partition(const Parabolic& par, const OrbitPoints& o) {
  UnionFind uf(o.size());
  par.reflset.for_each([&](std::size_t t) {
    const auto& row = o.reflection_action[t];
    for (std::size_t p = 0; p < row.size(); ++p) uf.unite(static_cast<int>(p), row[p]);
  });
  std::unordered_map<int, std::size_t> slot;
  Partition blocks;
  for (int p = 0; p < static_cast<int>(o.size()); ++p) {
    auto [it, fresh] = slot.emplace(uf.find(p), blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(p);
  }
  return blocks;
}

Matrix fixed_space_from_partition(const OrbitPoints& o, const Partition& blocks) {
  const Eigen::Index n = o.points.empty() ? 0 : o.points.front().size();
  std::vector<Vector> diffs;
  for (const auto& b : blocks)
    for (std::size_t k = 1; k < b.size(); ++k)
      diffs.push_back(o.points[static_cast<std::size_t>(b[k])] - o.points[static_cast<std::size_t>(b[0])]);
  Matrix rows(static_cast<Eigen::Index>(diffs.size()), n);
  for (std::size_t k = 0; k < diffs.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = diffs[k].transpose();
  return null_space(rows);
}

}  // namespace coxplane
