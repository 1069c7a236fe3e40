#pragma once

#include "coxplane/bitset.h"
#include "coxplane/coxeter.h"

#include <cstddef>
#include <vector>

namespace coxplane {

/// One W-orbit of vectors, with the action of every reflection tabulated.
struct OrbitPoints {
  std::vector<Vector> points;
  VectorRegistry index{kDefaultTolerance};
  /// reflection_action[t][p]: index of t applied to point p.
  std::vector<std::vector<int>> reflection_action;

  std::size_t size() const { return points.size(); }
  /// Image of point p under a group element.
  int act(const GroupElement& g, int p) const;
};

/// Orbit of v under W, generated by closure under simple reflections.
OrbitPoints orbit_of(const CoxeterSystem& sys, const Vector& v);

/// Unit vector in the direction of the i-th fundamental weight.
Vector fundamental_weight(const CoxeterSystem& sys, int i);

/// |W| / |W_{S \ {i}}|, without enumerating the group.
long long fundamental_orbit_size(const CoxeterSystem& sys, int i);

/// Index of the fundamental weight with the smallest orbit (lowest index on ties).
int smallest_orbit_index(const CoxeterSystem& sys);
OrbitPoints smallest_orbit(const CoxeterSystem& sys);

struct Parabolic {
  DynBitset reflset;   // over positive root indices
  Matrix fixed_basis;  // orthonormal columns
  int rank = 0;

  bool operator==(const Parabolic& o) const { return reflset == o.reflset; }
};

/// Parabolic subgroup fixing the intersection of the hyperplanes of `seed`.
Parabolic parabolic_from_reflections(const CoxeterSystem& sys, const std::vector<int>& seed);
Parabolic parabolic_from_reflections(const CoxeterSystem& sys, const DynBitset& seed);

/// Parabolic subgroup pointwise fixing the span of the columns of `subspace`.
Parabolic parabolic_fixing(const CoxeterSystem& sys, const Matrix& subspace);

/// Standard parabolic W_J for simple indices J (0-based).
Parabolic standard_parabolic(const CoxeterSystem& sys, const std::vector<int>& simples);

/// g W' g^{-1}.
Parabolic conjugate(const CoxeterSystem& sys, const Parabolic& par, const GroupElement& g);

/// Every parabolic subgroup once, ordered by rank and then by reflset.
/// Throws BudgetExceeded once more than max_count have been found.
std::vector<Parabolic> enumerate_parabolics(const CoxeterSystem& sys, std::size_t max_count);

/// Class id of each parabolic under conjugation by W. The list must be
/// closed under conjugation (as enumerate_parabolics output is).
std::vector<int> conjugacy_classes(const CoxeterSystem& sys, const std::vector<Parabolic>& pars);

/// Blocks as sorted lists of orbit indices, ordered by smallest element.
using Partition = std::vector<std::vector<int>>;

Partition orbit_partition(const Parabolic& par, const OrbitPoints& o);

/// Orthonormal basis of the orthogonal complement of span{x - y : x, y in a
/// common block}; equals the fixed space of the parabolic that produced it.
Matrix fixed_space_from_partition(const OrbitPoints& o, const Partition& blocks);

}  // namespace coxplane
