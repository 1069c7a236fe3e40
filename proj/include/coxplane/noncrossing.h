#pragma once

#include "coxplane/parabolic.h"
#include "coxplane/plane.h"
#include "coxplane/report.h"

#include <unordered_map>
#include <utility>
#include <vector>

namespace coxplane {

/// The interval [1, c] in absolute order, with the parabolic subgroup of
/// each element.
struct NCInterval {
  std::vector<std::vector<GroupElement>> elements_by_rank;
  std::vector<Parabolic> nc_parabolics;  // distinct, in element order
  std::unordered_map<DynBitset, int, DynBitsetHash> nc_index;

  std::size_t size() const;
};

NCInterval enumerate_interval(const CoxeterSystem& sys, const Bipartition& bip);

/// Parabolic subgroup generated by any reduced T-word of x: the pointwise
/// stabilizer of Fix(x).
Parabolic parabolic_of(const CoxeterSystem& sys, const GroupElement& x);

const std::vector<Parabolic>& noncrossing_parabolics(const NCInterval& interval);

enum class NCClass { Noncrossing, Crossing };

NCClass classify_parabolic(const NCInterval& interval, const Parabolic& par);

struct PartitionDiagram {
  Partition blocks;                           // orbit indices
  std::vector<std::pair<int, int>> segments;  // reflection-related orbit pairs, i < j
};

PartitionDiagram partition_diagram(const Parabolic& par, const ProjectedConfiguration& cfg, const OrbitPoints& o);

bool nc_criterion_A(const PartitionDiagram& diag, const ProjectedConfiguration& cfg, double tol);
bool nc_criterion_D(const PartitionDiagram& diag, const ProjectedConfiguration& cfg, double tol);

enum class NCCriterion { A, D };

/// Compares the criterion against the interval on every parabolic subgroup.
ExactnessReport verify_nc(const CoxeterSystem& sys, const PlaneSetup& setup, NCCriterion criterion,
                          const std::vector<Parabolic>& parabolics, const NCInterval& interval);

/// Conjugacy class summary: size and number of noncrossing members.
struct ClassCount {
  Parabolic representative;  // first member in enumeration order
  int size = 0;
  int noncrossing = 0;
};

std::vector<ClassCount> class_counts(const CoxeterSystem& sys, const std::vector<Parabolic>& parabolics,
                                     const NCInterval& interval);

/// Orbits of a parabolic list under conjugation by c+ and c-, as positions
/// in `parabolics`; each orbit is sorted and orbits are ordered by their
/// first member.
std::vector<std::vector<int>> dihedral_orbits(const CoxeterSystem& sys, const Bipartition& bip,
                                              const std::vector<Parabolic>& parabolics);

std::string describe_parabolic(const Parabolic& par);

}  // namespace coxplane
