#pragma once

#include "coxplane/bitset.h"
#include "coxplane/coxeter.h"
#include "coxplane/plane.h"

#include <string>
#include <vector>

namespace coxplane {

/// Almost positive roots as system root indices: the negative simple roots by
/// index, then the positive roots in registry order. Positions in this list
/// are the "ap indices" used throughout.
std::vector<int> almost_positive_roots(const CoxeterSystem& sys);

/// tau_eps on a root index; throws RootEscaped if the image is not almost positive.
int tau(const CoxeterSystem& sys, const Bipartition& bip, int eps, int root);

/// Human-readable name: -a3, a1+a2, 2a1+a3 for integral roots; r17 otherwise.
std::string root_name(const CoxeterSystem& sys, int root);

/// Compatibility relation on almost positive roots with the tau tables.
class CompatibilityOracle {
 public:
  CompatibilityOracle(const CoxeterSystem& sys, const Bipartition& bip);

  int size() const { return static_cast<int>(roots_.size()); }
  int root(int ap) const { return roots_[static_cast<std::size_t>(ap)]; }
  /// ap index of a system root, or -1.
  int ap_of(int root) const { return ap_of_root_[static_cast<std::size_t>(root)]; }
  bool is_negative_simple(int ap) const { return ap < rank_; }

  int tau(int eps, int ap) const { return (eps > 0 ? tau_plus_ : tau_minus_)[static_cast<std::size_t>(ap)]; }

  bool compatible(int a, int b) const { return table_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  /// Compatible distinct roots, as a bitset over ap indices.
  const DynBitset& neighbors(int a) const { return table_[static_cast<std::size_t>(a)]; }

  /// Compatibility decided by alternating tau-, tau+, ... until one root is
  /// a negative simple, then reading the coefficient (what the table holds).
  bool compute(int a, int b) const;

  const std::vector<int>& roots() const { return roots_; }

 private:
  bool base_rule(int neg_simple_ap, int other_ap) const;

  const CoxeterSystem* sys_;
  int rank_;
  int h_;
  std::vector<int> roots_;
  std::vector<int> ap_of_root_;
  std::vector<int> tau_plus_;
  std::vector<int> tau_minus_;
  std::vector<DynBitset> table_;  // without self loops
};

struct TauOrbit {
  std::vector<int> members;          // ap indices
  std::vector<int> negative_simples;  // simple indices s with -alpha_s in the orbit
};

struct TauOrbitReport {
  std::vector<TauOrbit> orbits;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Orbit of one almost positive root under <tau+, tau->.
TauOrbit tau_orbit(const CompatibilityOracle& oracle, int ap);

/// All orbits, checked against the size/negative-simple dichotomy and the
/// -w0 clauses.
TauOrbitReport tau_orbit_check(const CoxeterSystem& sys, const CompatibilityOracle& oracle);

/// Maximal pairwise compatible sets (ap indices, sorted), in lexicographic order.
std::vector<std::vector<int>> enumerate_clusters(const CompatibilityOracle& oracle);

}  // namespace coxplane
