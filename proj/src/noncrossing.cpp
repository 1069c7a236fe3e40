#include "coxplane/noncrossing.h"

#include "coxplane/errors.h"
#include "coxplane/union_find.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace coxplane {

std::size_t NCInterval::size() const {
  std::size_t n = 0;
  for (const auto& level : elements_by_rank) n += level.size();
  return n;
}

Parabolic parabolic_of(const CoxeterSystem& sys, const GroupElement& x) {
  return parabolic_fixing(sys, fixed_space(x));
}

NCInterval enumerate_interval(const CoxeterSystem& sys, const Bipartition& bip) {
  NCInterval iv;
  const int n = sys.rank;
  iv.elements_by_rank.push_back({identity_element(sys)});
  for (int k = 0; k < n; ++k) {
    std::unordered_set<GroupElement, GroupElementHash> seen;
    std::vector<GroupElement> next;
    for (const GroupElement& w : iv.elements_by_rank[static_cast<std::size_t>(k)]) {
      for (const GroupElement& t : sys.reflections) {
        GroupElement x = t * w;
        if (seen.count(x)) continue;
        seen.insert(x);
        if (reflection_length(x) != k + 1) continue;
        if (reflection_length(x.inverse() * bip.c) != n - k - 1) continue;
        next.push_back(std::move(x));
      }
    }
    std::sort(next.begin(), next.end());
    iv.elements_by_rank.push_back(std::move(next));
  }
  if (iv.elements_by_rank.back().size() != 1 || !(iv.elements_by_rank.back().front() == bip.c))
    throw InternalError("top of the interval is not c");

  for (const auto& level : iv.elements_by_rank) {
    for (const GroupElement& x : level) {
      Parabolic p = parabolic_of(sys, x);
      if (p.rank != reflection_length(x)) throw InternalError("parabolic rank differs from absolute length");
      if (iv.nc_index.emplace(p.reflset, static_cast<int>(iv.nc_parabolics.size())).second)
        iv.nc_parabolics.push_back(std::move(p));
    }
  }
  return iv;
}

const std::vector<Parabolic>& noncrossing_parabolics(const NCInterval& interval) { return interval.nc_parabolics; }

NCClass classify_parabolic(const NCInterval& interval, const Parabolic& par) {
  return interval.nc_index.count(par.reflset) ? NCClass::Noncrossing : NCClass::Crossing;
}

PartitionDiagram partition_diagram(const Parabolic& par, const ProjectedConfiguration& cfg, const OrbitPoints& o) {
  PartitionDiagram d;
  d.blocks = orbit_partition(par, o);
  std::set<std::pair<int, int>> segs;
  par.reflset.for_each([&](std::size_t t) {
    const auto& row = o.reflection_action[t];
    for (int x = 0; x < static_cast<int>(row.size()); ++x) {
      const int y = row[static_cast<std::size_t>(x)];
      if (y == x) continue;
      if (cfg.point_of[static_cast<std::size_t>(x)].at_origin() && cfg.point_of[static_cast<std::size_t>(y)].at_origin())
        throw DegenerateSegment("reflection-related points both project to the origin");
      segs.emplace(std::min(x, y), std::max(x, y));
    }
  });
  d.segments.assign(segs.begin(), segs.end());
  return d;
}

namespace {

std::vector<std::vector<Vec2>> block_hulls(const PartitionDiagram& diag, const ProjectedConfiguration& cfg, double tol) {
  std::vector<std::vector<Vec2>> hulls;
  for (const auto& b : diag.blocks) {
    std::vector<Vec2> pts;
    for (int p : b) pts.push_back(cfg.snapped(p));
    hulls.push_back(convex_hull(std::move(pts), tol));
  }
  return hulls;
}

double diameter(const std::vector<Vec2>& pts) {
  double d = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
  return d;
}

}  // namespace

bool nc_criterion_A(const PartitionDiagram& diag, const ProjectedConfiguration& cfg, double tol) {
  const auto hulls = block_hulls(diag, cfg, tol);
  for (std::size_t i = 0; i < hulls.size(); ++i)
    for (std::size_t j = i + 1; j < hulls.size(); ++j)
      if (!hull_intersection_witnesses(hulls[i], hulls[j], tol).empty()) return false;
  return true;
}

bool nc_criterion_D(const PartitionDiagram& diag, const ProjectedConfiguration& cfg, double tol) {
  const auto hulls = block_hulls(diag, cfg, tol);
  for (std::size_t i = 0; i < hulls.size(); ++i) {
    for (std::size_t j = i + 1; j < hulls.size(); ++j) {
      const auto w = hull_intersection_witnesses(hulls[i], hulls[j], tol);
      if (w.empty()) continue;
      if (diameter(w) > tol) return false;
      if (!on_hull_boundary(hulls[i], w.front(), tol) || !on_hull_boundary(hulls[j], w.front(), tol)) return false;
    }
  }
  return true;
}

std::string describe_parabolic(const Parabolic& par) {
  std::string s = "rank " + std::to_string(par.rank) + " {";
  bool first = true;
  par.reflset.for_each([&](std::size_t t) {
    if (!first) s += ",";
    s += "t" + std::to_string(t);
    first = false;
  });
  return s + "}";
}

ExactnessReport verify_nc(const CoxeterSystem& sys, const PlaneSetup& setup, NCCriterion criterion,
                          const std::vector<Parabolic>& parabolics, const NCInterval& interval) {
  ExactnessReport rep;
  rep.type_label = sys.type.label();
  rep.criterion = criterion == NCCriterion::A ? "ncA" : "ncD";
  rep.total = parabolics.size();
  const double tol = 1e3 * sys.eps;
  for (const Parabolic& par : parabolics) {
    const PartitionDiagram d = partition_diagram(par, setup.config, setup.orbit);
    const bool geometric = criterion == NCCriterion::A ? nc_criterion_A(d, setup.config, tol) : nc_criterion_D(d, setup.config, tol);
    const bool algebraic = classify_parabolic(interval, par) == NCClass::Noncrossing;
    if (geometric != algebraic) {
      Mismatch m;
      m.first = describe_parabolic(par);
      m.ids = par.reflset.indices();
      m.rank = par.rank;
      m.geometric = geometric;
      m.algebraic = algebraic;
      rep.mismatches.push_back(std::move(m));
    }
  }
  return rep;
}

std::vector<ClassCount> class_counts(const CoxeterSystem& sys, const std::vector<Parabolic>& parabolics,
                                     const NCInterval& interval) {
  const auto cls = conjugacy_classes(sys, parabolics);
  std::vector<ClassCount> out;
  for (std::size_t k = 0; k < parabolics.size(); ++k) {
    const auto c = static_cast<std::size_t>(cls[k]);
    if (c == out.size()) out.push_back(ClassCount{parabolics[k], 0, 0});
    ++out[c].size;
    if (classify_parabolic(interval, parabolics[k]) == NCClass::Noncrossing) ++out[c].noncrossing;
  }
  return out;
}

std::vector<std::vector<int>> dihedral_orbits(const CoxeterSystem& sys, const Bipartition& bip,
                                              const std::vector<Parabolic>& parabolics) {
  std::unordered_map<DynBitset, int, DynBitsetHash> where;
  for (std::size_t k = 0; k < parabolics.size(); ++k) where.emplace(parabolics[k].reflset, static_cast<int>(k));
  UnionFind uf(parabolics.size());
  for (std::size_t k = 0; k < parabolics.size(); ++k) {
    for (const GroupElement* g : {&bip.c_plus, &bip.c_minus}) {
      auto it = where.find(conjugate(sys, parabolics[k], *g).reflset);
      if (it == where.end()) throw InternalError("parabolic list is not closed under conjugation by c+ and c-");
      uf.unite(static_cast<int>(k), it->second);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t k = 0; k < parabolics.size(); ++k) groups[uf.find(static_cast<int>(k))].push_back(static_cast<int>(k));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace coxplane
