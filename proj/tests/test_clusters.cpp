#include "coxplane/clusters.h"
#include "coxplane/errors.h"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>

using namespace coxplane;

namespace {

// Compatibility by searching the whole <tau+, tau-> orbit of the pair for
// one containing a negative simple root, instead of alternating.
bool compatible_by_pair_orbit(const CoxeterSystem& sys, const CompatibilityOracle& o, int a, int b) {
  std::set<std::pair<int, int>> seen{{a, b}};
  std::deque<std::pair<int, int>> queue{{a, b}};
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    if (o.is_negative_simple(x)) return std::abs(sys.coeffs[static_cast<std::size_t>(o.root(y))](x)) < 1e-9;
    if (o.is_negative_simple(y)) return std::abs(sys.coeffs[static_cast<std::size_t>(o.root(x))](y)) < 1e-9;
    for (int eps : {1, -1}) {
      const std::pair<int, int> next{o.tau(eps, x), o.tau(eps, y)};
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  FAIL("pair orbit without a negative simple root");
  return false;
}

}  // namespace

TEST_CASE("almost positive roots and root names") {
  const CoxeterSystem sys = build_coxeter_system("A3");
  const auto ap = almost_positive_roots(sys);
  CHECK(ap.size() == 9);
  CHECK(root_name(sys, ap[0]) == "-a1");
  CHECK(root_name(sys, 0) == "a1");
  std::set<std::string> names;
  for (int r : ap) names.insert(root_name(sys, r));
  CHECK(names.count("a1+a2+a3") == 1);
  // Unit-length roots of B2 have an irrational coefficient; those are numbered.
  const CoxeterSystem b2 = build_coxeter_system("B2");
  int numbered = 0;
  for (int r = 0; r < b2.num_positive; ++r) numbered += root_name(b2, r).front() == 'r';
  CHECK(numbered > 0);
  CHECK(root_name(b2, 0) == "a1");
}

TEST_CASE("tau is an involution fixing the opposite negative simples") {
  for (const char* t : {"A4", "B3", "D5", "H3", "F4", "E6"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const Bipartition bip = bipartition(sys);
    const CompatibilityOracle o(sys, bip);
    for (int eps : {1, -1})
      for (int a = 0; a < o.size(); ++a) {
        CHECK(o.tau(eps, o.tau(eps, a)) == a);
        if (a < sys.rank && bip.side[static_cast<std::size_t>(a)] == -eps) CHECK(o.tau(eps, a) == a);
      }
  }
}

TEST_CASE("compatibility: symmetric, tau-invariant, same as the pair-orbit search") {
  for (const char* t : {"A3", "B3", "D4", "I2(7)", "H3", "F4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const CompatibilityOracle o(sys, bipartition(sys));
    for (int a = 0; a < o.size(); ++a)
      for (int b = 0; b < o.size(); ++b) {
        if (a == b) continue;
        CHECK(o.compatible(a, b) == o.compatible(b, a));
        for (int eps : {1, -1}) CHECK(o.compatible(a, b) == o.compatible(o.tau(eps, a), o.tau(eps, b)));
        CHECK(o.compatible(a, b) == compatible_by_pair_orbit(sys, o, a, b));
      }
  }
}

TEST_CASE("negative simple roots are pairwise compatible") {
  const CoxeterSystem sys = build_coxeter_system("E7");
  const CompatibilityOracle o(sys, bipartition(sys));
  for (int s = 0; s < sys.rank; ++s)
    for (int t = s + 1; t < sys.rank; ++t) CHECK(o.compatible(s, t));
  // -alpha_s is compatible with a positive root iff alpha_s is absent from it.
  CHECK(!o.compatible(2, o.ap_of(2)));
}

TEST_CASE("clusters: Catalan many, each of size n") {
  for (const char* t : {"A1", "A3", "A4", "B3", "B4", "D4", "D5", "I2(6)", "I2(11)", "H3", "H4", "F4", "E6"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const CompatibilityOracle o(sys, bipartition(sys));
    const auto clusters = enumerate_clusters(o);
    CHECK(static_cast<long long>(clusters.size()) == catalan_number(sys));
    for (const auto& c : clusters) CHECK(static_cast<int>(c.size()) == sys.rank);
  }
}

TEST_CASE("clusters do not depend on which part is S+") {
  for (const char* t : {"A4", "D5", "F4"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const CompatibilityOracle a(sys, bipartition(sys, false));
    const CompatibilityOracle b(sys, bipartition(sys, true));
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) CHECK(a.compatible(x, y) == b.compatible(x, y));
  }
}

TEST_CASE("tau orbits: size (h+2)/2 or h+2 with the -w0 clauses") {
  for (const char* t : {"A3", "A4", "B3", "D4", "D5", "I2(5)", "I2(6)", "H3", "H4", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    const CoxeterSystem sys = build_coxeter_system(t);
    const CompatibilityOracle o(sys, bipartition(sys));
    const TauOrbitReport rep = tau_orbit_check(sys, o);
    CHECK(rep.ok());
    for (const auto& f : rep.failures) MESSAGE(f);
    std::size_t total = 0;
    for (const auto& orb : rep.orbits) total += orb.members.size();
    CHECK(static_cast<int>(total) == o.size());
  }
}
