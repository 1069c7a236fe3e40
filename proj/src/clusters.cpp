#include "coxplane/clusters.h"

#include "coxplane/errors.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace coxplane {

std::vector<int> almost_positive_roots(const CoxeterSystem& sys) {
  std::vector<int> out;
  for (int s = 0; s < sys.rank; ++s) out.push_back(sys.negate(s));
  for (int t = 0; t < sys.num_positive; ++t) out.push_back(t);
  return out;
}

int tau(const CoxeterSystem& sys, const Bipartition& bip, int eps, int root) {
  const bool neg_simple = !sys.is_positive(root) && sys.negate(root) < sys.rank;
  if (neg_simple && bip.side[static_cast<std::size_t>(sys.negate(root))] == -eps) return root;
  const int img = bip.c_eps(eps)(root);
  if (!sys.is_positive(img) && sys.negate(img) >= sys.rank)
    throw RootEscaped("tau maps " + root_name(sys, root) + " outside the almost positive roots");
  return img;
}

std::string root_name(const CoxeterSystem& sys, int root) {
  const int pos = sys.positive_of(root);
  const std::string sign = sys.is_positive(root) ? "" : "-";
  const Vector& c = sys.coeffs[static_cast<std::size_t>(pos)];
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (std::abs(c(i) - std::round(c(i))) > 1e-6) return sign + "r" + std::to_string(pos + 1);
  std::string body;
  int terms = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const long k = std::lround(c(i));
    if (k == 0) continue;
    if (terms++) body += "+";
    if (k != 1) body += std::to_string(k);
    body += "a" + std::to_string(i + 1);
  }
  return terms > 1 && !sign.empty() ? sign + "(" + body + ")" : sign + body;
}

CompatibilityOracle::CompatibilityOracle(const CoxeterSystem& sys, const Bipartition& bip)
    : sys_(&sys), rank_(sys.rank), h_(sys.coxeter_number), roots_(almost_positive_roots(sys)) {
  ap_of_root_.assign(static_cast<std::size_t>(sys.num_roots()), -1);
  for (std::size_t k = 0; k < roots_.size(); ++k) ap_of_root_[static_cast<std::size_t>(roots_[k])] = static_cast<int>(k);
  for (int r : roots_) {
    tau_plus_.push_back(ap_of(coxplane::tau(sys, bip, 1, r)));
    tau_minus_.push_back(ap_of(coxplane::tau(sys, bip, -1, r)));
  }
  const auto n = roots_.size();
  table_.assign(n, DynBitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (compute(static_cast<int>(a), static_cast<int>(b))) {
        table_[a].set(b);
        table_[b].set(a);
      }
}

bool CompatibilityOracle::base_rule(int neg_simple_ap, int other_ap) const {
  const int s = neg_simple_ap;  // ap index of -alpha_s is s
  const double coeff = sys_->coeffs[static_cast<std::size_t>(root(other_ap))](s);
  return std::abs(coeff) < sys_->eps;
}

bool CompatibilityOracle::compute(int a, int b) const {
  if (a == b) return true;
  int eps = -1;
  for (int step = 0; step <= h_ + 2; ++step) {
    const bool na = is_negative_simple(a), nb = is_negative_simple(b);
    if (na && nb) {
      const bool v1 = base_rule(a, b), v2 = base_rule(b, a);
      if (v1 != v2) throw InternalError("base rule is not symmetric on negative simple roots");
      return v1;
    }
    if (na) return base_rule(a, b);
    if (nb) return base_rule(b, a);
    a = tau(eps, a);
    b = tau(eps, b);
    eps = -eps;
  }
  throw NoNegativeSimpleReached("no negative simple root after h+2 tau steps");
}

TauOrbit tau_orbit(const CompatibilityOracle& oracle, int ap) {
  TauOrbit orb;
  std::vector<bool> seen(static_cast<std::size_t>(oracle.size()), false);
  std::deque<int> queue{ap};
  seen[static_cast<std::size_t>(ap)] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    orb.members.push_back(x);
    for (int eps : {1, -1}) {
      const int y = oracle.tau(eps, x);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(orb.members.begin(), orb.members.end());
  for (int m : orb.members)
    if (oracle.is_negative_simple(m)) orb.negative_simples.push_back(m);
  return orb;
}

TauOrbitReport tau_orbit_check(const CoxeterSystem& sys, const CompatibilityOracle& oracle) {
  TauOrbitReport rep;
  const int h = sys.coxeter_number;
  const GroupElement w0 = longest_element(sys);
  std::vector<bool> seen(static_cast<std::size_t>(oracle.size()), false);
  for (int ap = 0; ap < oracle.size(); ++ap) {
    if (seen[static_cast<std::size_t>(ap)]) continue;
    TauOrbit orb = tau_orbit(oracle, ap);
    for (int m : orb.members) seen[static_cast<std::size_t>(m)] = true;
    const int size = static_cast<int>(orb.members.size());
    const auto& neg = orb.negative_simples;
    const std::string where = "tau-orbit of " + root_name(sys, oracle.root(ap)) + ": ";
    if (2 * size == h + 2) {
      if (neg.size() != 1)
        rep.failures.push_back(where + "size (h+2)/2 but meets -Pi " + std::to_string(neg.size()) + " times");
      else if (w0(neg[0]) != sys.negate(neg[0]))
        rep.failures.push_back(where + "its negative simple root is not fixed by -w0");
    } else if (size == h + 2) {
      if (neg.size() != 2)
        rep.failures.push_back(where + "size h+2 but meets -Pi " + std::to_string(neg.size()) + " times");
      else if (w0(neg[0]) != sys.negate(neg[1]))
        rep.failures.push_back(where + "its two negative simple roots are not exchanged by -w0");
    } else {
      rep.failures.push_back(where + "size " + std::to_string(size) + " is neither (h+2)/2 nor h+2");
    }
    rep.orbits.push_back(std::move(orb));
  }
  return rep;
}

namespace {

void bron_kerbosch(const CompatibilityOracle& g, std::vector<int>& r, DynBitset p, DynBitset x,
                   std::vector<std::vector<int>>& out) {
  if (p.none() && x.none()) {
    std::vector<int> c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot: vertex of P u X with the most neighbours in P.
  int pivot = -1;
  std::size_t best = 0;
  (p | x).for_each([&](std::size_t u) {
    const std::size_t k = (p & g.neighbors(static_cast<int>(u))).count();
    if (pivot < 0 || k > best) {
      pivot = static_cast<int>(u);
      best = k;
    }
  });
  const DynBitset candidates = p.minus(g.neighbors(pivot));
  candidates.for_each([&](std::size_t v) {
    const DynBitset& nv = g.neighbors(static_cast<int>(v));
    r.push_back(static_cast<int>(v));
    bron_kerbosch(g, r, p & nv, x & nv, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

std::vector<std::vector<int>> enumerate_clusters(const CompatibilityOracle& oracle) {
  const auto n = static_cast<std::size_t>(oracle.size());
  DynBitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bron_kerbosch(oracle, r, all, DynBitset(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxplane
