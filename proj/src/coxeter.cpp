#include "coxplane/coxeter.h"

#include "coxplane/errors.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <string>

namespace coxplane {

// ---------------------------------------------------------------------------
// Type labels and diagram data
// ---------------------------------------------------------------------------

std::string CoxeterType::label() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I: return "I2(" + std::to_string(m) + ")";
  }
  return "?";
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw UnknownType("cannot parse Coxeter type '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

}  // namespace

CoxeterType CoxeterType::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (s.size() < 2) throw UnknownType("cannot parse Coxeter type '" + std::string(text) + "'");
  if (s == "G2") return {Family::I, 2, 6};

  CoxeterType t;
  switch (s[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::B; break;  // same group, same diagrams
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'H': t.family = Family::H; break;
    case 'I': t.family = Family::I; break;
    default: throw UnknownType("unknown Coxeter family in '" + std::string(text) + "'");
  }
  std::string_view rest(s);
  rest.remove_prefix(1);
  if (t.family == Family::I) {
    if (rest.empty() || rest[0] != '2') throw UnknownType("dihedral types are written I2(m): '" + std::string(text) + "'");
    rest.remove_prefix(1);
    if (!rest.empty() && (rest.front() == '(' || rest.front() == ':' || rest.front() == '_')) {
      const bool paren = rest.front() == '(';
      rest.remove_prefix(1);
      if (paren) {
        if (rest.empty() || rest.back() != ')') throw UnknownType("unbalanced parenthesis in '" + std::string(text) + "'");
        rest.remove_suffix(1);
      }
    }
    t.rank = 2;
    t.m = parse_int(rest, text);
  } else {
    t.rank = parse_int(rest, text);
  }

  const bool ok = [&] {
    switch (t.family) {
      case Family::A: return t.rank >= 1;
      case Family::B: return t.rank >= 2;
      case Family::D: return t.rank >= 4;
      case Family::E: return t.rank >= 6 && t.rank <= 8;
      case Family::F: return t.rank == 4;
      case Family::H: return t.rank == 3 || t.rank == 4;
      case Family::I: return t.m >= 3;
    }
    return false;
  }();
  if (!ok) throw UnknownType("no finite irreducible Coxeter system " + t.label());
  return t;
}

CoxeterMatrix coxeter_matrix(const CoxeterType& type) {
  const int n = type.rank;
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto join = [&](int i, int j, int order) {  // 1-based labels
    m[i - 1][j - 1] = order;
    m[j - 1][i - 1] = order;
  };
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) join(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) join(i, i + 1, 3);
      join(n - 1, n, 4);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) join(i, i + 1, 3);
      join(n - 2, n, 3);
      break;
    case Family::E:  // Bourbaki labeling: 1-3-4-5-...; 2 hangs off 4
      join(1, 3, 3);
      join(2, 4, 3);
      for (int i = 3; i < n; ++i) join(i, i + 1, 3);
      break;
    case Family::F:
      join(1, 2, 3);
      join(2, 3, 4);
      join(3, 4, 3);
      break;
    case Family::H:
      for (int i = 1; i < n - 1; ++i) join(i, i + 1, 3);
      join(n - 1, n, 5);
      break;
    case Family::I:
      join(1, 2, type.m);
      break;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Group elements
// ---------------------------------------------------------------------------

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  std::vector<int> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[static_cast<std::size_t>(b.perm_[i])];
  return GroupElement(std::move(p), a.matrix_ * b.matrix_);
}

GroupElement GroupElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  return GroupElement(std::move(p), matrix_.transpose());
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : g.perm()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

Matrix gram_matrix(const CoxeterMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Matrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return b;
}

/// Exponents read off the eigen-angles 2 pi e / h of a Coxeter element.
std::vector<int> exponents_from(const Matrix& c, int h) {
  Eigen::EigenSolver<Matrix> es(c, false);
  std::vector<int> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto lambda = es.eigenvalues()(i);
    double theta = std::atan2(lambda.imag(), lambda.real());
    if (theta < 0) theta += 2 * std::numbers::pi;
    const double e = theta * h / (2 * std::numbers::pi);
    const double r = std::round(e);
    if (std::abs(e - r) > 1e-6)
      throw InternalError("eigen-angle of the Coxeter element is not a multiple of 2pi/h");
    out.push_back(static_cast<int>(r) == 0 ? h : static_cast<int>(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long irreducible_order(const CoxeterMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 1) return 2;
  const Matrix b = gram_matrix(m);
  // Simple reflections acting on coefficient vectors over the simple roots.
  auto refl = [&](Eigen::Index i) {
    Matrix r = Matrix::Identity(n, n);
    r.row(i) -= 2 * b.row(i);
    return r;
  };
  const auto color = diagram_coloring(m);
  Matrix cp = Matrix::Identity(n, n), cm = Matrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) (color[static_cast<std::size_t>(i)] == 0 ? cp : cm) *= refl(i);
  const Matrix c = cm * cp;
  Matrix p = Matrix::Identity(n, n);
  int h = 0;
  for (int k = 1; k <= 10000; ++k) {
    p = p * c;
    if ((p - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8) {
      h = k;
      break;
    }
  }
  if (h == 0) throw NonFiniteSystem("Coxeter element of infinite order");
  long long order = 1;
  for (int e : exponents_from(c, h)) order *= e + 1;
  return order;
}

}  // namespace

std::vector<int> diagram_coloring(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 2) continue;
        if (color[j] < 0) {
          color[j] = 1 - color[i];
          queue.push_back(j);
        } else if (color[j] == color[i]) {
          throw NonFiniteSystem("Coxeter diagram is not bipartite");
        }
      }
    }
  }
  return color;
}

long long coxeter_group_order(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  long long order = 1;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && m[comp[k]][j] != 2 && j != comp[k]) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    CoxeterMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b) sub[a][b] = m[comp[a]][comp[b]];
    order *= irreducible_order(sub);
  }
  return order;
}

int CoxeterSystem::find_root(const Vector& v) const { return coord_registry.find(v); }
int CoxeterSystem::find_root_by_coeffs(const Vector& c) const { return coeff_registry.find(c); }

CoxeterSystem build_coxeter_system(std::string_view label, double eps) {
  return build_coxeter_system(CoxeterType::parse(label), eps);
}

CoxeterSystem build_coxeter_system(const CoxeterType& type, double eps) {
  CoxeterSystem sys;
  sys.type = type;
  sys.rank = type.rank;
  sys.eps = eps;
  sys.coxeter = coxeter_matrix(type);
  sys.form = gram_matrix(sys.coxeter);
  const int n = sys.rank;

  Eigen::LLT<Matrix> llt(sys.form);
  if (llt.info() != Eigen::Success) throw NonFiniteSystem("bilinear form of " + type.label() + " is not positive definite");
  sys.simple_roots = llt.matrixL();

  // Positive roots: closure of the simple roots under simple reflections,
  // carried out on coefficient vectors.
  const std::size_t bound = 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max({30, 2 * n, type.m}));
  VectorRegistry positives(eps);
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) queue.push_back(positives.insert(Vector::Unit(n, i)));
  while (!queue.empty()) {
    const Vector r = positives[static_cast<std::size_t>(queue.front())];
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      Vector img = r;
      img(j) -= 2 * sys.form.row(j).dot(r);
      if (img.minCoeff() < -eps) continue;  // only r = alpha_j leaves the positive cone
      const std::size_t before = positives.size();
      const int idx = positives.insert(img);
      if (positives.size() != before) {
        if (positives.size() > bound) throw NonFiniteSystem("root closure of " + type.label() + " does not terminate");
        queue.push_back(idx);
      }
    }
  }
  sys.num_positive = static_cast<int>(positives.size());

  sys.coeff_registry = VectorRegistry(eps);
  sys.coord_registry = VectorRegistry(eps);
  for (int sign : {1, -1}) {
    for (const Vector& c : positives.items()) {
      const Vector coeff = sign * c;
      sys.coeffs.push_back(coeff);
      sys.coords.push_back(sys.simple_roots.transpose() * coeff);
      sys.coeff_registry.insert(coeff);
      sys.coord_registry.insert(sys.coords.back());
    }
  }

  const int nroots = sys.num_roots();
  auto reflection_through = [&](int beta) {
    const Vector& b = sys.coords[static_cast<std::size_t>(beta)];
    std::vector<int> perm(static_cast<std::size_t>(nroots));
    for (int g = 0; g < nroots; ++g) {
      const Vector& v = sys.coords[static_cast<std::size_t>(g)];
      const int img = sys.coord_registry.find(v - 2 * v.dot(b) * b);
      if (img < 0) throw NonFiniteSystem("root system of " + type.label() + " is not closed under reflections");
      perm[static_cast<std::size_t>(g)] = img;
    }
    Matrix mat = Matrix::Identity(n, n) - 2 * b * b.transpose();
    return GroupElement(std::move(perm), std::move(mat));
  };
  for (int t = 0; t < sys.num_positive; ++t) sys.reflections.push_back(reflection_through(t));
  for (int i = 0; i < n; ++i) sys.simple_reflections.push_back(sys.reflections[static_cast<std::size_t>(i)]);

  // Coxeter number: order of the bipartite Coxeter element on the roots.
  const auto color = diagram_coloring(sys.coxeter);
  GroupElement cp = identity_element(sys), cm = identity_element(sys);
  for (int i = 0; i < n; ++i) (color[static_cast<std::size_t>(i)] == 0 ? cp : cm) = (color[static_cast<std::size_t>(i)] == 0 ? cp : cm) * sys.simple_reflections[static_cast<std::size_t>(i)];
  const GroupElement c = cm * cp;
  long long order = 1;
  std::vector<bool> seen(static_cast<std::size_t>(nroots), false);
  for (int i = 0; i < nroots; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = c(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  sys.coxeter_number = static_cast<int>(order);
  if (n >= 1 && 2 * sys.num_positive != n * sys.coxeter_number)
    throw InternalError("Coxeter number of " + type.label() + " disagrees with 2|T|/n");

  sys.exponents = exponents_from(c.matrix(), sys.coxeter_number);
  if (std::accumulate(sys.exponents.begin(), sys.exponents.end(), 0) != sys.num_positive)
    throw InternalError("exponents of " + type.label() + " do not sum to |T|");
  return sys;
}

// ---------------------------------------------------------------------------
// Element operations
// ---------------------------------------------------------------------------

GroupElement identity_element(const CoxeterSystem& sys) {
  std::vector<int> p(static_cast<std::size_t>(sys.num_roots()));
  std::iota(p.begin(), p.end(), 0);
  return GroupElement(std::move(p), Matrix::Identity(sys.rank, sys.rank));
}

GroupElement element_from_simples(const CoxeterSystem& sys, const std::vector<int>& word) {
  GroupElement g = identity_element(sys);
  for (int s : word) {
    if (s < 0 || s >= sys.rank)
      throw IndexOutOfRange("simple generator index " + std::to_string(s) + " out of range for " + sys.type.label());
    g = g * sys.simple_reflections[static_cast<std::size_t>(s)];
  }
  return g;
}

Vector apply(const GroupElement& el, const Vector& v) { return el.matrix() * v; }

Matrix fixed_space(const GroupElement& el) {
  const auto n = el.matrix().rows();
  return null_space(el.matrix() - Matrix::Identity(n, n));
}

int reflection_length(const GroupElement& el) {
  const auto n = el.matrix().rows();
  return numerical_rank(el.matrix() - Matrix::Identity(n, n));
}

GroupElement longest_element(const CoxeterSystem& sys) {
  GroupElement w = identity_element(sys);
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < sys.rank; ++i)
      if (sys.is_positive(w(i))) {
        ascent = i;
        break;
      }
    if (ascent < 0) return w;
    w = w * sys.simple_reflections[static_cast<std::size_t>(ascent)];
  }
}

long long group_order(const CoxeterSystem& sys) {
  long long order = 1;
  for (int e : sys.exponents) order *= e + 1;
  return order;
}

long long catalan_number(const CoxeterSystem& sys) {
  long long num = 1, den = 1;
  const int h = sys.coxeter_number;
  for (int e : sys.exponents) {
    num *= e + h + 1;
    den *= e + 1;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw InternalError("Catalan number of " + sys.type.label() + " is not an integer");
  return num;
}

}  // namespace coxplane
