#pragma once

#include "coxplane/linalg.h"

#include <string>
#include <string_view>
#include <vector>

namespace coxplane {

enum class Family { A, B, D, E, F, H, I };

/// Type label of a finite irreducible Coxeter system, e.g. A3, E6, I2(7).
struct CoxeterType {
  Family family = Family::A;
  int rank = 1;
  int m = 0;  // dihedral parameter, I2(m) only

  std::string label() const;

  /// Accepts "A3", "e6", "I2(7)", "I2:7", "G2".
  static CoxeterType parse(std::string_view text);

  bool operator==(const CoxeterType&) const = default;
};

using CoxeterMatrix = std::vector<std::vector<int>>;

CoxeterMatrix coxeter_matrix(const CoxeterType& type);

/// A group element, stored as the permutation it induces on the root system
/// together with its orthogonal matrix. Equality and hashing use the
/// permutation only, which is exact.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<int> perm, Matrix matrix) : perm_(std::move(perm)), matrix_(std::move(matrix)) {}

  const std::vector<int>& perm() const { return perm_; }
  const Matrix& matrix() const { return matrix_; }

  /// Image of root index `root`.
  int operator()(int root) const { return perm_[static_cast<std::size_t>(root)]; }

  /// Composition: (a * b)(x) = a(b(x)).
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  GroupElement inverse() const;
  bool is_identity() const;

  bool operator==(const GroupElement& o) const { return perm_ == o.perm_; }
  bool operator<(const GroupElement& o) const { return perm_ < o.perm_; }

 private:
  std::vector<int> perm_;
  Matrix matrix_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const;
};

/// A finite irreducible Coxeter system with its full root system.
///
/// Roots are unit vectors. Indices 0..T-1 are the positive roots in
/// generation order (the simple roots come first); index i + T is the
/// negative of root i.
struct CoxeterSystem {
  CoxeterType type;
  int rank = 0;
  CoxeterMatrix coxeter;
  Matrix form;          // Gram matrix of the simple roots
  Matrix simple_roots;  // row i: Euclidean coordinates of alpha_i
  std::vector<Vector> coords;
  std::vector<Vector> coeffs;  // coefficients over the simple roots
  int num_positive = 0;        // |T|
  std::vector<GroupElement> simple_reflections;
  std::vector<GroupElement> reflections;  // reflections[i] reflects root i
  int coxeter_number = 0;
  std::vector<int> exponents;
  double eps = kDefaultTolerance;

  int num_roots() const { return 2 * num_positive; }
  int negate(int root) const { return root < num_positive ? root + num_positive : root - num_positive; }
  bool is_positive(int root) const { return root < num_positive; }
  /// Index of the positive root among {root, -root}; also the reflection index.
  int positive_of(int root) const { return root % num_positive; }
  int find_root(const Vector& coords_of_root) const;
  int find_root_by_coeffs(const Vector& coefficients) const;

  VectorRegistry coeff_registry{kDefaultTolerance};
  VectorRegistry coord_registry{kDefaultTolerance};
};

CoxeterSystem build_coxeter_system(const CoxeterType& type, double eps = kDefaultTolerance);
CoxeterSystem build_coxeter_system(std::string_view label, double eps = kDefaultTolerance);

GroupElement identity_element(const CoxeterSystem& sys);

/// Product s_{w[0]} s_{w[1]} ... of simple reflections (0-based indices).
GroupElement element_from_simples(const CoxeterSystem& sys, const std::vector<int>& word);

Vector apply(const GroupElement& el, const Vector& v);

/// Orthonormal basis (columns) of the fixed space of el.
Matrix fixed_space(const GroupElement& el);

/// Absolute length, computed as the codimension of the fixed space.
int reflection_length(const GroupElement& el);

GroupElement longest_element(const CoxeterSystem& sys);

/// Two-coloring of the (tree) Coxeter diagram with vertex 0 colored 0.
std::vector<int> diagram_coloring(const CoxeterMatrix& m);

/// Order of the finite Coxeter group with matrix m (any number of
/// components; the empty matrix gives 1).
long long coxeter_group_order(const CoxeterMatrix& m);

long long group_order(const CoxeterSystem& sys);

/// prod (e_i + h + 1) / (e_i + 1), evaluated exactly.
long long catalan_number(const CoxeterSystem& sys);

}  // namespace coxplane
