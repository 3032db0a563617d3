// Exact rational linear algebra and geometric predicates.
//
// Everything here is pure and works on immutable values. No floating point
// is involved anywhere; signs, volumes and containment are exact.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sperner/rational.hpp"

namespace sperner {

class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim) {}
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Rational& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, const Rational& s) { return a *= s; }
  friend Point operator*(const Rational& s, Point a) { return a *= s; }

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic; lets points key ordered containers.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const Point& p);

Rational dot(const std::vector<Rational>& a, const Point& p);

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(Matrix m);

/// Rank of a (possibly rectangular) matrix.
int matrix_rank(Matrix m);

/// Solves A x = b when A is square and nonsingular.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);

/// Dimension of the affine hull; -1 for an empty set.
int affine_rank(std::span<const Point> points);

/// Sign of det[p1 - p0, ..., pd - p0] for d+1 points in dimension d.
int orientation(std::span<const Point> points);

/// |det[p1 - p0, ..., pd - p0]| / d!.
Rational simplex_volume(std::span<const Point> points);

/// Signed det[p1 - p0, ..., pd - p0] (no factorial).
Rational simplex_determinant(std::span<const Point> points);

/// Barycentric coordinates of p with respect to a d-simplex in dimension d.
/// Returns nullopt when the simplex is affinely dependent.
std::optional<std::vector<Rational>> barycentric_coords(std::span<const Point> simplex,
                                                        const Point& p);

/// Affine coordinates of p with respect to affinely independent points whose
/// hull may have lower dimension than the ambient space. Returns nullopt when
/// the points are dependent or p is off their affine hull.
std::optional<std::vector<Rational>> affine_coords(std::span<const Point> points,
                                                   const Point& p);

/// Closed halfspace normal . x <= offset. The same type serves as a hyperplane
/// (normal . x == offset) when only the boundary matters.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  Rational eval(const Point& p) const { return dot(normal, p) - offset; }
  int side(const Point& p) const { return sign(eval(p)); }
  Hyperplane flipped() const;
};

/// Hyperplane through d affinely independent points in dimension d, via the
/// generalized cross product. nullopt when the points are dependent.
std::optional<Hyperplane> hyperplane_through(std::span<const Point> points);

/// Hyperplane through the given points oriented so that `inside` lies on the
/// non-positive side. The points must span a (d-1)-flat and `inside` must be
/// off it.
std::optional<Hyperplane> oriented_hyperplane(std::span<const Point> points, const Point& inside);

struct Face {
  std::vector<int> vertices;  // sorted vertex indices
  int dim = 0;
  Hyperplane support;         // vertices of the face are exactly its tight set
};

/// Proper faces of a convex polytope, graded by dimension.
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(int dim, int num_vertices, std::vector<Face> faces);

  int dim() const { return dim_; }
  int num_vertices() const { return num_vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(std::size_t i) const { return faces_[i]; }

  std::vector<std::size_t> faces_of_dim(int k) const;
  std::vector<std::size_t> facets() const { return faces_of_dim(dim_ - 1); }
  std::size_t count(int k) const { return faces_of_dim(k).size(); }

  /// Index of the face with exactly these (sorted) vertices.
  std::optional<std::size_t> find(const std::vector<int>& vertices) const;

 private:
  int dim_ = 0;
  int num_vertices_ = 0;
  std::vector<Face> faces_;
};

/// Face lattice of points in convex position whose affine hull is the whole
/// ambient space. Computed for dimension <= 3 only.
FaceLattice face_lattice(std::span<const Point> vertices);

/// Validates a supplied lattice (any dimension): graded, closed under
/// intersection, every vertex a 0-face, and consistent with coordinates.
FaceLattice check_face_lattice(std::span<const Point> vertices,
                               const std::vector<std::vector<int>>& faces);

/// Pulling triangulation of a polytope from its face lattice: every simplex
/// is a tuple of vertex indices. Works in any dimension.
std::vector<std::vector<int>> pulling_triangulation(const FaceLattice& lattice);

/// Pulling triangulation restricted to one face (given by sorted vertices).
std::vector<std::vector<int>> pulling_triangulation(const FaceLattice& lattice,
                                                    const std::vector<int>& face);

/// All k-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k);

/// Sign of a permutation of distinct integers (by sorting).
int permutation_sign(std::vector<int> values);

}  // namespace sperner
