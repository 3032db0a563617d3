#pragma once

#include <optional>
#include <vector>

#include "sperner/exactgeom.hpp"

namespace sperner {

/// Convex d-polytope given by its extreme points and face lattice. The ambient
/// orientation is the standard one (e_1, ..., e_d positively oriented).
class Polytope {
 public:
  /// Computes the face lattice (dimension <= 3).
  static Polytope from_vertices(std::vector<Point> vertices);
  /// Uses a supplied lattice after checking it against the coordinates.
  static Polytope from_vertices_and_faces(std::vector<Point> vertices,
                                          const std::vector<std::vector<int>>& faces);
  /// conv(0, e_1, ..., e_d) with vertex 0 at the origin and vertex k at e_k.
  static Polytope standard_simplex(int dim);

  int dim() const { return lattice_.dim(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const FaceLattice& lattice() const { return lattice_; }
  const Face& face(std::size_t i) const { return lattice_.face(i); }
  std::vector<std::size_t> facets() const { return lattice_.facets(); }
  bool is_simplex() const { return num_vertices() == static_cast<std::size_t>(dim()) + 1; }

  bool contains(const Point& p) const;
  bool strictly_inside(const Point& p) const;

  /// Minimal face containing p, or nullopt when p is interior. Throws
  /// InvalidInput when p lies outside.
  std::optional<std::size_t> carrier(const Point& p) const;

  /// Smallest face containing the given vertices; nullopt when that is the
  /// whole polytope.
  std::optional<std::size_t> join(const std::vector<int>& vertices) const;
  /// Dimension of join(vertices) (d for the whole polytope).
  int join_dim(const std::vector<int>& vertices) const;

  /// Vertex indices of a face, or of the whole polytope for nullopt.
  std::vector<int> face_vertices(std::optional<std::size_t> face) const;

  Rational volume() const;
  std::vector<std::vector<int>> triangulation() const { return pulling_triangulation(lattice_); }
  Point centroid() const;

 private:
  Polytope(std::vector<Point> vertices, FaceLattice lattice)
      : vertices_(std::move(vertices)), lattice_(std::move(lattice)) {}

  std::vector<Point> vertices_;
  FaceLattice lattice_;
};

}  // namespace sperner
