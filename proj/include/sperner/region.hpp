// Bounded convex regions in H-representation with exact vertex enumeration.
// Used for pairwise cell intersection and residual-volume clipping.
#pragma once

#include <span>
#include <vector>

#include "sperner/exactgeom.hpp"

namespace sperner {

/// Vertices of the bounded polyhedron {x : h.eval(x) <= 0 for all h}.
/// Brute force over d-subsets of constraints; fine for the small systems
/// that arise from pairs of cells and clipped pieces in dimension <= 3.
std::vector<Point> enumerate_vertices(std::size_t dim, std::span<const Hyperplane> halfspaces);

/// Facet inequalities of a full-dimensional simplex, oriented inward-negative.
std::vector<Hyperplane> simplex_halfspaces(std::span<const Point> simplex);

/// Volume of the convex hull of a point set in dimension <= 3 (0 if the hull
/// is lower-dimensional).
Rational hull_volume(std::span<const Point> points);

class ConvexRegion {
 public:
  ConvexRegion(std::size_t dim, std::vector<Hyperplane> halfspaces);

  static ConvexRegion from_simplex(std::span<const Point> simplex);

  std::size_t dim() const { return dim_; }
  const std::vector<Hyperplane>& halfspaces() const { return halfspaces_; }
  const std::vector<Point>& vertices() const { return vertices_; }

  bool empty() const { return vertices_.empty(); }
  int affine_dim() const { return affine_rank(vertices_); }
  bool full_dimensional() const { return affine_dim() == static_cast<int>(dim_); }

  /// Intersection with one more halfspace; redundant constraints are dropped.
  ConvexRegion clipped(const Hyperplane& h) const;

  Rational volume() const { return hull_volume(vertices_); }

 private:
  std::size_t dim_;
  std::vector<Hyperplane> halfspaces_;
  std::vector<Point> vertices_;
};

}  // namespace sperner
