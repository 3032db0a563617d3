// Decompositions of a convex polytope into cells, their validation, boundary
// extraction, and subdivision operators.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sperner/parallel.hpp"
#include "sperner/polytope.hpp"

namespace sperner {

enum class CellKind { simplices, polytopes };

using Cell = std::vector<int>;  // indices into the decomposition's pool

class Decomposition {
 public:
  /// Checks index ranges, dimensions and pool uniqueness; every host vertex
  /// must appear in the pool. The cell kind is inferred from cell sizes.
  Decomposition(Polytope host, std::vector<Point> pool, std::vector<Cell> cells);

  /// The host as its own single cell.
  static Decomposition single_cell(const Polytope& host);
  /// Pulling triangulation of the host using only its vertices.
  static Decomposition triangulated(const Polytope& host);

  const Polytope& host() const { return host_; }
  int dim() const { return host_.dim(); }
  const std::vector<Point>& pool() const { return pool_; }
  const std::vector<Cell>& cells() const { return cells_; }
  CellKind kind() const { return kind_; }

  std::vector<Point> cell_points(std::size_t cell) const;
  /// Pool index of host vertex i.
  int host_pool_index(std::size_t host_vertex) const { return host_index_[host_vertex]; }
  const std::vector<int>& host_pool_indices() const { return host_index_; }
  std::optional<int> find_pool(const Point& p) const;

 private:
  Polytope host_;
  std::vector<Point> pool_;
  std::vector<Cell> cells_;
  CellKind kind_;
  std::vector<int> host_index_;
  std::map<Point, int> index_;
};

struct Violation {
  std::string kind;
  std::vector<int> cells;
  std::vector<int> vertices;  // pool indices
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  // Set when the face-to-face condition could only be checked combinatorially
  // (dimension >= 4).
  bool weak_face_check = false;

  bool ok() const { return violations.empty(); }
};

/// Certifies that the cells tile the host: pool inside host, cells
/// non-degenerate, exact volume identity, pairwise face-to-face intersection
/// and facet incidence.
ValidationReport validate_decomposition(const Decomposition& d, Exec exec = Exec::parallel);

struct BoundaryFacet {
  int cell;
  std::vector<int> vertices;  // pool indices
  std::size_t host_facet;     // index into host().lattice().faces()
};

struct BoundaryReport {
  std::vector<BoundaryFacet> facets;
  std::vector<Violation> violations;
};

/// Cell facets lying in the host boundary, each tagged with the host facet
/// containing it. Interior facets must be shared by exactly two cells.
BoundaryReport boundary_facets(const Decomposition& d);

/// Facets (as sorted pool index sets) of one cell.
std::vector<std::vector<int>> cell_facets(const Decomposition& d, std::size_t cell);

/// Each d-simplex replaced by its (d+1)! barycentric pieces.
Decomposition barycentric_subdivide(const Decomposition& d);

/// Each d-simplex replaced by m^d simplices of the edgewise (Freudenthal)
/// scheme. Cells are ordered by pool index first so shared faces agree.
Decomposition edgewise_subdivide(const Decomposition& d, int m);

/// Largest squared Euclidean distance between two vertices of a common cell.
Rational mesh_diameter_squared(const Decomposition& d);

}  // namespace sperner
