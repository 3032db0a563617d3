// The canonical piecewise-linear realization of a labeling and its Brouwer
// degree, computed exactly by signed preimage counting.
#pragma once

#include <stdexcept>
#include <vector>

#include "sperner/labeling.hpp"

namespace sperner {

/// Affine on every cell, sending pool vertex v to the target vertex assigned
/// to its label.
class Realization {
 public:
  /// Uses phi.target_assignment; cells must be simplices.
  Realization(Decomposition source, Labeling labeling, Polytope target);

  /// Target is the host itself, with label l sent to the host vertex
  /// carrying l.
  static Realization onto_host(Decomposition source, Labeling labeling);

  const Decomposition& source() const { return source_; }
  const Labeling& labeling() const { return labeling_; }
  const Polytope& target() const { return target_; }
  int dim() const { return source_.dim(); }

  const Point& image(int pool_vertex) const { return images_[pool_vertex]; }
  const Point& label_point(int label) const;

 private:
  Decomposition source_;
  Labeling labeling_;
  Polytope target_;
  std::vector<Point> images_;
};

class RegularValueExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image simplex of one cell (possibly degenerate).
std::vector<Point> realization_image(const Realization& r, std::size_t cell);

/// First accepted candidate of the deterministic schedule.
Point pick_regular_value(const Realization& r);
/// The first `count` accepted candidates, all distinct.
std::vector<Point> pick_regular_values(const Realization& r, std::size_t count);

struct DegreeReport {
  Point regular_value;
  std::vector<int> cell_signs;
  long degree = 0;
  long boundary_degree = 0;
  Point boundary_regular_value;
};

/// Signed count of preimages of p, one sign per cell.
std::vector<int> cell_signs_at(const Realization& r, const Point& p, Exec exec = Exec::parallel);

DegreeReport degree(const Realization& r, Exec exec = Exec::parallel);

struct BoundaryDegree {
  long degree = 0;
  Point regular_value;
};

/// Degree of the induced map between boundary spheres, counted on boundary
/// facets against a regular value inside one target facet. Throws
/// InvalidInput when some boundary facet does not map into a target facet.
BoundaryDegree boundary_degree(const Realization& r);

struct DegreeIdentities {
  long degree = 0;
  long boundary_degree = 0;
  long cell_sum = 0;
  bool consistent = false;
};

/// Computes deg(f), deg of the boundary map, and the sum of per-cell degrees
/// over completely labeled cells along separate code paths.
DegreeIdentities verify_degree_identities(const Realization& r);

struct GeneralizedBound {
  std::size_t count = 0;
  long abs_boundary_degree = 0;
  std::size_t bound = 0;
  bool satisfied = false;
  bool parity_checked = false;  // true when the boundary degree is zero
  bool parity_ok = true;
};

/// Complete-cell count against (n - d)|deg|, and evenness when deg is zero.
GeneralizedBound check_generalized_bound(const Realization& r);

}  // namespace sperner
