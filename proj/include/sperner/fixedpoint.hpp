// Approximate Brouwer fixed points of self-maps of the simplex through the
// Sperner labeling they induce.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sperner/expr.hpp"
#include "sperner/labeling.hpp"

namespace sperner {

/// A map from the d-simplex to itself. In barycentric mode there are d+1
/// components over variables x1..x_{d+1} = lambda_1..lambda_{d+1}. In
/// Cartesian mode the simplex is conv(0, e_1, ..., e_d) and there are d
/// components over x1..xd, with lambda_1 = 1 - sum(x) and lambda_{k+1} = x_k.
class SelfMap {
 public:
  static SelfMap barycentric(std::vector<Expr> components);
  static SelfMap cartesian(std::vector<Expr> components);
  /// ';'-separated component list.
  static SelfMap parse(std::string_view text, bool cartesian = false);

  int dim() const { return dim_; }
  bool is_cartesian() const { return cartesian_; }
  const std::vector<Expr>& components() const { return components_; }

  /// Image in barycentric coordinates. Throws InvalidInput unless it is
  /// non-negative and sums to 1.
  std::vector<Rational> apply(const std::vector<Rational>& lambda) const;

 private:
  std::vector<Expr> components_;
  int dim_ = 0;
  bool cartesian_ = false;
};

/// Smallest 1-based i with lambda_i > 0 and f_i <= lambda_i.
int sperner_label(const std::vector<Rational>& lambda, const std::vector<Rational>& image);

/// Labels every pool vertex of a decomposition of a d-simplex host, using
/// barycentric coordinates with respect to the host vertices in order.
Labeling induced_labeling(const SelfMap& f, const Decomposition& d, Exec exec = Exec::parallel);

struct DoorWalk {
  std::size_t cell = 0;
  std::size_t steps = 0;  // interior doors crossed on the successful path
};

/// Follows facets labeled {1..d} from the boundary to a completely labeled
/// cell. Throws InvalidInput when the boundary has no such door.
DoorWalk door_to_door_search(const Decomposition& d, const Labeling& phi);

struct FixpointResult {
  std::vector<std::vector<Rational>> cell;  // barycentric coordinates of the vertices
  std::vector<int> cell_labels;
  std::vector<Rational> witness;            // barycentric barycenter of the cell
  Rational diameter;                        // max-coordinate (barycentric) diameter
  Rational residual;                        // max_i |f_i(witness) - witness_i|
  int depth = 0;
  long subdivisions = 1;                    // m^depth
  std::size_t steps = 0;
  bool tolerance_met = false;
};

/// For depth k = 0, 1, ... the order-m^k edgewise grid of the simplex is
/// walked door to door without materializing it, labels computed lazily.
/// Stops once the cell diameter is at most tolerance or at max_depth.
FixpointResult find_fixed_point(const SelfMap& f, int max_depth, int order, const Rational& tolerance);

/// One level of the above: the complete cell on the grid of order n.
FixpointResult fixed_point_at(const SelfMap& f, long n);

}  // namespace sperner
