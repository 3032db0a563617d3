// Simplicial covers of polytopes: exact residual volume, a brute-force search
// over vertex-spanned simplices, and stacked polytopes for the equality case.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/parallel.hpp"

namespace sperner {

using Simplex = std::vector<Point>;

struct CoverCheck {
  bool covers = false;
  Rational uncovered;
};

/// vol(P minus the union of the simplices), by clipping P against each
/// simplex in turn. Throws InvalidInput for d > 3 or a simplex leaving P.
CoverCheck is_cover(const Polytope& p, const std::vector<Simplex>& simplices);

struct CoverCertificate {
  std::vector<std::vector<int>> vertex_sets;  // host vertex indices per simplex
  std::vector<Simplex> simplices;
  bool covers = false;
  Rational uncovered;
  std::size_t size = 0;
  std::size_t lower_bound = 0;       // n - d
  bool vertex_spanned_only = true;   // search space; size is an upper bound
  bool exact() const { return covers && size == lower_bound; }
};

class CoverBudgetExhausted : public std::runtime_error {
 public:
  CoverBudgetExhausted(const std::string& what, Rational best_residual)
      : std::runtime_error(what), best_residual_(std::move(best_residual)) {}
  const Rational& best_residual() const { return best_residual_; }

 private:
  Rational best_residual_;
};

/// Full-dimensional simplices spanned by host vertices, in lexicographic
/// order of their vertex index sets.
std::vector<std::vector<int>> vertex_spanned_simplices(const Polytope& p);

/// Smallest k <= budget for which some k-subset of vertex-spanned simplices
/// covers P. Among covers of that size the lexicographically smallest subset
/// is returned. Throws CoverBudgetExhausted otherwise.
CoverCertificate min_vertex_spanned_cover(const Polytope& p, std::size_t budget,
                                          Exec exec = Exec::parallel);

struct StackedPolytope {
  Polytope polytope;
  Decomposition decomposition;  // the n - d stacking simplices
};

/// Starts from the standard d-simplex and repeatedly stacks a vertex beyond a
/// facet picked by the seeded generator.
StackedPolytope stacked_polytope(int dim, int n, std::uint64_t seed);

}  // namespace sperner
