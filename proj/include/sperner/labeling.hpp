// Labelings of decomposition vertices, the validators for each labeling
// discipline, and completely-labeled-cell counting.
#pragma once

#include <optional>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/parallel.hpp"

namespace sperner {

struct Labeling {
  std::vector<int> labels;  // one per pool vertex, each in 1..label_count
  int label_count = 0;
  // Optional: target_assignment[l - 1] is the target vertex for label l.
  std::vector<int> target_assignment;

  /// Throws InvalidInput unless labels cover the pool, lie in range and the
  /// assignment (when present) is injective.
  void check(std::size_t pool_size) const;
};

/// Label l -> host vertex carrying label l, when host vertex labels are a
/// permutation of 1..label_count.
std::optional<std::vector<int>> host_assignment(const Decomposition& d, const Labeling& phi);

/// k-similarity of labels, derived from the host face lattice: labels a and b
/// are k-similar when the host vertices carrying them lie on a common
/// k-dimensional face (every label is 0-similar to itself).
class SimilaritySpec {
 public:
  /// Requires host vertex labels to be a permutation of 1..n.
  static SimilaritySpec from_host(const Decomposition& d, const Labeling& phi);

  /// Smallest k for which a and b are k-similar.
  int level(int a, int b) const { return level_[a - 1][b - 1]; }
  bool similar(int a, int b, int k) const { return level(a, b) <= k; }
  int label_count() const { return static_cast<int>(level_.size()); }

 private:
  std::vector<std::vector<int>> level_;
};

struct LabelingReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Minimal host face containing each pool vertex (nullopt for interior).
std::vector<std::optional<std::size_t>> pool_carriers(const Decomposition& d);

/// Host simplex, d+1 labels, host vertices labeled distinctly; each pool
/// vertex carries a label of a vertex of its carrier.
LabelingReport validate_sperner(const Decomposition& d, const Labeling& phi);

/// Host labels a permutation of 1..n; every pool vertex on a proper face W
/// carries a label of a vertex of W.
LabelingReport validate_atanassov(const Decomposition& d, const Labeling& phi);

/// No (d-1)-face of the host holds pool vertices with d+1 or more labels.
LabelingReport validate_nondegenerate(const Decomposition& d, const Labeling& phi);

/// Carrier condition plus: two vertices on a common k-face of a cell carry
/// k-similar labels.
LabelingReport validate_neighbor_labeling(const Decomposition& d, const Labeling& phi,
                                          const SimilaritySpec& sim);

enum class CompleteMode {
  simplex,  // at least d+1 distinct labels (exactly d+1 for simplex cells)
  full,     // every label 1..label_count
};

/// Indices of completely labeled cells, ascending. The serial path is a plain
/// per-cell label-set scan; the parallel path uses label bitmasks.
std::vector<std::size_t> completely_labeled_cells(const Decomposition& d, const Labeling& phi,
                                                  CompleteMode mode, Exec exec = Exec::parallel);

struct ParityResult {
  std::size_t count = 0;
  bool odd = false;
};

struct BoundResult {
  std::size_t count = 0;
  std::size_t bound = 0;
  bool satisfied = false;
};

struct ExistenceResult {
  std::size_t count = 0;
  bool satisfied = false;
};

/// Throws InvalidInput when the labeling is not Sperner.
ParityResult check_sperner_parity(const Decomposition& d, const Labeling& phi);

/// Throws InvalidInput when the labeling is not Atanassov-valid or cells are
/// not simplices.
BoundResult check_atanassov_bound(const Decomposition& d, const Labeling& phi);

/// Throws InvalidInput when the neighbor-labeling conditions fail.
ExistenceResult check_neighbor_lemma(const Decomposition& d, const Labeling& phi,
                                     const SimilaritySpec& sim);

}  // namespace sperner
