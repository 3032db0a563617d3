// JSON instance files: a host polytope, a decomposition, labels, and optional
// target polytope and cover sections. Rationals are stored as "p/q" strings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperner/complex.hpp"
#include "sperner/labeling.hpp"

namespace sperner {

struct TargetSpec {
  std::vector<Point> vertices;
  std::vector<std::vector<int>> faces;  // empty: computed
  std::vector<int> assignment;          // assignment[l - 1] = target vertex of label l
};

struct CoverSection {
  std::vector<std::vector<Point>> simplices;
  std::optional<bool> covers;
  std::optional<std::size_t> size;
  std::optional<std::size_t> lower_bound;
};

struct Instance {
  int dimension = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<int>> faces;  // empty: computed (d <= 3)
  std::vector<Point> pool;
  std::vector<Cell> cells;
  std::vector<int> labels;
  std::optional<int> label_count;
  std::optional<TargetSpec> target;
  std::optional<CoverSection> cover;

  Polytope host() const;
  Decomposition decomposition() const;
  /// Label count defaults to the target's vertex count, else the host's.
  Labeling labeling() const;
  std::optional<Polytope> target_polytope() const;
};

/// Throws ParseError for malformed JSON or schema errors.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& inst);

Instance make_instance(const Decomposition& d, const std::optional<Labeling>& phi = std::nullopt);

/// SVG 1.1 drawing of a 2-dimensional decomposition: cells, labeled pool
/// vertices, and completely labeled cells filled.
std::string render_svg(const Decomposition& d, const Labeling& phi);

}  // namespace sperner
