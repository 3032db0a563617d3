#include "sperner/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sperner/error.hpp"
#include "sperner/region.hpp"

namespace sperner {

Decomposition::Decomposition(Polytope host, std::vector<Point> pool, std::vector<Cell> cells)
    : host_(std::move(host)), pool_(std::move(pool)), cells_(std::move(cells)) {
  const std::size_t d = static_cast<std::size_t>(host_.dim());
  for (std::size_t i = 0; i < pool_.size(); ++i) {
    if (pool_[i].dim() != d) throw InvalidInput("pool point " + std::to_string(i) + " has wrong dimension");
    if (!index_.emplace(pool_[i], static_cast<int>(i)).second) {
      throw InvalidInput("pool points " + std::to_string(index_[pool_[i]]) + " and " +
                         std::to_string(i) + " coincide");
    }
  }
  bool all_simplices = true;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto& cell = cells_[c];
    if (cell.size() < d + 1) throw InvalidInput("cell " + std::to_string(c) + " has too few vertices");
    std::set<int> seen;
    for (int v : cell) {
      if (v < 0 || static_cast<std::size_t>(v) >= pool_.size()) {
        throw InvalidInput("cell " + std::to_string(c) + " references pool index out of range");
      }
      if (!seen.insert(v).second) throw InvalidInput("cell " + std::to_string(c) + " repeats a vertex");
    }
    if (cell.size() != d + 1) all_simplices = false;
  }
  kind_ = all_simplices ? CellKind::simplices : CellKind::polytopes;
  for (const auto& v : host_.vertices()) {
    auto it = index_.find(v);
    if (it == index_.end()) throw InvalidInput("host vertex " + to_string(v) + " missing from pool");
    host_index_.push_back(it->second);
  }
}

Decomposition Decomposition::single_cell(const Polytope& host) {
  Cell cell(host.num_vertices());
  std::iota(cell.begin(), cell.end(), 0);
  return Decomposition(host, host.vertices(), {cell});
}

Decomposition Decomposition::triangulated(const Polytope& host) {
  return Decomposition(host, host.vertices(), host.triangulation());
}

std::vector<Point> Decomposition::cell_points(std::size_t cell) const {
  std::vector<Point> out;
  out.reserve(cells_[cell].size());
  for (int v : cells_[cell]) out.push_back(pool_[v]);
  return out;
}

std::optional<int> Decomposition::find_pool(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct CellGeometry {
  std::vector<Point> points;
  std::vector<Hyperplane> halfspaces;
  std::optional<FaceLattice> lattice;  // polytope cells only
  Point lo, hi;
  bool usable = false;
};

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CellGeometry prepare_cell(const Decomposition& d, std::size_t c, std::vector<Violation>& out) {
  CellGeometry g;
  g.points = d.cell_points(c);
  const auto dim = static_cast<std::size_t>(d.dim());
  g.lo = g.points[0];
  g.hi = g.points[0];
  for (const auto& p : g.points) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (p[k] < g.lo[k]) g.lo[k] = p[k];
      if (p[k] > g.hi[k]) g.hi[k] = p[k];
    }
  }
  const int c_int = static_cast<int>(c);
  if (g.points.size() == dim + 1) {
    if (orientation(g.points) == 0) {
      out.push_back({"degenerate_cell", {c_int}, d.cells()[c], "cell vertices are affinely dependent"});
      return g;
    }
    if (dim <= 3) g.halfspaces = simplex_halfspaces(g.points);
    g.usable = true;
    return g;
  }
  if (dim > 3) {
    out.push_back({"unsupported_cell", {c_int}, d.cells()[c],
                   "non-simplex cells need dimension <= 3"});
    return g;
  }
  try {
    g.lattice = face_lattice(g.points);
  } catch (const InvalidInput& e) {
    out.push_back({"nonconvex_cell", {c_int}, d.cells()[c], e.what()});
    return g;
  }
  for (auto f : g.lattice->facets()) g.halfspaces.push_back(g.lattice->face(f).support);
  g.usable = true;
  return g;
}

Rational cell_volume(const CellGeometry& g) {
  if (!g.lattice) return simplex_volume(g.points);
  Rational vol = 0;
  for (const auto& s : pulling_triangulation(*g.lattice)) {
    std::vector<Point> pts;
    for (int i : s) pts.push_back(g.points[i]);
    vol += simplex_volume(pts);
  }
  return vol;
}

bool boxes_overlap(const CellGeometry& a, const CellGeometry& b) {
  for (std::size_t k = 0; k < a.lo.dim(); ++k) {
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
  }
  return true;
}

// Local indices (in `cell`) of the shared pool vertices.
std::vector<int> local_indices(const Cell& cell, const std::vector<int>& shared) {
  std::vector<int> out;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (std::find(shared.begin(), shared.end(), cell[i]) != shared.end()) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

bool is_face_of(const CellGeometry& g, const Cell& cell, const std::vector<int>& shared) {
  if (shared.empty() || !g.lattice) return true;
  auto local = local_indices(cell, shared);
  if (local.size() == cell.size()) return false;
  return g.lattice->find(local).has_value();
}

// A supporting facet hyperplane of `a` that `b` touches only in shared
// vertices certifies that the intersection is conv(shared).
bool separated_by_facet(const CellGeometry& a, const CellGeometry& b, const Cell& b_cell,
                        const std::vector<int>& shared) {
  for (const auto& h : a.halfspaces) {
    bool separating = true;
    std::vector<int> tight;
    for (std::size_t i = 0; i < b.points.size(); ++i) {
      const int s = h.side(b.points[i]);
      if (s < 0) {
        separating = false;
        break;
      }
      if (s == 0) tight.push_back(b_cell[i]);
    }
    if (!separating) continue;
    if (sorted(tight) == shared) return true;
  }
  return false;
}

enum class PairStatus { proper, overlap, improper };

PairStatus check_pair(const CellGeometry& a, const Cell& a_cell, const CellGeometry& b,
                      const Cell& b_cell, const std::vector<Point>& pool) {
  std::vector<int> shared;
  {
    auto sa = sorted(a_cell), sb = sorted(b_cell);
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
  }
  const bool faces_ok = is_face_of(a, a_cell, shared) && is_face_of(b, b_cell, shared);
  if (separated_by_facet(a, b, b_cell, shared) || separated_by_facet(b, a, a_cell, shared)) {
    return faces_ok ? PairStatus::proper : PairStatus::improper;
  }
  std::vector<Hyperplane> hs = a.halfspaces;
  hs.insert(hs.end(), b.halfspaces.begin(), b.halfspaces.end());
  const auto dim = a.points[0].dim();
  auto verts = enumerate_vertices(dim, hs);
  for (const auto& v : verts) {
    bool is_shared = std::any_of(shared.begin(), shared.end(), [&](int s) { return pool[s] == v; });
    if (!is_shared) {
      return affine_rank(verts) == static_cast<int>(dim) ? PairStatus::overlap : PairStatus::improper;
    }
  }
  if (affine_rank(verts) == static_cast<int>(dim)) return PairStatus::overlap;
  return faces_ok ? PairStatus::proper : PairStatus::improper;
}

}  // namespace

std::vector<std::vector<int>> cell_facets(const Decomposition& d, std::size_t cell) {
  const auto& c = d.cells()[cell];
  std::vector<std::vector<int>> out;
  const int dim = d.dim();
  if (c.size() == static_cast<std::size_t>(dim) + 1) {
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      std::vector<int> f;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != skip) f.push_back(c[i]);
      }
      out.push_back(sorted(std::move(f)));
    }
    return out;
  }
  auto lattice = face_lattice(d.cell_points(cell));
  for (auto f : lattice.facets()) {
    std::vector<int> vs;
    for (int local : lattice.face(f).vertices) vs.push_back(c[local]);
    out.push_back(sorted(std::move(vs)));
  }
  return out;
}

BoundaryReport boundary_facets(const Decomposition& d) {
  BoundaryReport report;
  std::map<std::vector<int>, std::vector<int>> incidence;
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    for (auto& f : cell_facets(d, c)) incidence[f].push_back(static_cast<int>(c));
  }
  const auto& host = d.host();
  const auto host_facets = host.facets();
  for (const auto& [facet, cells] : incidence) {
    std::optional<std::size_t> on_host;
    for (auto hf : host_facets) {
      const auto& h = host.face(hf).support;
      if (std::all_of(facet.begin(), facet.end(), [&](int v) { return h.side(d.pool()[v]) == 0; })) {
        on_host = hf;
        break;
      }
    }
    if (on_host) {
      if (cells.size() != 1) {
        report.violations.push_back({"boundary_facet_shared", cells, facet,
                                     "boundary facet belongs to " + std::to_string(cells.size()) + " cells"});
      }
      for (int c : cells) report.facets.push_back({c, facet, *on_host});
    } else if (cells.size() != 2) {
      report.violations.push_back({"nonmanifold_facet", cells, facet,
                                   "interior facet shared by " + std::to_string(cells.size()) + " cells"});
    }
  }
  std::sort(report.facets.begin(), report.facets.end(), [](const BoundaryFacet& a, const BoundaryFacet& b) {
    return std::tie(a.cell, a.vertices) < std::tie(b.cell, b.vertices);
  });
  return report;
}

ValidationReport validate_decomposition(const Decomposition& d, Exec exec) {
  ValidationReport report;
  auto& out = report.violations;
  const auto& host = d.host();
  const auto& pool = d.pool();
  const std::size_t n_cells = d.cells().size();
  if (n_cells == 0) {
    out.push_back({"empty", {}, {}, "decomposition has no cells"});
    return report;
  }

  std::vector<bool> used(pool.size(), false);
  for (const auto& cell : d.cells()) {
    for (int v : cell) used[v] = true;
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!host.contains(pool[i])) {
      out.push_back({"pool_outside_host", {}, {static_cast<int>(i)}, to_string(pool[i])});
    }
    if (!used[i]) out.push_back({"unused_pool_vertex", {}, {static_cast<int>(i)}, to_string(pool[i])});
  }

  std::vector<CellGeometry> geo;
  geo.reserve(n_cells);
  for (std::size_t c = 0; c < n_cells; ++c) geo.push_back(prepare_cell(d, c, out));
  const bool all_usable = std::all_of(geo.begin(), geo.end(), [](const CellGeometry& g) { return g.usable; });
  if (!all_usable) return report;

  Rational total = 0;
  for (const auto& g : geo) total += cell_volume(g);
  const Rational host_volume = host.volume();
  if (total != host_volume) {
    out.push_back({"volume_mismatch", {}, {},
                   "cells " + to_string(total) + " vs host " + to_string(host_volume)});
  }

  if (d.dim() <= 3) {
    // Sweep on the first coordinate; only boxes that overlap are tested.
    std::vector<std::size_t> order(n_cells);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return cmp(geo[a].lo[0], geo[b].lo[0]) < 0;
    });
    std::vector<std::vector<Violation>> found(n_cells);
    for_each_index(exec, n_cells, [&](std::size_t pos) {
      const std::size_t a = order[pos];
      for (std::size_t q = pos + 1; q < n_cells; ++q) {
        const std::size_t b = order[q];
        if (geo[a].hi[0] < geo[b].lo[0]) break;
        if (!boxes_overlap(geo[a], geo[b])) continue;
        auto status = check_pair(geo[a], d.cells()[a], geo[b], d.cells()[b], pool);
        if (status == PairStatus::proper) continue;
        std::vector<int> pair{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
        if (status == PairStatus::overlap) {
          found[pos].push_back({"interior_overlap", pair, {}, "cell interiors intersect"});
        } else {
          found[pos].push_back({"improper_intersection", pair, {},
                                "intersection is not a common face of both cells"});
        }
      }
    });
    std::vector<Violation> pairs;
    for (auto& v : found) pairs.insert(pairs.end(), v.begin(), v.end());
    std::sort(pairs.begin(), pairs.end(), [](const Violation& a, const Violation& b) { return a.cells < b.cells; });
    out.insert(out.end(), pairs.begin(), pairs.end());
  } else {
    report.weak_face_check = true;
  }

  auto boundary = boundary_facets(d);
  out.insert(out.end(), boundary.violations.begin(), boundary.violations.end());
  return report;
}

namespace {

class PoolBuilder {
 public:
  explicit PoolBuilder(const std::vector<Point>& initial) : pool_(initial) {
    for (std::size_t i = 0; i < pool_.size(); ++i) index_.emplace(pool_[i], static_cast<int>(i));
  }

  int add(Point p) {
    auto it = index_.find(p);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(pool_.size());
    index_.emplace(p, idx);
    pool_.push_back(std::move(p));
    return idx;
  }

  std::vector<Point> take() { return std::move(pool_); }

 private:
  std::vector<Point> pool_;
  std::map<Point, int> index_;
};

void require_simplices(const Decomposition& d) {
  if (d.kind() != CellKind::simplices) throw InvalidInput("subdivision requires simplex cells");
}

}  // namespace

Decomposition barycentric_subdivide(const Decomposition& d) {
  require_simplices(d);
  PoolBuilder pool(d.pool());
  std::vector<Cell> cells;
  const int k = d.dim() + 1;
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    auto pts = d.cell_points(c);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Cell cell;
      Point sum(static_cast<std::size_t>(d.dim()));
      for (int j = 0; j < k; ++j) {
        sum += pts[perm[j]];
        cell.push_back(pool.add(sum * ratio(1, j + 1)));
      }
      cells.push_back(std::move(cell));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Decomposition(d.host(), pool.take(), std::move(cells));
}

Decomposition edgewise_subdivide(const Decomposition& d, int m) {
  if (m < 2) throw InvalidInput("edgewise subdivision order must be at least 2");
  require_simplices(d);
  const int dim = d.dim();
  PoolBuilder pool(d.pool());
  std::vector<Cell> cells;

  // Freudenthal simplices of the scaled Kuhn simplex m >= z_1 >= ... >= z_d >= 0.
  std::vector<std::vector<std::vector<int>>> pattern;
  {
    std::vector<int> base(dim, 0);
    auto inside = [&](const std::vector<int>& z) {
      if (z[0] > m || z[dim - 1] < 0) return false;
      for (int i = 0; i + 1 < dim; ++i) {
        if (z[i] < z[i + 1]) return false;
      }
      return true;
    };
    while (true) {
      std::vector<int> perm(dim);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::vector<int>> verts{base};
        bool ok = inside(base);
        for (int j = 0; j < dim && ok; ++j) {
          auto next = verts.back();
          ++next[perm[j]];
          ok = inside(next);
          verts.push_back(std::move(next));
        }
        if (ok) pattern.push_back(std::move(verts));
      } while (std::next_permutation(perm.begin(), perm.end()));
      int i = 0;
      while (i < dim && ++base[i] == m) base[i++] = 0;
      if (i == dim) break;
    }
  }

  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    Cell ordered = d.cells()[c];
    std::sort(ordered.begin(), ordered.end());
    std::vector<Point> v;
    for (int idx : ordered) v.push_back(d.pool()[idx]);
    for (const auto& simplex : pattern) {
      Cell cell;
      for (const auto& z : simplex) {
        std::vector<Rational> lambda(dim + 1);
        lambda[0] = ratio(m - z[0], m);
        for (int k = 1; k < dim; ++k) lambda[k] = ratio(z[k - 1] - z[k], m);
        lambda[dim] = ratio(z[dim - 1], m);
        Point p(static_cast<std::size_t>(dim));
        for (int k = 0; k <= dim; ++k) {
          if (sgn(lambda[k]) != 0) p += v[k] * lambda[k];
        }
        cell.push_back(pool.add(std::move(p)));
      }
      cells.push_back(std::move(cell));
    }
  }
  return Decomposition(d.host(), pool.take(), std::move(cells));
}

Rational mesh_diameter_squared(const Decomposition& d) {
  Rational best = 0;
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    auto pts = d.cell_points(c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Point diff = pts[i] - pts[j];
        Rational len = dot(diff.coords(), diff);
        if (len > best) best = len;
      }
    }
  }
  return best;
}

}  // namespace sperner
