#include "sperner/degree.hpp"

#include <algorithm>
#include <set>

#include "sperner/error.hpp"

namespace sperner {

Realization::Realization(Decomposition source, Labeling labeling, Polytope target)
    : source_(std::move(source)), labeling_(std::move(labeling)), target_(std::move(target)) {
  labeling_.check(source_.pool().size());
  if (source_.kind() != CellKind::simplices) throw InvalidInput("realization needs simplex cells");
  if (target_.dim() != source_.dim()) throw InvalidInput("target dimension differs from source");
  if (labeling_.target_assignment.empty()) throw InvalidInput("realization needs a target assignment");
  for (int v : labeling_.target_assignment) {
    if (v < 0 || static_cast<std::size_t>(v) >= target_.num_vertices()) {
      throw InvalidInput("target assignment index out of range");
    }
  }
  images_.reserve(source_.pool().size());
  for (int label : labeling_.labels) images_.push_back(label_point(label));
}

Realization Realization::onto_host(Decomposition source, Labeling labeling) {
  auto assignment = host_assignment(source, labeling);
  if (!assignment) throw InvalidInput("host vertex labels are not a permutation of 1..n");
  labeling.target_assignment = *assignment;
  Polytope target = source.host();
  return Realization(std::move(source), std::move(labeling), std::move(target));
}

const Point& Realization::label_point(int label) const {
  return target_.vertex(labeling_.target_assignment[label - 1]);
}

std::vector<Point> realization_image(const Realization& r, std::size_t cell) {
  std::vector<Point> out;
  for (int v : r.source().cells()[cell]) out.push_back(r.image(v));
  return out;
}

namespace {

// Affine hull of a few target vertices; candidates must avoid it.
class Flat {
 public:
  explicit Flat(std::vector<Point> points) {
    std::vector<Point> basis;
    for (auto& p : points) {
      basis.push_back(p);
      if (affine_rank(basis) != static_cast<int>(basis.size()) - 1) basis.pop_back();
    }
    if (!basis.empty() && basis.size() == basis[0].dim()) hyperplane_ = hyperplane_through(basis);
    basis_ = std::move(basis);
  }

  bool contains(const Point& p) const {
    if (hyperplane_) return hyperplane_->side(p) == 0;
    return affine_coords(basis_, p).has_value();
  }

 private:
  std::vector<Point> basis_;
  std::optional<Hyperplane> hyperplane_;
};

std::vector<Flat> flats_for(const Realization& r, const std::set<std::vector<int>>& label_sets) {
  std::vector<Flat> out;
  out.reserve(label_sets.size());
  for (const auto& labels : label_sets) {
    std::vector<Point> pts;
    for (int l : labels) pts.push_back(r.label_point(l));
    out.emplace_back(std::move(pts));
  }
  return out;
}

// Label sets of every (d-1)-face of every cell.
std::set<std::vector<int>> interior_blockers(const Realization& r) {
  std::set<std::vector<int>> sets;
  for (const auto& cell : r.source().cells()) {
    for (std::size_t skip = 0; skip < cell.size(); ++skip) {
      std::set<int> labels;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i != skip) labels.insert(r.labeling().labels[cell[i]]);
      }
      sets.emplace(labels.begin(), labels.end());
    }
  }
  return sets;
}

// base + sum_j t^(j+1) dirs[j] with t = 2^-(k+3); k = 0 gives base itself.
Point candidate(const Point& base, const std::vector<Point>& dirs, int k) {
  if (k == 0) return base;
  Point p = base;
  Rational t(1, 1);
  t /= Rational(mpz_class(1) << (k + 3));
  Rational power = t;
  for (const auto& dir : dirs) {
    p += dir * power;
    power *= t;
  }
  return p;
}

Point barycenter(const std::vector<Point>& pts) {
  Point c(pts[0].dim());
  for (const auto& p : pts) c += p;
  c *= ratio(1, static_cast<long>(pts.size()));
  return c;
}

bool blocked(const std::vector<Flat>& flats, const Point& p) {
  return std::any_of(flats.begin(), flats.end(), [&](const Flat& f) { return f.contains(p); });
}

int det_sign_with_normal(const std::vector<Rational>& normal, const std::vector<Point>& pts) {
  Matrix m;
  m.push_back(normal);
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back((pts[i] - pts[0]).coords());
  return sgn(determinant(std::move(m)));
}

}  // namespace

std::vector<Point> pick_regular_values(const Realization& r, std::size_t count) {
  const auto& target = r.target();
  const int d = r.dim();
  auto flats = flats_for(r, interior_blockers(r));

  const auto triangulation = target.triangulation();
  std::vector<Point> first_cell;
  for (int v : triangulation.front()) first_cell.push_back(target.vertex(v));
  const Point base = barycenter(first_cell);
  std::vector<Point> dirs;
  for (int j = 0; j < d; ++j) {
    Point e(static_cast<std::size_t>(d));
    e[j] = 1;
    dirs.push_back(std::move(e));
  }

  // Each flat blocks at most d points of the moment-curve schedule.
  const int limit = d * (static_cast<int>(flats.size()) + static_cast<int>(count)) + 256;
  std::vector<Point> accepted;
  std::size_t rejected = 0;
  for (int k = 0; k < limit && accepted.size() < count; ++k) {
    Point p = candidate(base, dirs, k);
    if (!target.strictly_inside(p)) continue;
    if (blocked(flats, p)) {
      ++rejected;
      continue;
    }
    accepted.push_back(std::move(p));
  }
  if (accepted.size() < count) {
    throw RegularValueExhausted("no regular value after " + std::to_string(limit) + " candidates (" +
                                std::to_string(rejected) + " blocked by " + std::to_string(flats.size()) +
                                " image flats)");
  }
  return accepted;
}

Point pick_regular_value(const Realization& r) { return pick_regular_values(r, 1).front(); }

std::vector<int> cell_signs_at(const Realization& r, const Point& p, Exec exec) {
  const auto& cells = r.source().cells();
  const auto& pool = r.source().pool();
  const std::size_t d = static_cast<std::size_t>(r.dim());
  std::vector<int> signs(cells.size(), 0);
  for_each_index(exec, cells.size(), [&](std::size_t c) {
    std::set<int> labels;
    for (int v : cells[c]) labels.insert(r.labeling().labels[v]);
    if (labels.size() != d + 1) return;
    auto image = realization_image(r, c);
    auto lambda = barycentric_coords(image, p);
    if (!lambda) return;
    for (const auto& l : *lambda) {
      if (sgn(l) <= 0) return;
    }
    std::vector<Point> src;
    for (int v : cells[c]) src.push_back(pool[v]);
    signs[c] = orientation(image) * orientation(src);
  });
  return signs;
}

DegreeReport degree(const Realization& r, Exec exec) {
  DegreeReport report;
  report.regular_value = pick_regular_value(r);
  report.cell_signs = cell_signs_at(r, report.regular_value, exec);
  for (int s : report.cell_signs) report.degree += s;
  auto boundary = boundary_degree(r);
  report.boundary_degree = boundary.degree;
  report.boundary_regular_value = boundary.regular_value;
  return report;
}

BoundaryDegree boundary_degree(const Realization& r) {
  const auto& src = r.source();
  const auto& target = r.target();
  const int d = r.dim();
  auto boundary = boundary_facets(src);
  if (!boundary.violations.empty()) {
    throw InvalidInput("decomposition boundary is not a manifold: " + boundary.violations.front().detail);
  }

  const auto target_facets = target.facets();
  const std::size_t ref_facet = target_facets.front();
  const auto& ref_vertices = target.face(ref_facet).vertices;

  struct Imaged {
    const BoundaryFacet* facet;
    std::vector<int> labels;
    bool on_reference;
  };
  std::vector<Imaged> imaged;
  for (const auto& bf : boundary.facets) {
    std::vector<int> labels;
    std::vector<int> tverts;
    for (int v : bf.vertices) {
      labels.push_back(r.labeling().labels[v]);
      tverts.push_back(r.labeling().target_assignment[labels.back() - 1]);
    }
    std::sort(tverts.begin(), tverts.end());
    auto inside = [&](std::size_t f) {
      const auto& fv = target.face(f).vertices;
      return std::all_of(tverts.begin(), tverts.end(),
                         [&](int t) { return std::binary_search(fv.begin(), fv.end(), t); });
    };
    if (!std::any_of(target_facets.begin(), target_facets.end(), inside)) {
      throw InvalidInput("boundary facet of cell " + std::to_string(bf.cell) +
                         " does not map into a facet of the target");
    }
    imaged.push_back({&bf, labels, inside(ref_facet)});
  }

  BoundaryDegree result;
  if (d == 1) {
    result.regular_value = target.vertex(ref_vertices.front());
  } else {
    const auto facet_triangulation = pulling_triangulation(target.lattice(), ref_vertices);
    std::vector<Point> ref_simplex;
    for (int v : facet_triangulation.front()) {
      ref_simplex.push_back(target.vertex(v));
    }
    std::vector<Point> dirs;
    for (std::size_t j = 1; j < ref_simplex.size(); ++j) dirs.push_back(ref_simplex[j] - ref_simplex[0]);
    const Point base = barycenter(ref_simplex);

    std::set<std::vector<int>> sets;
    for (const auto& im : imaged) {
      if (!im.on_reference) continue;
      for (std::size_t skip = 0; skip < im.labels.size(); ++skip) {
        std::set<int> ls;
        for (std::size_t i = 0; i < im.labels.size(); ++i) {
          if (i != skip) ls.insert(im.labels[i]);
        }
        sets.emplace(ls.begin(), ls.end());
      }
    }
    auto flats = flats_for(r, sets);
    const int limit = (d - 1) * (static_cast<int>(flats.size()) + 1) + 256;
    bool found = false;
    for (int k = 0; k < limit && !found; ++k) {
      Point q = candidate(base, dirs, k);
      auto coords = affine_coords(ref_simplex, q);
      if (!coords || std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return sgn(c) <= 0; })) {
        continue;
      }
      if (blocked(flats, q)) continue;
      result.regular_value = std::move(q);
      found = true;
    }
    if (!found) throw RegularValueExhausted("no boundary regular value after " + std::to_string(limit) + " candidates");
  }

  const auto& target_normal = target.face(ref_facet).support.normal;
  for (const auto& im : imaged) {
    if (!im.on_reference) continue;
    std::set<int> distinct(im.labels.begin(), im.labels.end());
    if (distinct.size() != static_cast<std::size_t>(d)) continue;
    std::vector<Point> src_pts, img_pts;
    for (int v : im.facet->vertices) {
      src_pts.push_back(src.pool()[v]);
      img_pts.push_back(r.image(v));
    }
    if (d == 1) {
      if (img_pts[0] != result.regular_value) continue;
    } else {
      auto coords = affine_coords(img_pts, result.regular_value);
      if (!coords || std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return sgn(c) <= 0; })) {
        continue;
      }
    }
    const auto& source_normal = src.host().face(im.facet->host_facet).support.normal;
    result.degree += det_sign_with_normal(source_normal, src_pts) * det_sign_with_normal(target_normal, img_pts);
  }
  return result;
}

DegreeIdentities verify_degree_identities(const Realization& r) {
  DegreeIdentities out;
  const Point p = pick_regular_value(r);
  for (int s : cell_signs_at(r, p)) out.degree += s;
  out.boundary_degree = boundary_degree(r).degree;

  // Per-cell degrees of completely labeled cells, by orientation tests.
  const auto& src = r.source();
  for (auto c : completely_labeled_cells(src, r.labeling(), CompleteMode::simplex)) {
    auto image = realization_image(r, c);
    const int s = orientation(image);
    if (s == 0) continue;
    bool inside = true;
    for (std::size_t i = 0; i < image.size() && inside; ++i) {
      auto moved = image;
      moved[i] = p;
      inside = orientation(moved) == s;
    }
    if (inside) out.cell_sum += s * orientation(src.cell_points(c));
  }
  out.consistent = out.degree == out.boundary_degree && out.degree == out.cell_sum;
  return out;
}

GeneralizedBound check_generalized_bound(const Realization& r) {
  const auto& src = r.source();
  const auto& phi = r.labeling();
  const std::size_t n = r.target().num_vertices();
  if (static_cast<std::size_t>(phi.label_count) != n) {
    throw InvalidInput("target must have one vertex per label");
  }
  auto nondeg = validate_nondegenerate(src, phi);
  if (!nondeg.ok()) throw InvalidInput("labeling is degenerate: " + nondeg.violations.front().detail);
  GeneralizedBound out;
  out.count = completely_labeled_cells(src, phi, CompleteMode::simplex).size();
  out.abs_boundary_degree = std::labs(boundary_degree(r).degree);
  out.bound = (n - static_cast<std::size_t>(r.dim())) * static_cast<std::size_t>(out.abs_boundary_degree);
  out.satisfied = out.count >= out.bound;
  out.parity_checked = out.abs_boundary_degree == 0;
  out.parity_ok = !out.parity_checked || out.count % 2 == 0;
  return out;
}

}  // namespace sperner
