#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sperner/cover.hpp"

namespace sperner::testgen {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
  const int den = uniform(rng, 1, max_den);
  return ratio(uniform(rng, lo * den, hi * den), den);
}

Polytope random_simplex(Rng& rng, int d) {
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i <= d; ++i) {
      Point p(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) p[k] = random_rational(rng, -3, 3, 4);
      pts.push_back(std::move(p));
    }
    if (affine_rank(pts) == d) return Polytope::from_vertices(std::move(pts));
  }
}

Point circle_point(const Rational& t) {
  const Rational den = 1 + t * t;
  return Point{Rational((1 - t * t) / den), Rational(2 * t / den)};
}

Polytope circle_polygon(Rng& rng, int n) {
  std::set<Rational> ts;
  while (static_cast<int>(ts.size()) < n) ts.insert(random_rational(rng, -6, 6, 4));
  // The angle 2 atan(t) increases with t, so sorted parameters are counterclockwise.
  std::vector<Point> pts;
  for (const auto& t : ts) pts.push_back(circle_point(t));
  return Polytope::from_vertices(std::move(pts));
}

Decomposition edgewise_depth(Decomposition d, int depth) {
  for (int i = 0; i < depth; ++i) d = edgewise_subdivide(d, 2);
  return d;
}

Labeling random_admissible(Rng& rng, const Decomposition& d, bool shuffle) {
  const int n = static_cast<int>(d.host().num_vertices());
  std::vector<int> host_labels(n);
  std::iota(host_labels.begin(), host_labels.end(), 1);
  if (shuffle) std::shuffle(host_labels.begin(), host_labels.end(), rng);

  Labeling phi;
  phi.label_count = n;
  phi.labels.assign(d.pool().size(), 0);
  const auto carriers = pool_carriers(d);
  for (std::size_t i = 0; i < d.pool().size(); ++i) {
    if (!carriers[i]) {
      phi.labels[i] = uniform(rng, 1, n);
      continue;
    }
    const auto& face = d.host().face(*carriers[i]).vertices;
    phi.labels[i] = host_labels[face[uniform(rng, 0, static_cast<int>(face.size()) - 1)]];
  }
  for (int v = 0; v < n; ++v) phi.labels[d.host_pool_index(v)] = host_labels[v];
  return phi;
}

namespace {

Decomposition refine(Decomposition d, int refinement) {
  if (refinement >= 1 && refinement <= 3) return edgewise_depth(std::move(d), refinement);
  if (refinement == 4) return barycentric_subdivide(d);
  return d;
}

std::string refinement_name(int refinement) {
  if (refinement == 0) return "none";
  if (refinement == 4) return "barycentric";
  return "edgewise^" + std::to_string(refinement);
}

}  // namespace

SpernerCase sperner_case(Rng& rng, int d, int refinement) {
  const bool standard = uniform(rng, 0, 1) == 0;
  Polytope host = standard ? Polytope::standard_simplex(d) : random_simplex(rng, d);
  auto decomposition = refine(Decomposition::triangulated(host), refinement);
  auto labeling = random_admissible(rng, decomposition);
  return {std::move(decomposition), std::move(labeling),
          "simplex d=" + std::to_string(d) + " " + refinement_name(refinement)};
}

AtanassovCase atanassov_case(Rng& rng, int d, int n, int refinement) {
  std::optional<Decomposition> base;
  if (d == 2) {
    base = Decomposition::triangulated(circle_polygon(rng, n));
  } else {
    base = stacked_polytope(d, n, rng()).decomposition;
  }
  auto decomposition = refine(std::move(*base), refinement);
  auto labeling = random_admissible(rng, decomposition);
  return {std::move(decomposition), std::move(labeling),
          (d == 2 ? "polygon" : "stacked") + std::string(" n=") + std::to_string(n) + " " +
              refinement_name(refinement)};
}

MirroredCase mirrored_case(Rng& rng, int half_vertices, int refinement) {
  // Left arc parameters u in (-1, 1): t = 1/u gives |t| > 1, u = 0 the point
  // (-1, 0). Decreasing u runs counterclockwise from the top.
  std::set<Rational> us;
  while (static_cast<int>(us.size()) < half_vertices) {
    Rational u = random_rational(rng, -1, 1, 6);
    if (abs(u) < 1) us.insert(u);
  }
  const Point shift{Rational(1), Rational(0)};
  std::vector<Point> left{Point{Rational(1), Rational(1)}};
  for (auto it = us.rbegin(); it != us.rend(); ++it) {
    left.push_back(sgn(*it) == 0 ? Point{Rational(0), Rational(0)} : circle_point(1 / *it) + shift);
  }
  left.push_back(Point{Rational(1), Rational(-1)});
  const Polytope left_poly = Polytope::from_vertices(left);

  auto half = refine(Decomposition::triangulated(left_poly), refinement);
  auto half_labels = random_admissible(rng, half);
  const auto assignment = *host_assignment(half, half_labels);

  auto mirror = [](const Point& p) { return Point{Rational(2 - p[0]), p[1]}; };
  std::vector<Point> pool = half.pool();
  std::vector<int> labels = half_labels.labels;
  std::vector<int> image(pool.size());
  for (std::size_t i = 0; i < half.pool().size(); ++i) {
    const auto& p = half.pool()[i];
    if (p[0] == 1) {
      image[i] = static_cast<int>(i);
      continue;
    }
    image[i] = static_cast<int>(pool.size());
    pool.push_back(mirror(p));
    labels.push_back(half_labels.labels[i]);
  }
  std::vector<Cell> cells = half.cells();
  for (const auto& c : half.cells()) {
    Cell m;
    for (int v : c) m.push_back(image[v]);
    cells.push_back(std::move(m));
  }
  std::vector<Point> hull = left;
  for (auto it = left.rbegin() + 1; it + 1 != left.rend(); ++it) hull.push_back(mirror(*it));
  Decomposition whole(Polytope::from_vertices(hull), std::move(pool), std::move(cells));

  Labeling phi;
  phi.labels = std::move(labels);
  phi.label_count = half_labels.label_count;
  phi.target_assignment = assignment;
  return {Realization(std::move(whole), std::move(phi), left_poly),
          "mirrored half_vertices=" + std::to_string(half_vertices) + " " + refinement_name(refinement)};
}

std::optional<NeighborCase> neighbor_case(Rng& rng, int n) {
  const Polytope outer = circle_polygon(rng, n);
  const Point c = outer.centroid();
  std::vector<Point> pool = outer.vertices();
  for (const auto& p : outer.vertices()) pool.push_back(c + (p - c) * ratio(1, 2));

  std::vector<Cell> cells;
  Cell central;
  for (int i = 0; i < n; ++i) central.push_back(n + i);
  cells.push_back(central);
  int splits = 0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    switch (uniform(rng, 0, 2)) {
      case 0:
        cells.push_back({i, j, n + j, n + i});
        break;
      case 1:
        cells.push_back({i, j, n + j});
        cells.push_back({i, n + j, n + i});
        ++splits;
        break;
      default:
        cells.push_back({i, j, n + i});
        cells.push_back({j, n + j, n + i});
        ++splits;
        break;
    }
  }
  Decomposition d(outer, std::move(pool), std::move(cells));

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  Labeling phi;
  phi.label_count = n;
  phi.labels.assign(2 * n, 0);
  const bool uniform_shift = uniform(rng, 0, 1) == 0;
  const int shift = uniform(rng, -1, 1);
  for (int i = 0; i < n; ++i) {
    phi.labels[i] = sigma[i];
    const int a = n == 3 ? uniform(rng, 0, 2) : (uniform_shift ? shift : uniform(rng, -1, 1));
    phi.labels[n + i] = sigma[((i + a) % n + n) % n];
  }
  if (!validate_neighbor_labeling(d, phi, SimilaritySpec::from_host(d, phi)).ok()) return std::nullopt;
  return NeighborCase{std::move(d), std::move(phi),
                      "neighbor n=" + std::to_string(n) + " splits=" + std::to_string(splits)};
}

}  // namespace sperner::testgen
