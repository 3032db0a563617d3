#include "sperner/fixedpoint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "sperner/error.hpp"

namespace sperner {

SelfMap SelfMap::barycentric(std::vector<Expr> components) {
  if (components.size() < 2) throw InvalidInput("a barycentric self-map needs at least two components");
  SelfMap f;
  f.dim_ = static_cast<int>(components.size()) - 1;
  for (const auto& c : components) {
    if (c.max_variable() > f.dim_ + 1) throw InvalidInput("component uses a variable beyond x" + std::to_string(f.dim_ + 1));
  }
  f.components_ = std::move(components);
  return f;
}

SelfMap SelfMap::cartesian(std::vector<Expr> components) {
  if (components.empty()) throw InvalidInput("a Cartesian self-map needs at least one component");
  SelfMap f;
  f.dim_ = static_cast<int>(components.size());
  f.cartesian_ = true;
  for (const auto& c : components) {
    if (c.max_variable() > f.dim_) throw InvalidInput("component uses a variable beyond x" + std::to_string(f.dim_));
  }
  f.components_ = std::move(components);
  return f;
}

SelfMap SelfMap::parse(std::string_view text, bool cartesian) {
  // One variable per component in either mode.
  const int vars = static_cast<int>(std::count(text.begin(), text.end(), ';')) + 1;
  auto exprs = parse_expr_list(text, vars);
  return cartesian ? SelfMap::cartesian(std::move(exprs)) : SelfMap::barycentric(std::move(exprs));
}

std::vector<Rational> SelfMap::apply(const std::vector<Rational>& lambda) const {
  if (lambda.size() != static_cast<std::size_t>(dim_) + 1) throw InvalidInput("barycentric point has wrong length");
  std::vector<Rational> out;
  out.reserve(lambda.size());
  if (cartesian_) {
    const std::vector<Rational> x(lambda.begin() + 1, lambda.end());
    Rational rest(1);
    std::vector<Rational> tail;
    for (const auto& c : components_) {
      tail.push_back(c.evaluate(x));
      rest -= tail.back();
    }
    out.push_back(std::move(rest));
    for (auto& t : tail) out.push_back(std::move(t));
  } else {
    for (const auto& c : components_) out.push_back(c.evaluate(lambda));
  }

  auto describe = [&] {
    std::string s = "f(";
    for (std::size_t i = 0; i < lambda.size(); ++i) s += (i ? "," : "") + to_string(lambda[i]);
    s += ") = (";
    for (std::size_t i = 0; i < out.size(); ++i) s += (i ? "," : "") + to_string(out[i]);
    return s + ")";
  };
  Rational total;
  for (const auto& v : out) {
    if (sgn(v) < 0) throw InvalidInput("map leaves the simplex: " + describe());
    total += v;
  }
  if (total != 1) throw InvalidInput("map leaves the simplex: " + describe());
  return out;
}

int sperner_label(const std::vector<Rational>& lambda, const std::vector<Rational>& image) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (sgn(lambda[i]) > 0 && image[i] <= lambda[i]) return static_cast<int>(i) + 1;
  }
  throw ConsistencyError("no admissible label; the image does not sum to 1");
}

Labeling induced_labeling(const SelfMap& f, const Decomposition& d, Exec exec) {
  const auto& host = d.host();
  if (!host.is_simplex() || host.dim() != f.dim()) {
    throw InvalidInput("induced labeling needs a " + std::to_string(f.dim()) + "-simplex host");
  }
  Labeling phi;
  phi.label_count = f.dim() + 1;
  phi.labels.assign(d.pool().size(), 0);
  for_each_index(exec, d.pool().size(), [&](std::size_t i) {
    auto lambda = *barycentric_coords(host.vertices(), d.pool()[i]);
    phi.labels[i] = sperner_label(lambda, f.apply(lambda));
  });
  return phi;
}

DoorWalk door_to_door_search(const Decomposition& d, const Labeling& phi) {
  if (d.kind() != CellKind::simplices) throw InvalidInput("door-to-door search needs simplex cells");
  phi.check(d.pool().size());
  const int dim = d.dim();
  if (phi.label_count != dim + 1) throw InvalidInput("door-to-door search needs d+1 labels");

  const auto& cells = d.cells();
  auto is_door = [&](const std::vector<int>& facet) {
    std::vector<int> ls;
    for (int v : facet) ls.push_back(phi.labels[v]);
    std::sort(ls.begin(), ls.end());
    for (int i = 0; i < dim; ++i) {
      if (ls[i] != i + 1) return false;
    }
    return true;
  };
  auto complete = [&](std::size_t c) {
    std::set<int> ls;
    for (int v : cells[c]) ls.insert(phi.labels[v]);
    return static_cast<int>(ls.size()) == dim + 1;
  };

  std::map<std::vector<int>, std::vector<std::size_t>> doors;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (int skip = 0; skip <= dim; ++skip) {
      std::vector<int> facet;
      for (int i = 0; i <= dim; ++i) {
        if (i != skip) facet.push_back(cells[c][i]);
      }
      std::sort(facet.begin(), facet.end());
      if (is_door(facet)) doors[facet].push_back(c);
    }
  }

  std::set<std::vector<int>> used;
  for (const auto& [start, owners] : doors) {
    if (owners.size() != 1 || used.count(start)) continue;
    used.insert(start);
    std::vector<int> door = start;
    std::size_t cell = owners.front();
    std::size_t steps = 0;
    while (true) {
      if (complete(cell)) return {cell, steps};
      // Exactly one other facet of this cell is a door.
      std::optional<std::vector<int>> next;
      for (int skip = 0; skip <= dim && !next; ++skip) {
        std::vector<int> facet;
        for (int i = 0; i <= dim; ++i) {
          if (i != skip) facet.push_back(cells[cell][i]);
        }
        std::sort(facet.begin(), facet.end());
        if (facet != door && is_door(facet)) next = std::move(facet);
      }
      if (!next) throw ConsistencyError("cell " + std::to_string(cell) + " has a single door");
      door = std::move(*next);
      const auto& sharing = doors.at(door);
      if (sharing.size() == 1) {
        used.insert(door);
        break;
      }
      if (sharing.size() != 2) throw InvalidInput("facet shared by more than two cells");
      cell = sharing[0] == cell ? sharing[1] : sharing[0];
      ++steps;
    }
  }
  throw InvalidInput("no boundary path reaches a completely labeled cell; labeling is not Sperner");
}

namespace {

// The order-n edgewise grid of the d-simplex in z-coordinates
// n >= z_1 >= ... >= z_d >= 0. A cell is a base corner plus the order in
// which unit steps are taken.
class EdgewiseGrid {
 public:
  using Z = std::vector<long>;

  EdgewiseGrid(const SelfMap& f, long n) : f_(f), n_(n), d_(f.dim()) {}

  struct GridCell {
    Z base;
    std::vector<int> perm;
    bool operator<(const GridCell& o) const { return std::tie(base, perm) < std::tie(o.base, o.perm); }
  };

  std::vector<Z> vertices(const GridCell& c) const {
    std::vector<Z> out{c.base};
    for (int i = 0; i < d_; ++i) {
      Z next = out.back();
      ++next[c.perm[i]];
      out.push_back(std::move(next));
    }
    return out;
  }

  bool inside(const Z& z) const {
    if (z[0] > n_ || z[d_ - 1] < 0) return false;
    for (int i = 0; i + 1 < d_; ++i) {
      if (z[i] < z[i + 1]) return false;
    }
    return true;
  }

  bool inside(const GridCell& c) const {
    for (const auto& v : vertices(c)) {
      if (!inside(v)) return false;
    }
    return true;
  }

  // Neighbor across the facet opposite vertex j, and the index of the vertex
  // it gains.
  std::pair<GridCell, int> pivot(const GridCell& c, int j) const {
    GridCell out = c;
    if (j == 0) {
      ++out.base[c.perm[0]];
      std::rotate(out.perm.begin(), out.perm.begin() + 1, out.perm.end());
      return {out, d_};
    }
    if (j == d_) {
      --out.base[c.perm[d_ - 1]];
      std::rotate(out.perm.begin(), out.perm.end() - 1, out.perm.end());
      return {out, 0};
    }
    std::swap(out.perm[j - 1], out.perm[j]);
    return {out, j};
  }

  std::vector<Rational> lambda(const Z& z) const {
    std::vector<Rational> out(d_ + 1);
    out[0] = ratio(n_ - z[0], n_);
    for (int k = 1; k < d_; ++k) out[k] = ratio(z[k - 1] - z[k], n_);
    out[d_] = ratio(z[d_ - 1], n_);
    return out;
  }

  int label(const Z& z) {
    auto it = labels_.find(z);
    if (it != labels_.end()) return it->second;
    auto l = lambda(z);
    const int value = sperner_label(l, f_.apply(l));
    labels_.emplace(z, value);
    return value;
  }

  // Cells with a facet on z_d = 0: last coordinate of the base is 0 and the
  // final step raises it. The facet is opposite vertex d.
  template <class Visit>
  bool for_each_boundary_cell(Visit&& visit) const {
    std::vector<int> rest(d_ - 1);
    std::iota(rest.begin(), rest.end(), 0);
    Z base(d_, 0);
    return enumerate_base(base, 0, rest, visit);
  }

 private:
  template <class Visit>
  bool enumerate_base(Z& base, int k, const std::vector<int>& rest, Visit& visit) const {
    if (k == d_ - 1) {
      std::vector<int> perm = rest;
      do {
        GridCell c{base, perm};
        c.perm.push_back(d_ - 1);
        if (inside(c) && visit(c)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    const long hi = k == 0 ? n_ : base[k - 1];
    for (long v = 0; v <= hi; ++v) {
      base[k] = v;
      if (enumerate_base(base, k + 1, rest, visit)) return true;
    }
    base[k] = 0;
    return false;
  }

  const SelfMap& f_;
  long n_;
  int d_;
  std::map<Z, int> labels_;
};

}  // namespace

FixpointResult fixed_point_at(const SelfMap& f, long n) {
  if (n < 1) throw InvalidInput("grid order must be positive");
  const int d = f.dim();
  EdgewiseGrid grid(f, n);
  using GridCell = EdgewiseGrid::GridCell;

  auto cell_labels = [&](const GridCell& c) {
    std::vector<int> out;
    for (const auto& z : grid.vertices(c)) out.push_back(grid.label(z));
    return out;
  };
  auto is_door = [&](const std::vector<int>& labels, int skip) {
    std::vector<bool> seen(d + 2, false);
    for (int i = 0; i <= d; ++i) {
      if (i == skip) continue;
      if (labels[i] > d || seen[labels[i]]) return false;
      seen[labels[i]] = true;
    }
    return true;
  };

  std::set<GridCell> spent;  // boundary cells whose door has been used
  std::optional<GridCell> found;
  std::size_t found_steps = 0;
  grid.for_each_boundary_cell([&](const GridCell& start) {
    if (spent.count(start)) return false;
    if (!is_door(cell_labels(start), d)) return false;
    spent.insert(start);
    GridCell cell = start;
    int entry = d;
    std::size_t steps = 0;
    while (true) {
      auto labels = cell_labels(cell);
      std::set<int> distinct(labels.begin(), labels.end());
      if (static_cast<int>(distinct.size()) == d + 1) {
        found = cell;
        found_steps = steps;
        return true;
      }
      int exit = -1;
      for (int j = 0; j <= d; ++j) {
        if (j != entry && is_door(labels, j)) exit = j;
      }
      if (exit < 0) throw ConsistencyError("grid cell has a single door");
      auto [next, gained] = grid.pivot(cell, exit);
      if (!grid.inside(next)) {
        spent.insert(cell);
        return false;
      }
      cell = std::move(next);
      entry = gained;
      ++steps;
    }
  });
  if (!found) throw ConsistencyError("no completely labeled cell reached from the boundary");

  FixpointResult r;
  r.subdivisions = n;
  r.diameter = ratio(1, n);
  r.steps = found_steps;
  r.witness.assign(d + 1, Rational(0));
  for (const auto& z : grid.vertices(*found)) {
    r.cell.push_back(grid.lambda(z));
    r.cell_labels.push_back(grid.label(z));
    for (int i = 0; i <= d; ++i) r.witness[i] += r.cell.back()[i];
  }
  for (auto& w : r.witness) w /= d + 1;
  const auto image = f.apply(r.witness);
  for (int i = 0; i <= d; ++i) r.residual = std::max(r.residual, Rational(abs(image[i] - r.witness[i])));
  return r;
}

FixpointResult find_fixed_point(const SelfMap& f, int max_depth, int order, const Rational& tolerance) {
  if (order < 2) throw InvalidInput("subdivision order must be at least 2");
  if (max_depth < 0) throw InvalidInput("depth must be non-negative");
  if (sgn(tolerance) <= 0) throw InvalidInput("tolerance must be positive");
  FixpointResult r;
  long n = 1;
  for (int k = 0; k <= max_depth; ++k) {
    r = fixed_point_at(f, n);
    r.depth = k;
    r.tolerance_met = r.diameter <= tolerance;
    if (r.tolerance_met || k == max_depth) break;
    if (n > (1L << 40) / order) throw InvalidInput("grid order exceeds supported range");
    n *= order;
  }
  return r;
}

}  // namespace sperner
