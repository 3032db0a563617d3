#include "sperner/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "sperner/error.hpp"

namespace sperner {

void Labeling::check(std::size_t pool_size) const {
  if (label_count < 1) throw InvalidInput("label count must be positive");
  if (labels.size() != pool_size) {
    throw InvalidInput("labeling has " + std::to_string(labels.size()) + " labels for " +
                       std::to_string(pool_size) + " pool vertices");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > label_count) {
      throw InvalidInput("label of pool vertex " + std::to_string(i) + " out of range");
    }
  }
  if (!target_assignment.empty()) {
    if (target_assignment.size() != static_cast<std::size_t>(label_count)) {
      throw InvalidInput("target assignment must list one vertex per label");
    }
    std::set<int> seen(target_assignment.begin(), target_assignment.end());
    if (seen.size() != target_assignment.size()) throw InvalidInput("target assignment is not injective");
  }
}

std::optional<std::vector<int>> host_assignment(const Decomposition& d, const Labeling& phi) {
  const auto& host = d.host();
  if (static_cast<std::size_t>(phi.label_count) != host.num_vertices()) return std::nullopt;
  std::vector<int> assignment(phi.label_count, -1);
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    const int label = phi.labels[d.host_pool_index(v)];
    if (assignment[label - 1] != -1) return std::nullopt;
    assignment[label - 1] = static_cast<int>(v);
  }
  return assignment;
}

SimilaritySpec SimilaritySpec::from_host(const Decomposition& d, const Labeling& phi) {
  auto assignment = host_assignment(d, phi);
  if (!assignment) throw InvalidInput("host vertex labels are not a permutation of 1..n");
  SimilaritySpec spec;
  const int n = phi.label_count;
  spec.level_.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> pair{(*assignment)[a], (*assignment)[b]};
      std::sort(pair.begin(), pair.end());
      const int k = d.host().join_dim(pair);
      spec.level_[a][b] = spec.level_[b][a] = k;
    }
  }
  return spec;
}

std::vector<std::optional<std::size_t>> pool_carriers(const Decomposition& d) {
  std::vector<std::optional<std::size_t>> out;
  out.reserve(d.pool().size());
  for (const auto& p : d.pool()) out.push_back(d.host().carrier(p));
  return out;
}

namespace {

std::string label_list(const std::set<int>& labels) {
  std::string s = "{";
  for (int l : labels) {
    if (s.size() > 1) s += ',';
    s += std::to_string(l);
  }
  return s + "}";
}

// Each pool vertex must carry the label of some host vertex of its carrier.
void check_carriers(const Decomposition& d, const Labeling& phi, LabelingReport& report) {
  const auto carriers = pool_carriers(d);
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    if (!carriers[i]) continue;
    std::set<int> allowed;
    for (int hv : d.host().face(*carriers[i]).vertices) allowed.insert(phi.labels[d.host_pool_index(hv)]);
    if (!allowed.count(phi.labels[i])) {
      report.violations.push_back({"label_not_on_carrier", {}, {static_cast<int>(i)},
                                   "label " + std::to_string(phi.labels[i]) + " not in carrier labels " +
                                       label_list(allowed)});
    }
  }
}

bool host_labels_distinct(const Decomposition& d, const Labeling& phi) {
  std::set<int> seen;
  for (int idx : d.host_pool_indices()) {
    if (!seen.insert(phi.labels[idx]).second) return false;
  }
  return true;
}

}  // namespace

LabelingReport validate_sperner(const Decomposition& d, const Labeling& phi) {
  phi.check(d.pool().size());
  LabelingReport report;
  if (!d.host().is_simplex()) {
    report.violations.push_back({"host_not_simplex", {}, {}, "Sperner labelings need a simplex host"});
    return report;
  }
  if (phi.label_count != d.dim() + 1) {
    report.violations.push_back({"label_count", {}, {}, "Sperner labelings use exactly d+1 labels"});
    return report;
  }
  if (!host_labels_distinct(d, phi)) {
    report.violations.push_back({"host_labels", {}, {}, "host vertices must carry distinct labels"});
    return report;
  }
  check_carriers(d, phi, report);
  return report;
}

LabelingReport validate_atanassov(const Decomposition& d, const Labeling& phi) {
  phi.check(d.pool().size());
  LabelingReport report;
  if (!host_assignment(d, phi)) {
    report.violations.push_back({"host_labels", {}, {},
                                 "host vertex labels must be a permutation of 1..n"});
    return report;
  }
  check_carriers(d, phi, report);
  return report;
}

LabelingReport validate_nondegenerate(const Decomposition& d, const Labeling& phi) {
  phi.check(d.pool().size());
  LabelingReport report;
  const auto& host = d.host();
  for (auto f : host.facets()) {
    const auto& h = host.face(f).support;
    std::set<int> labels;
    std::vector<int> members;
    for (std::size_t i = 0; i < d.pool().size(); ++i) {
      if (h.side(d.pool()[i]) == 0) {
        labels.insert(phi.labels[i]);
        members.push_back(static_cast<int>(i));
      }
    }
    if (static_cast<int>(labels.size()) >= d.dim() + 1) {
      report.violations.push_back({"degenerate_facet", {}, members,
                                   "host facet " + std::to_string(f) + " carries labels " + label_list(labels)});
    }
  }
  return report;
}

LabelingReport validate_neighbor_labeling(const Decomposition& d, const Labeling& phi,
                                          const SimilaritySpec& sim) {
  phi.check(d.pool().size());
  LabelingReport report;
  if (!host_assignment(d, phi)) {
    report.violations.push_back({"host_labels", {}, {},
                                 "host vertex labels must be a permutation of 1..n"});
    return report;
  }
  if (sim.label_count() != phi.label_count) throw InvalidInput("similarity spec does not match label count");
  check_carriers(d, phi, report);

  const int dim = d.dim();
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    const auto& cell = d.cells()[c];
    const int k = static_cast<int>(cell.size());
    std::optional<FaceLattice> lattice;
    if (k != dim + 1) lattice = face_lattice(d.cell_points(c));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int shared_dim = dim;
        if (!lattice) {
          shared_dim = 1;
        } else {
          for (const auto& f : lattice->faces()) {
            if (f.dim < shared_dim && std::binary_search(f.vertices.begin(), f.vertices.end(), i) &&
                std::binary_search(f.vertices.begin(), f.vertices.end(), j)) {
              shared_dim = f.dim;
            }
          }
        }
        if (shared_dim >= dim) continue;
        const int a = phi.labels[cell[i]], b = phi.labels[cell[j]];
        if (!sim.similar(a, b, shared_dim)) {
          report.violations.push_back({"labels_not_similar", {static_cast<int>(c)}, {cell[i], cell[j]},
                                       "labels " + std::to_string(a) + "," + std::to_string(b) +
                                           " on a common " + std::to_string(shared_dim) +
                                           "-face are not " + std::to_string(shared_dim) + "-similar"});
        }
      }
    }
  }
  return report;
}

std::vector<std::size_t> completely_labeled_cells(const Decomposition& d, const Labeling& phi,
                                                  CompleteMode mode, Exec exec) {
  phi.check(d.pool().size());
  const std::size_t needed =
      mode == CompleteMode::full ? static_cast<std::size_t>(phi.label_count) : static_cast<std::size_t>(d.dim()) + 1;
  const auto& cells = d.cells();
  std::vector<std::size_t> out;

  if (exec == Exec::serial || phi.label_count > 64) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::set<int> labels;
      for (int v : cells[c]) labels.insert(phi.labels[v]);
      if (labels.size() >= needed) out.push_back(c);
    }
    return out;
  }

  std::vector<char> hit(cells.size(), 0);
  const long n = static_cast<long>(cells.size());
  const int* labels = phi.labels.data();
#pragma omp parallel for schedule(static)
  for (long c = 0; c < n; ++c) {
    std::uint64_t mask = 0;
    for (int v : cells[c]) mask |= std::uint64_t{1} << (labels[v] - 1);
    hit[c] = static_cast<std::size_t>(__builtin_popcountll(mask)) >= needed;
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (hit[c]) out.push_back(c);
  }
  return out;
}

ParityResult check_sperner_parity(const Decomposition& d, const Labeling& phi) {
  auto report = validate_sperner(d, phi);
  if (!report.ok()) throw InvalidInput("not a Sperner labeling: " + report.violations.front().detail);
  ParityResult r;
  r.count = completely_labeled_cells(d, phi, CompleteMode::simplex).size();
  r.odd = r.count % 2 == 1;
  return r;
}

BoundResult check_atanassov_bound(const Decomposition& d, const Labeling& phi) {
  if (d.kind() != CellKind::simplices) throw InvalidInput("Atanassov bound needs simplex cells");
  auto report = validate_atanassov(d, phi);
  if (!report.ok()) throw InvalidInput("not an Atanassov labeling: " + report.violations.front().detail);
  BoundResult r;
  r.count = completely_labeled_cells(d, phi, CompleteMode::simplex).size();
  r.bound = d.host().num_vertices() - static_cast<std::size_t>(d.dim());
  r.satisfied = r.count >= r.bound;
  return r;
}

ExistenceResult check_neighbor_lemma(const Decomposition& d, const Labeling& phi,
                                     const SimilaritySpec& sim) {
  auto report = validate_neighbor_labeling(d, phi, sim);
  if (!report.ok()) throw InvalidInput("not a neighbor labeling: " + report.violations.front().detail);
  ExistenceResult r;
  r.count = completely_labeled_cells(d, phi, CompleteMode::full).size();
  r.satisfied = r.count >= 1;
  return r;
}

}  // namespace sperner
