// Command-line front end. Reports are key=value lines (or one JSON object
// with --json); exit codes: 0 ok, 1 theorem check failed, 2 invalid input,
// 3 I/O or parse error.
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sperner/cover.hpp"
#include "sperner/degree.hpp"
#include "sperner/error.hpp"
#include "sperner/fixedpoint.hpp"
#include "sperner/instance.hpp"

using namespace sperner;
using nlohmann::json;

namespace {

class Report {
 public:
  using Field = std::pair<std::string, json>;

  void line(std::vector<Field> fields) { lines_.push_back(std::move(fields)); }
  void item(const std::string& list, json value) { lists_.emplace_back(list, std::move(value)); }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc = json::object();
      for (const auto& l : lines_) {
        for (const auto& [k, v] : l) doc[k] = v;
      }
      for (const auto& [k, v] : lists_) {
        if (!doc.contains(k)) doc[k] = json::array();
        doc[k].push_back(v);
      }
      out << doc.dump(2) << "\n";
      return;
    }
    for (const auto& l : lines_) {
      for (std::size_t i = 0; i < l.size(); ++i) {
        out << (i ? " " : "") << l[i].first << "=" << text(l[i].second);
      }
      out << "\n";
    }
    for (const auto& [k, v] : lists_) out << k << ": " << text(v) << "\n";
  }

 private:
  static std::string text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

  std::vector<std::vector<Field>> lines_;
  std::vector<std::pair<std::string, json>> lists_;
};

std::string point_text(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) s += (i ? ", " : "") + to_string(p[i]);
  return s + ")";
}

std::string rationals_text(const std::vector<Rational>& v) { return point_text(Point(v)); }

json violation_json(const Violation& v) {
  std::string s = v.kind + ": " + v.detail;
  if (!v.cells.empty()) {
    s += " [cells";
    for (int c : v.cells) s += " " + std::to_string(c);
    s += "]";
  }
  return s;
}

struct Options {
  bool json = false;
  std::string file;
  std::string discipline;
  std::string mode = "simplex";
  std::size_t budget = 0;
  std::string out;
  int dim = 2;
  int n = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> expr;
  int depth = 6;
  int order = 2;
  std::string tol = "1/1000";
  bool cartesian = false;
};

int cmd_validate(const Options& o, Report& r) {
  const auto inst = read_instance_file(o.file);
  const auto d = inst.decomposition();
  const auto geometry = validate_decomposition(d);
  r.line({{"cells", d.cells().size()}, {"pool", d.pool().size()}, {"decomposition", geometry.ok() ? "ok" : "invalid"}});
  if (geometry.weak_face_check) r.line({{"face_check", "combinatorial"}});
  for (const auto& v : geometry.violations) r.item("violation", violation_json(v));
  if (!geometry.ok()) return 2;
  if (o.discipline.empty()) return 0;

  const auto phi = inst.labeling();
  LabelingReport labels;
  if (o.discipline == "sperner") {
    labels = validate_sperner(d, phi);
  } else if (o.discipline == "atanassov") {
    labels = validate_atanassov(d, phi);
  } else if (o.discipline == "nondegenerate") {
    labels = validate_nondegenerate(d, phi);
  } else {
    auto report = validate_atanassov(d, phi);
    labels = report.ok() ? validate_neighbor_labeling(d, phi, SimilaritySpec::from_host(d, phi)) : report;
  }
  r.line({{"discipline", o.discipline}, {"valid", labels.ok()}});
  for (const auto& v : labels.violations) r.item("violation", violation_json(v));
  return labels.ok() ? 0 : 2;
}

int cmd_count(const Options& o, Report& r) {
  const auto inst = read_instance_file(o.file);
  const auto d = inst.decomposition();
  const auto phi = inst.labeling();
  const auto mode = o.mode == "full" ? CompleteMode::full : CompleteMode::simplex;
  const auto cells = completely_labeled_cells(d, phi, mode);

  std::vector<Report::Field> fields{{"count", cells.size()}};
  bool failed = false;
  if (mode == CompleteMode::simplex) {
    if (d.kind() == CellKind::simplices && validate_atanassov(d, phi).ok()) {
      auto b = check_atanassov_bound(d, phi);
      fields.emplace_back("bound", b.bound);
      fields.emplace_back("satisfied", b.satisfied);
      failed |= !b.satisfied;
    }
    if (validate_sperner(d, phi).ok()) {
      auto p = check_sperner_parity(d, phi);
      fields.emplace_back("parity", p.odd ? "odd" : "even");
      failed |= !p.odd;
    }
  } else if (validate_atanassov(d, phi).ok() &&
             validate_neighbor_labeling(d, phi, SimilaritySpec::from_host(d, phi)).ok()) {
    auto e = check_neighbor_lemma(d, phi, SimilaritySpec::from_host(d, phi));
    fields.emplace_back("exists", e.satisfied);
    failed |= !e.satisfied;
  }
  if (fields.size() == 1) fields.emplace_back("verdict", "none");
  r.line(std::move(fields));
  for (auto c : cells) r.item("cell", c);
  if (failed) throw ConsistencyError("completely labeled count contradicts the theorem");
  return 0;
}

int cmd_degree(const Options& o, Report& r) {
  const auto inst = read_instance_file(o.file);
  auto d = inst.decomposition();
  auto phi = inst.labeling();
  auto target = inst.target_polytope();
  const Realization real = target ? Realization(std::move(d), std::move(phi), std::move(*target))
                                  : Realization::onto_host(std::move(d), std::move(phi));
  const auto ids = verify_degree_identities(real);
  r.line({{"deg", ids.degree}, {"deg_boundary", ids.boundary_degree}, {"sum_cells", ids.cell_sum},
          {"consistent", ids.consistent}});
  const auto report = degree(real);
  r.line({{"regular_value", point_text(report.regular_value)},
          {"boundary_regular_value", point_text(report.boundary_regular_value)}});
  if (!ids.consistent) throw ConsistencyError("degree identities disagree");

  const bool bijective = real.target().num_vertices() == static_cast<std::size_t>(real.labeling().label_count);
  if (bijective && validate_nondegenerate(real.source(), real.labeling()).ok()) {
    const auto g = check_generalized_bound(real);
    std::vector<Report::Field> fields{{"count", g.count}, {"bound", g.bound}, {"satisfied", g.satisfied}};
    if (g.parity_checked) fields.emplace_back("parity_ok", g.parity_ok);
    r.line(std::move(fields));
    if (!g.satisfied || !g.parity_ok) throw ConsistencyError("complete-cell count contradicts the degree bound");
  }
  return 0;
}

Instance with_cover(Instance inst, const CoverCertificate& cert) {
  CoverSection section;
  section.simplices = cert.simplices;
  section.covers = cert.covers;
  section.size = cert.size;
  section.lower_bound = cert.lower_bound;
  inst.cover = std::move(section);
  return inst;
}

int cmd_cover(const Options& o, Report& r) {
  const auto inst = read_instance_file(o.file);
  const auto p = inst.host();
  if (inst.cover && !inst.cover->simplices.empty()) {
    auto given = is_cover(p, inst.cover->simplices);
    r.line({{"given_size", inst.cover->simplices.size()}, {"given_covers", given.covers},
            {"given_uncovered", to_string(given.uncovered)}});
  }
  const std::size_t budget = o.budget ? o.budget : p.num_vertices();
  const auto cert = min_vertex_spanned_cover(p, budget);
  r.line({{"size", cert.size}, {"lower_bound", cert.lower_bound}, {"covers", cert.covers},
          {"exact", cert.exact()}, {"scope", "vertex-spanned"}});
  for (const auto& vs : cert.vertex_sets) r.item("simplex", vs);
  if (cert.size < cert.lower_bound) throw ConsistencyError("cover smaller than n - d");
  if (!o.out.empty()) write_instance_file(o.out, with_cover(inst, cert));
  return 0;
}

int cmd_stacked(const Options& o, Report& r) {
  const auto s = stacked_polytope(o.dim, o.n, o.seed);
  r.line({{"dim", o.dim}, {"n", s.polytope.num_vertices()}, {"cells", s.decomposition.cells().size()},
          {"seed", o.seed}});
  for (const auto& v : s.polytope.vertices()) r.item("vertex", point_text(v));
  if (!o.out.empty()) {
    CoverCertificate cert;
    for (std::size_t c = 0; c < s.decomposition.cells().size(); ++c) {
      cert.simplices.push_back(s.decomposition.cell_points(c));
    }
    cert.covers = true;
    cert.size = cert.simplices.size();
    cert.lower_bound = s.polytope.num_vertices() - static_cast<std::size_t>(o.dim);
    write_instance_file(o.out, with_cover(make_instance(s.decomposition), cert));
  }
  return 0;
}

int cmd_fixpoint(const Options& o, Report& r) {
  std::string text;
  for (const auto& e : o.expr) text += (text.empty() ? "" : ";") + e;
  const auto f = SelfMap::parse(text, o.cartesian);
  const auto result = find_fixed_point(f, o.depth, o.order, parse_rational(o.tol));
  r.line({{"depth", result.depth}, {"subdivisions", result.subdivisions}, {"diameter", to_string(result.diameter)},
          {"residual", to_string(result.residual)}, {"tolerance_met", result.tolerance_met}});
  r.line({{"witness", rationals_text(result.witness)}, {"steps", result.steps}});
  for (std::size_t i = 0; i < result.cell.size(); ++i) {
    r.item("vertex", rationals_text(result.cell[i]) + " label " + std::to_string(result.cell_labels[i]));
  }
  return 0;
}

int cmd_render(const Options& o, Report& r) {
  const auto inst = read_instance_file(o.file);
  const auto d = inst.decomposition();
  const auto svg = render_svg(d, inst.labeling());
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw ParseError("cannot write " + o.out);
  out << svg;
  r.line({{"written", o.out}, {"cells", d.cells().size()}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sperner-type labeling theorems: validation, counting, degrees, covers, fixed points"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit the report as a JSON object");

  auto* validate = app.add_subcommand("validate", "Validate a decomposition and labeling discipline");
  validate->add_option("file", o.file)->required();
  validate->add_option("--discipline", o.discipline)
      ->check(CLI::IsMember({"sperner", "atanassov", "nondegenerate", "neighbor"}));

  auto* count = app.add_subcommand("count", "Count completely labeled cells");
  count->add_option("file", o.file)->required();
  count->add_option("--mode", o.mode)->check(CLI::IsMember({"simplex", "full"}));

  auto* deg = app.add_subcommand("degree", "Degree of the realization map and its identities");
  deg->add_option("file", o.file)->required();

  auto* cover = app.add_subcommand("cover", "Smallest vertex-spanned simplicial cover");
  cover->add_option("file", o.file)->required();
  cover->add_option("--budget", o.budget, "Largest cover size to try (default n)");
  cover->add_option("--out", o.out, "Write the instance with a cover section");

  auto* stacked = app.add_subcommand("stacked", "Generate a stacked polytope");
  stacked->add_option("--dim", o.dim)->required();
  stacked->add_option("--n", o.n)->required();
  stacked->add_option("--seed", o.seed);
  stacked->add_option("--out", o.out, "Write the instance file");

  auto* fix = app.add_subcommand("fixpoint", "Approximate a fixed point of a self-map of the simplex");
  fix->add_option("--expr", o.expr, "Components separated by ';', or one per --expr")->required();
  fix->add_option("--depth", o.depth);
  fix->add_option("--order", o.order);
  fix->add_option("--tol", o.tol);
  fix->add_flag("--cartesian", o.cartesian, "Components are Cartesian on conv(0, e1, ..., ed)");

  auto* render = app.add_subcommand("render", "Draw a 2-dimensional instance as SVG");
  render->add_option("file", o.file)->required();
  render->add_option("--out", o.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  int status = 0;
  try {
    if (*validate) status = cmd_validate(o, report);
    if (*count) status = cmd_count(o, report);
    if (*deg) status = cmd_degree(o, report);
    if (*cover) status = cmd_cover(o, report);
    if (*stacked) status = cmd_stacked(o, report);
    if (*fix) status = cmd_fixpoint(o, report);
    if (*render) status = cmd_render(o, report);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    report.print(std::cout, o.json);
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const RegularValueExhausted& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const CoverBudgetExhausted& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  report.print(std::cout, o.json);
  return status;
}
