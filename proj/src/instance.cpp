#include "sperner/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sperner/error.hpp"

namespace sperner {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw ParseError("instance " + where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing \"") + key + "\"");
  return *it;
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      schema(where, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
  schema(where, "rationals must be strings \"p/q\" or integers");
}

Point read_point(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) schema(where, "expected a coordinate array");
  if (static_cast<int>(v.size()) != dim) schema(where, "expected " + std::to_string(dim) + " coordinates");
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < v.size(); ++i) coords.push_back(read_rational(v[i], where));
  return Point(std::move(coords));
}

std::vector<Point> read_points(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_point(v[i], dim, where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> read_ints(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an integer array");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) schema(where, "expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> read_int_lists(const json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of index lists");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_ints(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json write_point(const Point& p) {
  json a = json::array();
  for (const auto& c : p) a.push_back(to_string(c));
  return a;
}

json write_points(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(write_point(p));
  return a;
}

Polytope build_polytope(const std::vector<Point>& vertices, const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) return Polytope::from_vertices(vertices);
  return Polytope::from_vertices_and_faces(vertices, faces);
}

}  // namespace

Polytope Instance::host() const { return build_polytope(vertices, faces); }

Decomposition Instance::decomposition() const {
  if (cells.empty()) throw InvalidInput("instance has no cells");
  return Decomposition(host(), pool, cells);
}

Labeling Instance::labeling() const {
  if (labels.empty()) throw InvalidInput("instance has no labels");
  Labeling phi;
  phi.labels = labels;
  if (label_count) {
    phi.label_count = *label_count;
  } else if (target) {
    phi.label_count = static_cast<int>(target->vertices.size());
  } else {
    phi.label_count = static_cast<int>(vertices.size());
  }
  if (target) phi.target_assignment = target->assignment;
  return phi;
}

std::optional<Polytope> Instance::target_polytope() const {
  if (!target) return std::nullopt;
  return build_polytope(target->vertices, target->faces);
}

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  Instance inst;
  const auto& dim = member(doc, "dimension", "root");
  if (!dim.is_number_integer() || dim.get<int>() < 1) schema("dimension", "expected a positive integer");
  inst.dimension = dim.get<int>();
  const int d = inst.dimension;

  const auto& poly = member(doc, "polytope", "root");
  inst.vertices = read_points(member(poly, "vertices", "polytope"), d, "polytope.vertices");
  if (poly.contains("faces")) inst.faces = read_int_lists(poly["faces"], "polytope.faces");

  if (doc.contains("pool")) inst.pool = read_points(doc["pool"], d, "pool");
  if (doc.contains("cells")) inst.cells = read_int_lists(doc["cells"], "cells");
  if (doc.contains("labels")) inst.labels = read_ints(doc["labels"], "labels");
  if (doc.contains("label_count")) {
    if (!doc["label_count"].is_number_integer()) schema("label_count", "expected an integer");
    inst.label_count = doc["label_count"].get<int>();
  }
  if (doc.contains("target")) {
    const auto& t = doc["target"];
    TargetSpec spec;
    spec.vertices = read_points(member(t, "vertices", "target"), d, "target.vertices");
    if (t.contains("faces")) spec.faces = read_int_lists(t["faces"], "target.faces");
    spec.assignment = read_ints(member(t, "assignment", "target"), "target.assignment");
    inst.target = std::move(spec);
  }
  if (doc.contains("cover")) {
    const auto& c = doc["cover"];
    CoverSection section;
    const auto& simplices = member(c, "simplices", "cover");
    if (!simplices.is_array()) schema("cover.simplices", "expected an array");
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      section.simplices.push_back(read_points(simplices[i], d, "cover.simplices[" + std::to_string(i) + "]"));
    }
    if (c.contains("covers")) {
      if (!c["covers"].is_boolean()) schema("cover.covers", "expected a boolean");
      section.covers = c["covers"].get<bool>();
    }
    if (c.contains("size")) {
      if (!c["size"].is_number_unsigned()) schema("cover.size", "expected a non-negative integer");
      section.size = c["size"].get<std::size_t>();
    }
    if (c.contains("lower_bound")) {
      if (!c["lower_bound"].is_number_unsigned()) schema("cover.lower_bound", "expected a non-negative integer");
      section.lower_bound = c["lower_bound"].get<std::size_t>();
    }
    inst.cover = std::move(section);
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc = json::object();
  doc["dimension"] = inst.dimension;
  json poly = json::object();
  poly["vertices"] = write_points(inst.vertices);
  if (!inst.faces.empty()) poly["faces"] = inst.faces;
  doc["polytope"] = poly;
  doc["pool"] = write_points(inst.pool);
  doc["cells"] = inst.cells;
  doc["labels"] = inst.labels;
  if (inst.label_count) doc["label_count"] = *inst.label_count;
  if (inst.target) {
    json t = json::object();
    t["vertices"] = write_points(inst.target->vertices);
    if (!inst.target->faces.empty()) t["faces"] = inst.target->faces;
    t["assignment"] = inst.target->assignment;
    doc["target"] = t;
  }
  if (inst.cover) {
    json c = json::object();
    json simplices = json::array();
    for (const auto& s : inst.cover->simplices) simplices.push_back(write_points(s));
    c["simplices"] = simplices;
    if (inst.cover->covers) c["covers"] = *inst.cover->covers;
    if (inst.cover->size) c["size"] = *inst.cover->size;
    if (inst.cover->lower_bound) c["lower_bound"] = *inst.cover->lower_bound;
    doc["cover"] = c;
  }
  return doc.dump(2) + "\n";
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_instance(inst);
}

Instance make_instance(const Decomposition& d, const std::optional<Labeling>& phi) {
  Instance inst;
  inst.dimension = d.dim();
  inst.vertices = d.host().vertices();
  if (d.dim() > 3) {
    for (const auto& f : d.host().lattice().faces()) inst.faces.push_back(f.vertices);
  }
  inst.pool = d.pool();
  inst.cells = d.cells();
  if (phi) {
    inst.labels = phi->labels;
    if (phi->label_count != static_cast<int>(d.host().num_vertices())) inst.label_count = phi->label_count;
  }
  return inst;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const Decomposition& d, const Labeling& phi) {
  if (d.dim() != 2) throw InvalidInput("rendering needs a 2-dimensional decomposition");
  if (d.cells().empty()) throw InvalidInput("nothing to render: no cells");
  phi.check(d.pool().size());

  constexpr double size = 400, margin = 24;
  const auto& hv = d.host().vertices();
  Rational xmin = hv[0][0], xmax = hv[0][0], ymin = hv[0][1], ymax = hv[0][1];
  for (const auto& p : hv) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  const Rational span = std::max(xmax - xmin, ymax - ymin);
  const double scale = (size - 2 * margin) / span.get_d();
  auto sx = [&](const Point& p) { return margin + Rational(p[0] - xmin).get_d() * scale; };
  auto sy = [&](const Point& p) { return size - margin - Rational(p[1] - ymin).get_d() * scale; };

  const auto complete = completely_labeled_cells(d, phi, CompleteMode::simplex, Exec::serial);
  std::vector<bool> highlighted(d.cells().size(), false);
  for (auto c : complete) highlighted[c] = true;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    // Order cell vertices counterclockwise around the centroid.
    auto pts = d.cell_points(c);
    double cx = 0, cy = 0;
    for (const auto& p : pts) {
      cx += sx(p);
      cy += sy(p);
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < pts.size(); ++i) order.emplace_back(-std::atan2(sy(pts[i]) - cy, sx(pts[i]) - cx), i);
    std::sort(order.begin(), order.end());
    out << "<polygon class=\"" << (highlighted[c] ? "cell complete" : "cell") << "\" points=\"";
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& p = pts[order[k].second];
      out << (k ? " " : "") << fmt(sx(p)) << "," << fmt(sy(p));
    }
    out << "\" fill=\"" << (highlighted[c] ? "#f4c542" : "#e8eef6") << "\" stroke=\"#334\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t v = 0; v < d.pool().size(); ++v) {
    const auto& p = d.pool()[v];
    out << "<circle class=\"vertex\" cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p))
        << "\" r=\"4\" fill=\"#223\"/>\n"
        << "<text x=\"" << fmt(sx(p) + 6) << "\" y=\"" << fmt(sy(p) - 6)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << phi.labels[v] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sperner
