#include "coxplane/document.h"

#include "coxplane/errors.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace coxplane {

using nlohmann::json;

namespace {

DocPoint make_point(int id, int ring, int pos, int label, Vec2 p) {
  return DocPoint{id, ring, pos, label, round_significant(p.x), round_significant(p.y)};
}

void add_origin_points(DiagramDocument& doc, const std::vector<int>& labels) {
  for (int label : labels) doc.points.push_back(make_point(static_cast<int>(doc.points.size()), -1, 0, label, {0, 0}));
}

int endpoint_id(const DiagramDocument& doc, const Endpoint& e, int label) {
  return e.at_origin() ? doc.point_id(-1, 0, label) : doc.point_id(e.ring, e.pos);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f5fbf", "#2e9e44", "#c0392b", "#8e44ad", "#d4880f", "#148f8f", "#7f6000", "#b03a78"};

}  // namespace

double round_significant(double x, int digits) {
  if (x == 0 || !std::isfinite(x)) return x == 0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // no negative zero
}

int DiagramDocument::point_id(int ring, int pos, int label) const {
  for (const DocPoint& p : points)
    if (p.ring == ring && (ring < 0 ? p.label == label : p.pos == pos)) return p.id;
  throw InternalError("document has no point at ring " + std::to_string(ring) + ", position " + std::to_string(pos));
}

int DiagramDocument::vertex_count() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const DocPoint& p) { return p.ring >= 0; }));
}

int DiagramDocument::origin_count() const { return static_cast<int>(points.size()) - vertex_count(); }

DiagramDocument projected_document(const CoxeterSystem& sys, const PlaneSetup& setup) {
  const ProjectedConfiguration& cfg = setup.config;
  DiagramDocument doc;
  doc.type_label = sys.type.label();
  doc.h = cfg.h;
  doc.polygon = cfg.h;
  doc.angular_modulus = 2 * cfg.h;
  for (const Ring& r : cfg.rings) doc.ring_radii.push_back(round_significant(r.radius));
  for (std::size_t r = 0; r < cfg.rings.size(); ++r)
    for (int idx : cfg.ring_members[r]) {
      const PlanarPoint p = cfg.point_of[static_cast<std::size_t>(idx)];
      doc.points.push_back(make_point(static_cast<int>(doc.points.size()), p.ring, p.pos, -1, cfg.snapped(idx)));
    }
  add_origin_points(doc, cfg.origin_labels);
  return doc;
}

DiagramDocument expanded_document(const CompatContext& ctx) {
  const ExpandedConfiguration& ex = ctx.ex();
  DiagramDocument doc;
  doc.type_label = ctx.sys->type.label();
  doc.h = ex.h;
  doc.polygon = ex.h + 2;
  doc.angular_modulus = ex.modulus();
  doc.angle_offset = ex.axis_minus;
  for (const Ring& r : ex.rings) doc.ring_radii.push_back(round_significant(r.radius));
  for (std::size_t r = 0; r < ex.rings.size(); ++r)
    for (int pos = ex.rings[r].parity; pos < ex.modulus(); pos += 2) {
      const Endpoint e{static_cast<int>(r), pos};
      doc.points.push_back(make_point(static_cast<int>(doc.points.size()), e.ring, pos, -1, ex.coords(e)));
    }
  add_origin_points(doc, ex.origin_labels);
  doc.axes = DocAxes{ex.axis_plus, ex.axis_minus, ctx.gray.perp_plus, ctx.gray.perp_minus};
  return doc;
}

DocDiagram root_doc_diagram(const DiagramDocument& doc, const RootDiagram& d, const std::string& name, int group) {
  DocDiagram out;
  out.name = name;
  out.kind = "root";
  for (const auto& s : d.segments)
    out.segments.push_back(DocSegment{endpoint_id(doc, s.a, s.label), endpoint_id(doc, s.b, s.label), group});
  return out;
}

DocDiagram cluster_doc_diagram(const DiagramDocument& doc, const CompatContext& ctx, const std::vector<int>& cluster,
                               const std::string& name) {
  DocDiagram out;
  out.name = name;
  out.kind = "cluster";
  for (std::size_t g = 0; g < cluster.size(); ++g) {
    const DocDiagram part = root_doc_diagram(doc, ctx.diagram(cluster[g]), "", static_cast<int>(g));
    out.segments.insert(out.segments.end(), part.segments.begin(), part.segments.end());
    out.annotations.push_back(root_name(*ctx.sys, ctx.oracle.root(cluster[g])));
  }
  return out;
}

DocDiagram partition_doc_diagram(const DiagramDocument& doc, const ProjectedConfiguration& cfg,
                                 const PartitionDiagram& d, const std::string& name) {
  auto id_of = [&](int idx) {
    const PlanarPoint p = cfg.point_of[static_cast<std::size_t>(idx)];
    return p.at_origin() ? doc.point_id(-1, 0, idx) : doc.point_id(p.ring, p.pos);
  };
  DocDiagram out;
  out.name = name;
  out.kind = "partition";
  for (const auto& block : d.blocks) {
    if (block.size() < 2) continue;
    std::vector<int> ids;
    for (int idx : block) ids.push_back(id_of(idx));
    out.blocks.push_back(std::move(ids));
  }
  for (auto [i, j] : d.segments) out.segments.push_back(DocSegment{id_of(i), id_of(j), 0});
  return out;
}

json to_json(const DiagramDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["type"] = doc.type_label;
  j["h"] = doc.h;
  j["polygon"] = doc.polygon;
  j["angular_modulus"] = doc.angular_modulus;
  j["angle_offset"] = doc.angle_offset;
  j["ring_radii"] = doc.ring_radii;
  j["points"] = json::array();
  for (const DocPoint& p : doc.points) {
    json q{{"id", p.id}, {"ring", p.ring}, {"pos", p.pos}, {"x", p.x}, {"y", p.y}};
    if (p.label >= 0) q["label"] = p.label;
    j["points"].push_back(std::move(q));
  }
  if (doc.axes) {
    j["axes"] = {{"plus", doc.axes->axis_plus}, {"minus", doc.axes->axis_minus}};
    j["gray_zone"] = {{"perp_plus", doc.axes->gray_plus}, {"perp_minus", doc.axes->gray_minus}};
  }
  j["diagrams"] = json::array();
  for (const DocDiagram& d : doc.diagrams) {
    json e{{"name", d.name}, {"kind", d.kind}};
    e["segments"] = json::array();
    for (const DocSegment& s : d.segments) e["segments"].push_back(json{{"a", s.a}, {"b", s.b}, {"group", s.group}});
    e["blocks"] = d.blocks;
    e["annotations"] = d.annotations;
    e["verdict"] = d.verdict;
    j["diagrams"].push_back(std::move(e));
  }
  return j;
}

DiagramDocument document_from_json(const json& j) {
  try {
    DiagramDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    if (doc.schema_version != kSchemaVersion)
      throw IOError("unsupported schema version " + std::to_string(doc.schema_version));
    doc.type_label = j.at("type").get<std::string>();
    doc.h = j.at("h").get<int>();
    doc.polygon = j.at("polygon").get<int>();
    doc.angular_modulus = j.at("angular_modulus").get<int>();
    doc.angle_offset = j.at("angle_offset").get<int>();
    doc.ring_radii = j.at("ring_radii").get<std::vector<double>>();
    for (const json& q : j.at("points")) {
      DocPoint p;
      p.id = q.at("id").get<int>();
      p.ring = q.at("ring").get<int>();
      p.pos = q.at("pos").get<int>();
      p.label = q.value("label", -1);
      p.x = q.at("x").get<double>();
      p.y = q.at("y").get<double>();
      doc.points.push_back(p);
    }
    if (j.contains("axes")) {
      const json& g = j.at("gray_zone");
      doc.axes = DocAxes{j["axes"].at("plus").get<int>(), j["axes"].at("minus").get<int>(),
                         g.at("perp_plus").get<int>(), g.at("perp_minus").get<int>()};
    }
    for (const json& e : j.at("diagrams")) {
      DocDiagram d;
      d.name = e.at("name").get<std::string>();
      d.kind = e.at("kind").get<std::string>();
      for (const json& s : e.at("segments"))
        d.segments.push_back(DocSegment{s.at("a").get<int>(), s.at("b").get<int>(), s.at("group").get<int>()});
      d.blocks = e.at("blocks").get<std::vector<std::vector<int>>>();
      d.annotations = e.at("annotations").get<std::vector<std::string>>();
      d.verdict = e.at("verdict").get<std::string>();
      doc.diagrams.push_back(std::move(d));
    }
    const int n = static_cast<int>(doc.points.size());
    for (std::size_t k = 0; k < doc.points.size(); ++k)
      if (doc.points[k].id != static_cast<int>(k)) throw IOError("point ids are not consecutive");
    for (const DocDiagram& d : doc.diagrams) {
      for (const DocSegment& s : d.segments)
        if (s.a < 0 || s.a >= n || s.b < 0 || s.b >= n) throw IOError("segment refers to an unknown point");
      for (const auto& b : d.blocks)
        for (int id : b)
          if (id < 0 || id >= n) throw IOError("block refers to an unknown point");
    }
    return doc;
  } catch (const json::exception& e) {
    throw IOError(std::string("malformed diagram document: ") + e.what());
  }
}

json to_json(const ExactnessReport& rep, std::optional<bool> claim) {
  json j{{"type", rep.type_label}, {"criterion", rep.criterion}, {"total", rep.total}, {"exact", rep.exact()}};
  j["claim"] = claim ? json(*claim ? "exact" : "not exact") : json(nullptr);
  j["matches_claim"] = !claim || *claim == rep.exact();
  j["notes"] = rep.notes;
  j["mismatches"] = json::array();
  for (const Mismatch& m : rep.mismatches) {
    json e{{"first", m.first}, {"ids", m.ids}, {"geometric", m.geometric}, {"algebraic", m.algebraic}};
    if (!m.second.empty()) e["second"] = m.second;
    if (m.rank >= 0) e["rank"] = m.rank;
    j["mismatches"].push_back(std::move(e));
  }
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IOError("failed writing " + path);
}

std::string render_svg(const DiagramDocument& doc, std::size_t index, const SvgStyle& style) {
  if (index >= doc.diagrams.size()) throw UsageError("no diagram " + std::to_string(index) + " in document");
  const DocDiagram& d = doc.diagrams[index];
  const double half = style.size / 2;
  const double outer = doc.ring_radii.empty() ? 1.0 : doc.ring_radii.front();
  const double scale = 0.74 * half / outer;
  const double cy = half + 0.08 * half;  // room for the caption
  auto X = [&](double x) { return fmt(half + scale * x); };
  auto Y = [&](double y) { return fmt(cy - scale * y); };  // y up
  auto dir = [&](double half_steps, double r) {
    const double a = (half_steps / 2.0 - doc.angle_offset) * 2 * std::numbers::pi / doc.angular_modulus;
    return Vec2{r * std::cos(a), r * std::sin(a)};
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(style.size) << "\" height=\"" << fmt(style.size)
    << "\" viewBox=\"0 0 " << fmt(style.size) << " " << fmt(style.size) << "\">\n";
  s << "<title>" << escape(doc.type_label + " " + d.name) << "</title>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (style.show_gray_zone && doc.axes) {
    const double r = 1.05 * outer;
    for (int flip : {0, 1}) {
      const double shift = flip * doc.angular_modulus;  // half a turn in half steps
      const Vec2 p = dir(doc.axes->gray_plus + shift, r), q = dir(doc.axes->gray_minus + shift, r);
      s << "<polygon class=\"gray-zone\" points=\"" << X(0) << "," << Y(0) << " " << X(p.x) << "," << Y(p.y) << " "
        << X(q.x) << "," << Y(q.y) << "\" fill=\"#e4e4e4\"/>\n";
    }
  }
  if (style.show_axes && doc.axes) {
    for (int a : {doc.axes->axis_plus, doc.axes->axis_minus}) {
      const Vec2 p = dir(2 * a, 1.1 * outer), q = dir(2 * a + doc.angular_modulus, 1.1 * outer);
      s << "<line class=\"axis\" x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x) << "\" y2=\"" << Y(q.y)
        << "\" stroke=\"#999\" stroke-dasharray=\"4,3\"/>\n";
    }
  }
  if (style.show_ring_edges) {
    for (std::size_t r = 0; r < doc.ring_radii.size(); ++r) {
      std::vector<const DocPoint*> ring;
      for (const DocPoint& p : doc.points)
        if (p.ring == static_cast<int>(r)) ring.push_back(&p);
      std::sort(ring.begin(), ring.end(), [](const DocPoint* a, const DocPoint* b) { return a->pos < b->pos; });
      s << "<polygon class=\"ring\" points=\"";
      for (std::size_t k = 0; k < ring.size(); ++k) s << (k ? " " : "") << X(ring[k]->x) << "," << Y(ring[k]->y);
      s << "\" fill=\"none\" stroke=\"#c8c8c8\"/>\n";
    }
  }
  for (const auto& block : d.blocks) {
    std::vector<Vec2> pts;
    for (int id : block) pts.push_back({doc.points[static_cast<std::size_t>(id)].x, doc.points[static_cast<std::size_t>(id)].y});
    const auto hull = convex_hull(pts, 1e-9);
    if (hull.size() < 3) continue;
    s << "<polygon class=\"block\" points=\"";
    for (std::size_t k = 0; k < hull.size(); ++k) s << (k ? " " : "") << X(hull[k].x) << "," << Y(hull[k].y);
    s << "\" fill=\"#1f5fbf\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
  }
  for (const DocSegment& seg : d.segments) {
    const DocPoint& a = doc.points[static_cast<std::size_t>(seg.a)];
    const DocPoint& b = doc.points[static_cast<std::size_t>(seg.b)];
    s << "<line class=\"segment\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y) << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
      << "\" stroke=\"" << kPalette[static_cast<std::size_t>(seg.group) % std::size(kPalette)]
      << "\" stroke-width=\"2\"/>\n";
  }
  for (const DocPoint& p : doc.points)
    if (p.ring >= 0)
      s << "<circle class=\"vertex\" cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"2.5\" fill=\"black\"/>\n";
  // Origin points all sit at the center; their labels are stacked beside it.
  int row = 0;
  for (const DocPoint& p : doc.points) {
    if (p.ring >= 0) continue;
    s << "<g class=\"origin\"><circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"3\" fill=\"none\" stroke=\"black\"/>"
      << "<text x=\"" << fmt(half + 6) << "\" y=\"" << fmt(cy - 6 - 11.0 * row) << "\" font-size=\"9\">o"
      << p.label << "</text></g>\n";
    ++row;
  }
  double y = 14;
  for (const std::string& line : [&] {
         std::vector<std::string> lines{doc.type_label + "  " + d.name};
         if (!d.verdict.empty()) lines.push_back(d.verdict);
         for (const auto& a : d.annotations) lines.push_back(a);
         return lines;
       }()) {
    s << "<text class=\"caption\" x=\"6\" y=\"" << fmt(y) << "\" font-size=\"11\">" << escape(line) << "</text>\n";
    y += 13;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace coxplane
