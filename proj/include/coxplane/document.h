#pragma once

#include "coxplane/criteria.h"
#include "coxplane/diagrams.h"
#include "coxplane/noncrossing.h"
#include "coxplane/report.h"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxplane {

inline constexpr int kSchemaVersion = 1;

/// A drawable point: a ring vertex, or one labeled point at the origin.
struct DocPoint {
  int id = 0;
  int ring = -1;   // -1 at the origin
  int pos = 0;     // angular position, in units of one angular step
  int label = -1;  // orbit index for origin points
  double x = 0;
  double y = 0;

  bool operator==(const DocPoint&) const = default;
};

struct DocSegment {
  int a = 0;  // point ids
  int b = 0;
  int group = 0;  // which root of a cluster, for coloring

  bool operator==(const DocSegment&) const = default;
};

struct DocDiagram {
  std::string name;
  std::string kind;  // "root", "cluster" or "partition"
  std::vector<DocSegment> segments;
  std::vector<std::vector<int>> blocks;  // partition diagrams: point ids, blocks of size >= 2
  std::vector<std::string> annotations;
  std::string verdict;

  bool operator==(const DocDiagram&) const = default;
};

/// Axes and gray zone of an expanded configuration, as integer positions.
struct DocAxes {
  int axis_plus = 0;   // line positions, mod polygon
  int axis_minus = 0;
  int gray_plus = 0;   // gray zone boundary directions, in half steps
  int gray_minus = 0;

  bool operator==(const DocAxes&) const = default;
};

/// A configuration with any number of diagrams drawn on it. Position p sits
/// at angle (p - angle_offset) * 2 pi / angular_modulus.
struct DiagramDocument {
  int schema_version = kSchemaVersion;
  std::string type_label;
  int h = 0;
  int polygon = 0;  // vertices per ring: h, or h+2 once expanded
  int angular_modulus = 0;
  int angle_offset = 0;
  std::vector<double> ring_radii;
  std::vector<DocPoint> points;
  std::optional<DocAxes> axes;
  std::vector<DocDiagram> diagrams;

  bool operator==(const DiagramDocument&) const = default;

  /// Id of a ring vertex or of the origin point carrying `label`; throws
  /// InternalError if absent.
  int point_id(int ring, int pos, int label = -1) const;
  int vertex_count() const;
  int origin_count() const;
};

/// Rounds to the number of significant digits written to JSON.
double round_significant(double x, int digits = 12);

DiagramDocument projected_document(const CoxeterSystem& sys, const PlaneSetup& setup);
DiagramDocument expanded_document(const CompatContext& ctx);

DocDiagram root_doc_diagram(const DiagramDocument& doc, const RootDiagram& d, const std::string& name, int group = 0);
/// Segments of several roots, one group each, drawn as one cluster figure.
DocDiagram cluster_doc_diagram(const DiagramDocument& doc, const CompatContext& ctx, const std::vector<int>& cluster,
                               const std::string& name);
DocDiagram partition_doc_diagram(const DiagramDocument& doc, const ProjectedConfiguration& cfg,
                                 const PartitionDiagram& d, const std::string& name);

nlohmann::json to_json(const DiagramDocument& doc);
/// Throws IOError on a malformed document or unknown schema version.
DiagramDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExactnessReport& rep, std::optional<bool> claim);

/// Two-space indented, trailing newline.
std::string dump_json(const nlohmann::json& j);
/// Throws IOError.
void write_text_file(const std::string& path, const std::string& content);

struct SvgStyle {
  double size = 400;  // square canvas, in px
  bool show_gray_zone = true;
  bool show_axes = false;
  bool show_ring_edges = true;
};

/// One diagram of the document on the document's configuration. Depends on
/// nothing but the document.
std::string render_svg(const DiagramDocument& doc, std::size_t diagram, const SvgStyle& style = {});

}  // namespace coxplane
