#include "coxplane/document.h"
#include "coxplane/errors.h"

#include <doctest.h>

using namespace coxplane;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("expanded document with every root diagram survives a JSON round trip") {
  const CoxeterSystem sys = build_coxeter_system("H3");
  const CompatContext ctx(sys);
  DiagramDocument doc = expanded_document(ctx);
  for (int a = 0; a < ctx.oracle.size(); ++a)
    doc.diagrams.push_back(root_doc_diagram(doc, ctx.diagram(a), root_name(sys, ctx.oracle.root(a)), a));
  CHECK(doc.polygon == sys.coxeter_number + 2);
  REQUIRE(doc.axes.has_value());
  CHECK(doc.axes->axis_minus == sys.coxeter_number + 1);

  const nlohmann::json j = to_json(doc);
  const DiagramDocument back = document_from_json(j);
  CHECK(back == doc);
  CHECK(dump_json(to_json(back)) == dump_json(j));
  CHECK(dump_json(nlohmann::json::parse(dump_json(j))) == dump_json(j));
}

TEST_CASE("projected document with partition diagrams survives a JSON round trip") {
  const CoxeterSystem sys = build_coxeter_system("A3");
  const PlaneSetup ps = setup_plane(sys);
  DiagramDocument doc = projected_document(sys, ps);
  CHECK(!doc.axes.has_value());
  CHECK(doc.vertex_count() == 4);
  const NCInterval iv = enumerate_interval(sys, ps.bip);
  int k = 0;
  for (const Parabolic& p : iv.nc_parabolics)
    doc.diagrams.push_back(
        partition_doc_diagram(doc, ps.config, partition_diagram(p, ps.config, ps.orbit), "W" + std::to_string(k++)));
  CHECK(doc.diagrams.size() == 14);
  CHECK(document_from_json(to_json(doc)) == doc);
}

TEST_CASE("dumps are deterministic") {
  const CoxeterSystem sys = build_coxeter_system("D4");
  const CompatContext a(sys), b(sys);
  CHECK(dump_json(to_json(expanded_document(a))) == dump_json(to_json(expanded_document(b))));
  CHECK(dump_json(to_json(verify_compat(a, Criterion::CL3), true)) ==
        dump_json(to_json(verify_compat(b, Criterion::CL3), true)));
}

TEST_CASE("cluster figure in H3") {
  const CoxeterSystem sys = build_coxeter_system("H3");
  const CompatContext ctx(sys);
  DiagramDocument doc = expanded_document(ctx);
  const auto clusters = enumerate_clusters(ctx.oracle);
  REQUIRE(!clusters.empty());
  doc.diagrams.push_back(cluster_doc_diagram(doc, ctx, clusters.front(), "first"));
  CHECK(doc.diagrams.front().annotations.size() == 3);
  const std::string svg = render_svg(doc, 0);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "class=\"vertex\"") == 12);
  CHECK(count_of(svg, "<g class=\"origin\"") == 2);
  CHECK(count_of(svg, "class=\"segment\"") > 0);
}

TEST_CASE("documents without diagrams are fine") {
  const CoxeterSystem sys = build_coxeter_system("B3");
  const DiagramDocument doc = projected_document(sys, setup_plane(sys));
  CHECK(doc.diagrams.empty());
  CHECK(document_from_json(to_json(doc)) == doc);
}

TEST_CASE("malformed documents") {
  const CoxeterSystem sys = build_coxeter_system("B3");
  nlohmann::json j = to_json(projected_document(sys, setup_plane(sys)));
  nlohmann::json bad = j;
  bad["schema_version"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(document_from_json(bad), IOError);
  bad = j;
  bad.erase("points");
  CHECK_THROWS_AS(document_from_json(bad), IOError);
  CHECK_THROWS_AS(document_from_json(nlohmann::json::array()), IOError);
}

TEST_CASE("significant digit rounding") {
  CHECK(round_significant(0.1234567890123456) == 0.123456789012);
  CHECK(round_significant(0.0) == 0.0);
  CHECK(round_significant(-2.5) == -2.5);
}
