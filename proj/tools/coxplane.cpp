#include "coxplane/clusters.h"
#include "coxplane/criteria.h"
#include "coxplane/document.h"
#include "coxplane/errors.h"
#include "coxplane/noncrossing.h"
#include "coxplane/parabolic.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace coxplane;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct Options {
  std::string type;
  bool swapped = false;
  std::string json_path;
  std::string figures;
  std::size_t budget = 0;  // 0: command default
  std::string criteria;
  std::string sharing = "endpoint";
  bool expanded = false;
  bool representatives = false;
};

double tolerance_from_env() {
  const char* env = std::getenv("COXPLANE_TOL");
  if (!env || !*env) return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0 && tol < 1e-3))
    throw UsageError(std::string("COXPLANE_TOL must be a number in (0, 1e-3), got '") + env + "'");
  return tol;
}

CoxeterSystem load(const Options& opt) { return build_coxeter_system(opt.type, tolerance_from_env()); }

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IOError("cannot create directory " + dir + ": " + ec.message());
}

void write_figures(const DiagramDocument& doc, const std::string& dir, const std::string& stem) {
  ensure_dir(dir);
  for (std::size_t k = 0; k < doc.diagrams.size(); ++k) {
    std::ostringstream name;
    name << stem << "-" << k + 1 << ".svg";
    write_text_file((fs::path(dir) / name.str()).string(), render_svg(doc, k));
  }
  write_text_file((fs::path(dir) / (stem + ".json")).string(), dump_json(to_json(doc)));
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string ring_summary(const ProjectedConfiguration& cfg) {
  std::ostringstream s;
  s << cfg.rings.size() << " ring" << (cfg.rings.size() == 1 ? "" : "s") << " x " << cfg.h << " + "
    << cfg.origin_labels.size() << " at origin";
  return s.str();
}

int cmd_info(const Options& opt) {
  const CoxeterSystem sys = load(opt);
  nlohmann::json j{{"type", sys.type.label()},
                   {"rank", sys.rank},
                   {"coxeter_number", sys.coxeter_number},
                   {"exponents", sys.exponents},
                   {"reflections", sys.num_positive},
                   {"almost_positive_roots", sys.num_positive + sys.rank},
                   {"group_order", group_order(sys)},
                   {"catalan", catalan_number(sys)},
                   {"smallest_orbit", fundamental_orbit_size(sys, smallest_orbit_index(sys))}};
  std::cout << sys.type.label() << "\n"
            << "  rank                   " << sys.rank << "\n"
            << "  Coxeter number h       " << sys.coxeter_number << "\n"
            << "  exponents              " << join(sys.exponents) << "\n"
            << "  |W|                    " << group_order(sys) << "\n"
            << "  reflections |T|        " << sys.num_positive << "\n"
            << "  almost positive roots  " << sys.num_positive + sys.rank << "\n"
            << "  Catalan number         " << catalan_number(sys) << "\n"
            << "  smallest orbit         " << j["smallest_orbit"].get<long long>() << "\n";
  if (sys.rank >= 2) {
    const PlaneSetup setup = setup_plane(sys, opt.swapped);
    std::cout << "  projected orbit        " << ring_summary(setup.config) << "\n";
    j["rings"] = setup.config.rings.size();
    j["origin_points"] = setup.config.origin_labels.size();
  }
  if (!opt.json_path.empty()) write_text_file(opt.json_path, dump_json(j));
  return kOk;
}

int cmd_nc(const Options& opt) {
  const CoxeterSystem sys = load(opt);
  const PlaneSetup setup = setup_plane(sys, opt.swapped);
  const NCInterval interval = enumerate_interval(sys, setup.bip);
  const bool full = sys.rank <= 4 || opt.budget > 0;
  std::cout << sys.type.label() << ": |[1,c]| = " << interval.size() << ", noncrossing parabolics "
            << interval.nc_parabolics.size() << ", Cat(W) = " << catalan_number(sys) << "\n";

  std::vector<Parabolic> parabolics;
  if (full) {
    parabolics = enumerate_parabolics(sys, opt.budget > 0 ? opt.budget : 1000000);
    std::cout << "parabolic subgroups: " << parabolics.size() << "\n";
    std::cout << "conjugacy classes (size, noncrossing, crossing):\n";
    for (const ClassCount& c : class_counts(sys, parabolics, interval))
      std::cout << "  " << describe_parabolic(c.representative) << ": " << c.size << ", " << c.noncrossing << ", "
                << c.size - c.noncrossing << "\n";
    for (NCCriterion k : {NCCriterion::A, NCCriterion::D})
      std::cout << to_text(verify_nc(sys, setup, k, parabolics, interval), 5);
  } else {
    parabolics = interval.nc_parabolics;
    std::cout << "rank above 4 without --budget: only noncrossing parabolics enumerated\n";
  }

  const auto orbits = dihedral_orbits(sys, setup.bip, parabolics);
  std::cout << "<c+, c->-conjugation orbits: " << orbits.size() << "\n";
  if (!opt.figures.empty()) {
    DiagramDocument doc = projected_document(sys, setup);
    const double tol = 1e3 * sys.eps;
    for (const auto& orbit : orbits) {
      const Parabolic& par = parabolics[static_cast<std::size_t>(orbit.front())];
      const PartitionDiagram pd = partition_diagram(par, setup.config, setup.orbit);
      DocDiagram d = partition_doc_diagram(doc, setup.config, pd, describe_parabolic(par));
      const bool nc = classify_parabolic(interval, par) == NCClass::Noncrossing;
      d.verdict = std::string(nc ? "noncrossing" : "crossing") + " (orbit of " + std::to_string(orbit.size()) + ")";
      std::string refl = "reflections:";
      par.reflset.for_each([&](std::size_t t) { refl += " " + root_name(sys, static_cast<int>(t)); });
      d.annotations.push_back(refl);
      d.annotations.push_back(std::string("criterion A ") + (nc_criterion_A(pd, setup.config, tol) ? "yes" : "no") +
                              ", criterion D " + (nc_criterion_D(pd, setup.config, tol) ? "yes" : "no"));
      doc.diagrams.push_back(std::move(d));
    }
    write_figures(doc, opt.figures, "nc");
    std::cout << "wrote " << doc.diagrams.size() << " figures to " << opt.figures << "\n";
  }
  return kOk;
}

std::vector<int> tau_cluster(const CompatibilityOracle& oracle, int eps, const std::vector<int>& cl) {
  std::vector<int> out;
  for (int a : cl) out.push_back(oracle.tau(eps, a));
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_clusters(const Options& opt) {
  const CoxeterSystem sys = load(opt);
  const CompatContext ctx(sys, opt.swapped);
  const auto clusters = enumerate_clusters(ctx.oracle);
  const long long cat = catalan_number(sys);
  const bool sizes_ok = std::all_of(clusters.begin(), clusters.end(),
                                    [&](const auto& c) { return static_cast<int>(c.size()) == sys.rank; });

  // Orbits of clusters under tau+ and tau-.
  std::map<std::vector<int>, int> orbit_of;
  std::vector<std::vector<int>> reps;
  std::vector<int> orbit_sizes;
  for (const auto& c : clusters) {
    if (orbit_of.count(c)) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(c);
    orbit_sizes.push_back(0);
    std::vector<std::vector<int>> stack{c};
    orbit_of[c] = id;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      ++orbit_sizes.back();
      for (int eps : {1, -1}) {
        auto y = tau_cluster(ctx.oracle, eps, x);
        if (orbit_of.emplace(y, id).second) stack.push_back(std::move(y));
      }
    }
  }

  std::cout << sys.type.label() << ": " << clusters.size() << " clusters, Cat(W) = " << cat << ", all of size " << sys.rank
            << ": " << (sizes_ok ? "yes" : "no") << "\n";
  std::cout << "tau-orbits of clusters: " << reps.size() << " (sizes " << join(orbit_sizes) << ")\n";

  if (!opt.figures.empty()) {
    DiagramDocument doc = expanded_document(ctx);
    const auto& drawn = opt.representatives ? reps : clusters;
    for (std::size_t k = 0; k < drawn.size(); ++k) {
      DocDiagram d = cluster_doc_diagram(doc, ctx, drawn[k], "cluster " + std::to_string(k + 1));
      if (opt.representatives) d.verdict = "tau-orbit of " + std::to_string(orbit_sizes[k]);
      doc.diagrams.push_back(std::move(d));
    }
    write_figures(doc, opt.figures, "clusters");
    std::cout << "wrote " << doc.diagrams.size() << " figures to " << opt.figures << "\n";
  }
  const bool ok = static_cast<long long>(clusters.size()) == cat && sizes_ok;
  return ok ? kOk : kMismatch;
}

int cmd_verify(const Options& opt) {
  const CoxeterSystem sys = load(opt);
  std::vector<Criterion> wanted;
  std::stringstream list(opt.criteria);
  for (std::string item; std::getline(list, item, ',');)
    if (!item.empty()) wanted.push_back(parse_criterion(item));
  if (wanted.empty()) throw UsageError("--criteria needs at least one of cl1..cl5, ncA, ncD");
  if (opt.sharing != "endpoint" && opt.sharing != "any") throw UsageError("--sharing must be 'endpoint' or 'any'");
  const SharingRule rule = opt.sharing == "any" ? SharingRule::AnyIntersection : SharingRule::Endpoint;

  std::optional<CompatContext> ctx;
  std::optional<PlaneSetup> setup;
  nlohmann::json out{{"schema_version", kSchemaVersion}, {"type", sys.type.label()}, {"swapped", opt.swapped}};
  out["reports"] = nlohmann::json::array();
  bool all_match = true;
  for (Criterion c : wanted) {
    ExactnessReport rep;
    if (is_compatibility_criterion(c)) {
      if (!ctx) ctx.emplace(sys, opt.swapped, rule);
      rep = verify_compat(*ctx, c);
      if (sys.type.family == Family::E && sys.type.rank == 7 && c == Criterion::CL5) {
        const int a = 2, b = ctx->oracle.ap_of(2);  // -alpha_3 and alpha_3
        rep.notes.push_back(std::string("witness (-a3, a3) listed: ") + (has_pair(rep, a, b) ? "yes" : "no"));
      }
    } else {
      if (!setup) setup.emplace(setup_plane(sys, opt.swapped));
      rep = verify_nc_criterion(sys, *setup, c, opt.budget > 0 ? opt.budget : 1000000);
    }
    const auto claim = claimed_exactness(sys.type, c);
    const bool match = !claim || *claim == rep.exact();
    all_match = all_match && match;
    std::cout << to_text(rep) << "  claim: " << (claim ? (*claim ? "exact" : "not exact") : "none") << " -> "
              << (match ? "matches" : "DOES NOT MATCH") << "\n";
    out["reports"].push_back(to_json(rep, claim));
  }
  if (!opt.json_path.empty()) write_text_file(opt.json_path, dump_json(out));
  return all_match ? kOk : kMismatch;
}

int cmd_project(const Options& opt) {
  const CoxeterSystem sys = load(opt);
  if (!opt.expanded) {
    const PlaneSetup setup = setup_plane(sys, opt.swapped);
    const ProjectedConfiguration& cfg = setup.config;
    std::cout << sys.type.label() << ": h = " << cfg.h << ", " << ring_summary(cfg) << "\n";
    for (std::size_t r = 0; r < cfg.rings.size(); ++r)
      std::cout << "  ring " << r << ": radius " << cfg.rings[r].radius << ", vertices at "
                << (cfg.rings[r].parity ? "odd" : "even") << " multiples of pi/h\n";
    if (!cfg.origin_labels.empty()) std::cout << "  origin labels: " << join(cfg.origin_labels) << "\n";
    const auto check = hyperplane_orbit_check(sys, setup.bip);
    std::cout << "  hyperplane orbits under <c+, c->: " << check.orbits.size() << (check.ok() ? ", dichotomy holds" : "")
              << "\n";
    for (const auto& f : check.failures) std::cout << "  failure: " << f << "\n";
    if (!opt.json_path.empty()) write_text_file(opt.json_path, dump_json(to_json(projected_document(sys, setup))));
    return check.ok() ? kOk : kMismatch;
  }
  const CompatContext ctx(sys, opt.swapped);
  const auto failures = diagram_invariant_failures(ctx.diagrams, ctx.oracle);
  std::cout << sys.type.label() << ": " << ctx.ex().rings.size() << " ring(s) of " << ctx.ex().h + 2
            << " vertices, L'+ at " << ctx.ex().axis_plus << ", L'- at " << ctx.ex().axis_minus << " (units pi/"
            << ctx.ex().h + 2 << "), " << ctx.oracle.size() << " root diagrams\n";
  for (const auto& f : failures) std::cout << "  failure: " << f << "\n";
  DiagramDocument doc = expanded_document(ctx);
  for (int ap = 0; ap < ctx.oracle.size(); ++ap)
    doc.diagrams.push_back(root_doc_diagram(doc, ctx.diagram(ap), root_name(sys, ctx.oracle.root(ap))));
  if (!opt.json_path.empty()) write_text_file(opt.json_path, dump_json(to_json(doc)));
  if (!opt.figures.empty()) {
    DiagramDocument neg = doc;
    neg.diagrams.resize(static_cast<std::size_t>(sys.rank));
    write_figures(neg, opt.figures, "negative-simples");
  }
  return failures.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter-plane diagrams for noncrossing partitions and clusters"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--swap", opt.swapped, "exchange the two parts of the bipartition");

  auto type_arg = [&](CLI::App* sub) { sub->add_option("type", opt.type, "Coxeter type, e.g. A3, D5, E6, I2(7)")->required(); };

  CLI::App* info = app.add_subcommand("info", "invariants of a type");
  type_arg(info);
  info->add_option("--json", opt.json_path, "also write the invariants as JSON");

  CLI::App* nc = app.add_subcommand("nc", "noncrossing parabolic subgroups and their diagrams");
  type_arg(nc);
  nc->add_option("--figures", opt.figures, "write one SVG per <c+, c->-orbit representative");
  nc->add_option("--budget", opt.budget, "maximum number of parabolic subgroups to enumerate")->check(CLI::PositiveNumber);

  CLI::App* cl = app.add_subcommand("clusters", "clusters and their diagrams");
  type_arg(cl);
  cl->add_option("--figures", opt.figures, "write one SVG per cluster");
  cl->add_flag("--representatives", opt.representatives, "draw one cluster per tau-orbit only");

  CLI::App* verify = app.add_subcommand("verify", "check geometric criteria against the algebra");
  type_arg(verify);
  verify->add_option("--criteria", opt.criteria, "comma-separated list of cl1..cl5, ncA, ncD")->required();
  verify->add_option("--json", opt.json_path, "write the reports as JSON");
  verify->add_option("--budget", opt.budget, "parabolic enumeration budget for ncA/ncD")->check(CLI::PositiveNumber);
  verify->add_option("--sharing", opt.sharing, "active-segment propagation: endpoint (default) or any");

  CLI::App* project = app.add_subcommand("project", "the projected orbit, or the expanded configuration");
  type_arg(project);
  project->add_option("--json", opt.json_path, "write the configuration document as JSON");
  project->add_flag("--expanded", opt.expanded, "use the expanded (h+2)-gons and include every root diagram");
  project->add_option("--figures", opt.figures, "with --expanded: draw the negative simple roots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(opt);
    if (nc->parsed()) return cmd_nc(opt);
    if (cl->parsed()) return cmd_clusters(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (project->parsed()) return cmd_project(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
