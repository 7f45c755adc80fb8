#include "kgck/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgck/boundary.hpp"
#include "kgck/error.hpp"
#include "kgck/exhaustive.hpp"
#include "kgck/io.hpp"
#include "kgck/repn.hpp"
#include "kgck/sampling.hpp"
#include "kgck/satiation.hpp"

namespace kgck {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string graph;
  std::string depth;
  std::size_t max_size = 3;
  std::size_t budget = 0;  // 0: the command's default
  std::string backend = "exact";
  bool json = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string generators;
  bool full = false;
  std::string vertex;
  std::vector<std::string> family;
  std::vector<std::string> paths;
  std::vector<std::string> avoid;
  std::string mu;
  std::string nu;
  std::string path;
  std::string inject_fault;
  bool minimal = false;
  bool emit = false;
  bool all = false;
};

struct Result {
  std::string name;
  std::string status;  // pass | fail | info | unknown | skipped | error
  std::optional<double> deviation;
  std::optional<std::string> witness;
};

struct Report {
  std::vector<Result> results;
  json extra;  // command-specific payload, e.g. the matrix bundle
  std::optional<std::string> raw;  // printed verbatim instead of a report
};

void info(Report& r, std::string name, std::optional<std::string> witness = std::nullopt) {
  r.results.push_back({std::move(name), "info", std::nullopt, std::move(witness)});
}

void check(Report& r, std::string name, bool ok, std::optional<double> dev = std::nullopt,
           std::optional<std::string> witness = std::nullopt) {
  r.results.push_back({std::move(name), ok ? "pass" : "fail", dev, std::move(witness)});
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

KGraph load_graph(const Options& o) { return validate(read_graph_file(o.graph)); }

std::optional<DegreeVector> window(const KGraph& g, const Options& o) {
  if (o.depth.empty()) return std::nullopt;
  return parse_degree(o.depth, g.rank());
}

DegreeVector window_or_max(const KGraph& g, const Options& o) {
  if (auto w = window(g, o)) return *w;
  if (g.is_cyclic()) {
    throw Error(ErrorCode::PreconditionFailed, "the graph is cyclic; give --depth");
  }
  return g.max_degree();
}

VertexId vertex(const KGraph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, "'" + name + "'");
  return *v;
}

std::vector<Path> parse_paths(const KGraph& g, const std::vector<std::string>& words) {
  std::vector<Path> out;
  for (const auto& w : words) out.push_back(g.parse_path(w));
  return out;
}

PathFamily parse_family(const KGraph& g, const std::vector<std::string>& words,
                        std::optional<VertexId> range = std::nullopt) {
  auto members = parse_paths(g, words);
  if (!range) {
    if (members.empty()) throw Error(ErrorCode::PreconditionFailed, "empty family needs a vertex");
    range = members.front().range();
  }
  return PathFamily(*range, std::move(members));
}

std::string set_text(const KGraph& g, const std::vector<Path>& paths) {
  std::string out = "{";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ", ";
    out += g.to_string(paths[i]);
  }
  return out + "}";
}

/// The collection S a command works against: the full FE window with
/// --full, otherwise the satiation of the generators file (or of nothing).
FamilyCollection load_collection(const KGraph& g, const Options& o) {
  UniverseOptions uo;
  uo.window = window(g, o);
  auto universe = Universe::build(g, uo);
  if (o.full) return FamilyCollection::full(universe);
  std::vector<PathFamily> gens;
  if (!o.generators.empty()) gens = read_generators_file(universe->graph(), o.generators);
  SatiateOptions so;
  if (o.budget) so.max_iterations = o.budget;
  return satiate(FamilyCollection::from_families(universe, gens), so);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

Report cmd_validate(const Options& o) {
  const SkeletonSpec spec = read_graph_file(o.graph);
  const KGraph g = validate(spec);
  Report r;
  if (o.emit) {
    r.raw = emit_graph(spec);
    return r;
  }
  std::ostringstream summary;
  summary << "rank " << g.rank() << ", " << g.vertex_count() << " vertices, " << g.edge_count()
          << " edges, " << g.spec().squares.size() << " squares, "
          << (g.is_cyclic() ? "cyclic" : "acyclic");
  check(r, "validate", true, std::nullopt, summary.str());
  return r;
}

Report cmd_paths(const Options& o) {
  const KGraph g = load_graph(o);
  const DegreeVector bound = window_or_max(g, o);
  std::vector<VertexId> vs = o.vertex.empty() ? g.vertices() : std::vector{vertex(g, o.vertex)};
  Report r;
  for (VertexId v : vs) {
    for (const auto& p : g.paths_up_to(v, bound)) {
      info(r, g.to_string(p), "degree " + p.degree().to_string() + ", source " + g.name(p.source()));
    }
  }
  return r;
}

Report cmd_mce(const Options& o) {
  const KGraph g = load_graph(o);
  const Path mu = g.parse_path(o.mu);
  const Path nu = g.parse_path(o.nu);
  Report r;
  const auto common = mce(g, mu, nu);
  info(r, "mce", set_text(g, common));
  for (const auto& [alpha, beta] : lambda_min(g, mu, nu)) {
    info(r, "lambda_min", "(" + g.to_string(alpha) + ", " + g.to_string(beta) + ")");
  }
  return r;
}

Report cmd_ext(const Options& o) {
  const KGraph g = load_graph(o);
  const Path mu = g.parse_path(o.mu);
  const PathFamily e = parse_family(g, o.family, mu.range());
  Report r;
  info(r, "ext", set_text(g, ext(g, mu, e)));
  return r;
}

Report cmd_pi_closure(const Options& o) {
  const KGraph g = load_graph(o);
  ClosureOptions co;
  if (o.budget) co.max_size = o.budget;
  const auto closed = pi_closure(g, parse_paths(g, o.paths), co);
  Report r;
  info(r, "pi-closure", set_text(g, closed));
  info(r, "size", std::to_string(closed.size()));
  return r;
}

Report cmd_exhaustive_check(const Options& o) {
  const KGraph g = load_graph(o);
  std::optional<VertexId> range;
  if (!o.vertex.empty()) range = vertex(g, o.vertex);
  const PathFamily e = parse_family(g, o.family, range);
  const auto verdict = is_exhaustive(g, e, window(g, o));
  Report r;
  Result res{"exhaustive " + to_string(g, e), "", std::nullopt, std::nullopt};
  switch (verdict.status) {
    case ExhaustiveStatus::Exhaustive: res.status = "pass"; break;
    case ExhaustiveStatus::NotExhaustive: res.status = "fail"; break;
    case ExhaustiveStatus::Unknown: res.status = "unknown"; break;
  }
  if (verdict.witness) res.witness = g.to_string(*verdict.witness);
  r.results.push_back(std::move(res));
  info(r, "searched_depth", verdict.searched_depth.to_string());
  return r;
}

Report cmd_exhaustive_enumerate(const Options& o) {
  const KGraph g = load_graph(o);
  const VertexId v = vertex(g, o.vertex);
  EnumerationOptions eo;
  eo.jobs = o.jobs;
  if (o.budget) eo.max_subsets = o.budget;
  const DegreeVector depth = window_or_max(g, o);
  const auto families = o.minimal ? minimal_exhaustive(g, v, depth, o.max_size, eo)
                                  : fe_enumerate(g, v, depth, o.max_size, eo);
  Report r;
  for (const auto& f : families) info(r, "family", to_string(g, f));
  info(r, "count", std::to_string(families.size()));
  return r;
}

Report cmd_satiate(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  Report r;
  for (const auto& f : s.families()) info(r, "family", to_string(ug, f));
  const auto sat = is_satiated(s);
  check(r, "satiated", sat.satiated, std::nullopt,
        sat.violation ? std::optional(sat.violation->axiom + " " + sat.violation->detail)
                      : std::nullopt);
  info(r, "exact", s.universe().exact() ? "true" : "false");
  return r;
}

Report cmd_boundary_list(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  Report r;
  const auto paths = o.vertex.empty() ? boundary_paths(s) : boundary_paths(vertex(ug, o.vertex), s);
  for (const auto& x : paths) info(r, "boundary", ug.to_string(x));
  return r;
}

Report cmd_boundary_construct(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  const VertexId v = vertex(ug, o.vertex);
  std::optional<PathFamily> avoid;
  if (!o.avoid.empty()) avoid = parse_family(ug, o.avoid, v);
  const Path x = construct_boundary(v, s, avoid);
  const bool ok = is_boundary(x, s) && !(avoid && in_family_extensions(ug, x, *avoid));
  Report r;
  check(r, "construct", ok, std::nullopt, ug.to_string(x));
  return r;
}

Report cmd_boundary_aperiodic(const Options& o) {
  const KGraph g = load_graph(o);
  const Path x = g.parse_path(o.path);
  std::optional<bool> answer;
  if (!g.is_cyclic() && o.depth.empty()) {
    answer = is_aperiodic_path(g, x);
  } else {
    answer = is_aperiodic_path_bounded(g, x, window_or_max(g, o));
  }
  Report r;
  r.results.push_back({"aperiodic " + g.to_string(x),
                       answer ? (*answer ? "true" : "false") : "unknown", std::nullopt,
                       std::nullopt});
  return r;
}

Report cmd_condition_c(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  const auto report = condition_c(s);
  Report r;
  for (const auto& e : report.entries) {
    std::string name = "C at " + ug.name(e.vertex);
    if (e.avoided) name += " avoiding " + to_string(ug, *e.avoided);
    check(r, name, e.witness.has_value(), std::nullopt,
          e.witness ? std::optional(ug.to_string(*e.witness)) : std::nullopt);
  }
  return r;
}

template <typename T>
json scalar_json(const T& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    std::ostringstream s;
    s << v;
    return s.str();
  } else {
    return json::array({v.real(), v.imag()});
  }
}

template <typename T>
json bundle(const KGraph& g, const CKFamily<T>& family) {
  json b;
  b["dimension"] = family.dim;
  b["basis"] = json::array();
  for (const auto& x : family.basis) b["basis"].push_back(g.to_string(x));
  b["operators"] = json::array();
  for (const auto& [lambda, m] : family.t) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (const auto& [j, v] : m.row(i)) entries.push_back({i, j, scalar_json(v)});
    }
    b["operators"].push_back({{"path", g.to_string(lambda)}, {"entries", entries}});
  }
  return b;
}

Report cmd_represent(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  const auto rep = boundary_rep(s);
  Report r;
  check(r, "represent", true, std::nullopt, "dimension " + std::to_string(rep.dim));
  r.extra = o.backend == "float" ? bundle(ug, to_complex(rep)) : bundle(ug, rep);
  return r;
}

template <typename T>
void relation_results(Report& r, const FamilyReport& report) {
  for (const auto& rel : report.relations) {
    check(r, rel.name, rel.passed, rel.deviation,
          rel.witness.empty() ? std::nullopt : std::optional(rel.witness));
  }
  info(r, "degenerate", report.degenerate ? "true" : "false");
}

template <typename T>
void theorem_checks(Report& r, const CKFamily<T>& family, const FamilyCollection& s,
                    const Options& o) {
  const Universe& u = s.universe();
  const KGraph& g = u.graph();
  const double tol = ScalarTraits<T>::tolerance;
  const std::vector<Path> all = PathCatalog(g).all();
  Sampler sampler(o.seed);

  const auto sat = is_satiated(s);
  check(r, "satiated", sat.satiated, std::nullopt,
        sat.violation ? std::optional(sat.violation->axiom + " " + sat.violation->detail)
                      : std::nullopt);

  {
    std::optional<std::string> mismatch;
    for (VertexId v : g.vertices()) {
      for (FamilyMask m : u.all_fe(v)) {
        const PathFamily f = u.family(v, m);
        const bool vanishes = gap_product(family, v, f.members(), g).is_zero();
        if (vanishes != (member(f, s) == Membership::Yes) && !mismatch) mismatch = to_string(g, f);
      }
    }
    check(r, "gap-vanishes-iff-member", !mismatch, std::nullopt, mismatch);
  }

  {
    const auto f = faithful_on_core_check(family, s, {});
    std::string why = f.route_a_failure;
    if (!f.route_b_failure.empty()) why += (why.empty() ? "" : "; ") + f.route_b_failure;
    check(r, "faithful-on-core", f.faithful() && f.agree(), std::nullopt,
          why.empty() ? std::nullopt : std::optional(why));
    check(r, "faithful-routes-agree", f.agree());
  }

  {
    std::vector<std::vector<Path>> windows{all};
    for (int k = 0; k < 3; ++k) windows.push_back(sampler.subset(all, 1 + sampler.index(3)));
    double worst = 0.0;
    std::optional<std::string> witness;
    for (const auto& e : windows) {
      const auto pi = pi_closure(g, e);
      const auto mu = matrix_unit_check(g, family, pi);
      worst = std::max({worst, mu.adjoint_deviation, mu.product_deviation, mu.expansion_deviation});
      if (!mu.passed(tol) && !witness) witness = mu.witness;
    }
    check(r, "matrix-units", worst <= tol, worst, witness);

    double formal_worst = 0.0;
    for (const auto& [lambda, mu] : grid_pairs(all)) {
      formal_worst = std::max(formal_worst,
                              deviation(evaluate(formal_theta<T>(g, all, lambda, mu), family),
                                        theta(g, family, all, lambda, mu)));
    }
    check(r, "formal-theta", formal_worst <= tol, formal_worst);
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const VertexId v = g.vertices()[sampler.index(g.vertex_count())];
      const std::vector<Path> at_v = PathCatalog(g).with_range(v);
      std::vector<Path> pool;
      for (const auto& p : at_v) {
        if (!p.is_vertex()) pool.push_back(p);
      }
      const PathFamily e(v, sampler.subset(pool, 1 + sampler.index(3)));
      worst = std::max(worst, shift_gaps_check(g, family, e, sampler.pick(at_v)));
    }
    check(r, "shift-gaps", worst <= tol, worst);
  }

  const CKFamily<Complex> cf = to_complex(family);
  {
    const double dev = gauge_unitary_check(cf, random_torus_points(g.rank(), 8, o.seed));
    check(r, "gauge-unitary", dev <= 1e-12, dev);
  }
  {
    const auto points = gauge_averaging_points(g);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const auto a = sampler.formal_element(all, 10);
      worst = std::max(worst, deviation(evaluate(gauge_expectation(a), cf), gauge_average(a, cf, points)));
    }
    check(r, "gauge-expectation", worst <= 1e-9, worst);
  }

  const auto cc = condition_c(s);
  std::size_t failing = 0;
  for (const auto& e : cc.entries) failing += e.witness ? 0 : 1;
  info(r, "condition-C", cc.holds ? "holds" : std::to_string(failing) + " failing clauses");

  if constexpr (std::is_same_v<T, Rational>) {
    try {
      ContractionChecker checker(family, s);
      double excess = 0.0;
      bool ok = true;
      for (int k = 0; k < 20; ++k) {
        const auto n = checker.check(sampler.formal_element(all, 10));
        excess = std::max(excess, n.lhs - n.rhs);
        ok = ok && n.holds();
      }
      check(r, "expectation-contraction", ok, std::max(excess, 0.0));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotMet) throw;
      r.results.push_back({"expectation-contraction", "skipped", std::nullopt, e.detail()});
    }
  }
}

Report cmd_verify(const Options& o) {
  const KGraph g = load_graph(o);
  const FamilyCollection s = load_collection(g, o);
  const KGraph& ug = s.universe().graph();
  CKFamily<Rational> rep = boundary_rep(s, false);
  if (!o.inject_fault.empty()) {
    const Path broken = ug.parse_path(o.inject_fault);
    auto it = rep.t.find(broken);
    if (it == rep.t.end()) throw Error(ErrorCode::IncompleteFamily, "no operator to break");
    it->second = SparseMatrix<Rational>(rep.dim, rep.dim);
  }
  const auto generators = s.families();
  Report r;
  info(r, "dimension", std::to_string(rep.dim));
  if (o.backend == "float") {
    const auto cf = to_complex(rep);
    relation_results<Complex>(r, verify_family(ug, cf, generators));
    if (o.all) theorem_checks(r, cf, s, o);
  } else {
    relation_results<Rational>(r, verify_family(ug, rep, generators));
    if (o.all) theorem_checks(r, rep, s, o);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

json config_json(const Options& o) {
  json c;
  c["graph"] = o.graph;
  c["depth"] = o.depth.empty() ? json(nullptr) : json(o.depth);
  c["max_size"] = o.max_size;
  c["budget"] = o.budget;
  c["backend"] = o.backend;
  c["jobs"] = o.jobs;
  c["generators"] = o.generators.empty() ? json(nullptr) : json(o.generators);
  c["full"] = o.full;
  return c;
}

void write_report(std::ostream& out, const Options& o, const Report& r) {
  if (r.raw) {
    out << *r.raw;
    return;
  }
  if (o.json) {
    json doc;
    doc["command"] = o.command;
    doc["config"] = config_json(o);
    doc["seed"] = o.seed;
    doc["results"] = json::array();
    for (const auto& res : r.results) {
      json item{{"name", res.name}, {"status", res.status}};
      if (res.deviation) item["deviation"] = *res.deviation;
      if (res.witness) item["witness"] = *res.witness;
      doc["results"].push_back(std::move(item));
    }
    if (!r.extra.is_null()) doc["bundle"] = r.extra;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "command: " << o.command << " (seed " << o.seed << ")\n";
  for (const auto& res : r.results) {
    out << std::left << std::setw(8) << res.status << res.name;
    if (res.deviation) out << "  deviation=" << *res.deviation;
    if (res.witness) out << "  " << *res.witness;
    out << "\n";
  }
  if (!r.extra.is_null()) out << r.extra.dump(2) << "\n";
}

int exit_code_for(ErrorCode code) {
  if (is_budget_error(code)) return kExitBudget;
  if (code == ErrorCode::InvariantViolation) return kExitCheckFailed;
  return kExitPrecondition;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<Report(const Options&)> action;

  CLI::App app{"Combinatorics and operator checks for higher-rank graphs", "kgck"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, std::string name, std::function<Report(const Options&)> fn) {
    sub->add_option("graph", o.graph, "graph file (JSON)")->required();
    sub->add_option("--depth", o.depth, "degree window, e.g. 2,1");
    sub->add_option("--max-size", o.max_size, "largest family size to enumerate");
    sub->add_option("--budget", o.budget, "closure size / subset count / iteration cap");
    sub->add_option("--backend", o.backend, "scalar backend")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_flag("--json", o.json, "write a JSON report");
    sub->add_option("--seed", o.seed, "seed for randomised checks");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->callback([&, name = std::move(name), fn = std::move(fn)] {
      o.command = name;
      action = fn;
    });
  };
  auto with_collection = [&](CLI::App* sub) {
    sub->add_option("--generators", o.generators, "generator families (JSON)");
    sub->add_flag("--full", o.full, "use every exhaustive family of the window");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file");
  common(validate_cmd, "validate", cmd_validate);
  validate_cmd->add_flag("--emit", o.emit, "print the canonical graph document");

  auto* paths_cmd = app.add_subcommand("paths", "list paths up to the window");
  common(paths_cmd, "paths", cmd_paths);
  paths_cmd->add_option("--vertex", o.vertex, "range vertex");

  auto* mce_cmd = app.add_subcommand("mce", "minimal common extensions");
  common(mce_cmd, "mce", cmd_mce);
  mce_cmd->add_option("mu", o.mu)->required();
  mce_cmd->add_option("nu", o.nu)->required();

  auto* ext_cmd = app.add_subcommand("ext", "Ext(mu; E)");
  common(ext_cmd, "ext", cmd_ext);
  ext_cmd->add_option("mu", o.mu)->required();
  ext_cmd->add_option("--family", o.family, "members of E")->expected(0, -1);

  auto* pi_cmd = app.add_subcommand("pi-closure", "the closure ΠE");
  common(pi_cmd, "pi-closure", cmd_pi_closure);
  pi_cmd->add_option("--paths", o.paths, "the seed set E")->expected(1, -1)->required();

  auto* exh = app.add_subcommand("exhaustive", "exhaustive families");
  exh->require_subcommand(1);
  auto* exh_check = exh->add_subcommand("check", "decide exhaustiveness");
  common(exh_check, "exhaustive check", cmd_exhaustive_check);
  exh_check->add_option("--family", o.family, "members of E")->expected(0, -1);
  exh_check->add_option("--vertex", o.vertex, "range (needed for the empty family)");
  auto* exh_enum = exh->add_subcommand("enumerate", "list exhaustive families at a vertex");
  common(exh_enum, "exhaustive enumerate", cmd_exhaustive_enumerate);
  exh_enum->add_option("--vertex", o.vertex)->required();
  exh_enum->add_flag("--minimal", o.minimal, "only the inclusion-minimal families");

  auto* sat = app.add_subcommand("satiate", "satiation of a generator collection");
  common(sat, "satiate", cmd_satiate);
  with_collection(sat);

  auto* bnd = app.add_subcommand("boundary", "boundary paths");
  bnd->require_subcommand(1);
  auto* bnd_list = bnd->add_subcommand("list", "enumerate boundary paths");
  common(bnd_list, "boundary list", cmd_boundary_list);
  with_collection(bnd_list);
  bnd_list->add_option("--vertex", o.vertex);
  auto* bnd_construct = bnd->add_subcommand("construct", "run the diagonal construction");
  common(bnd_construct, "boundary construct", cmd_boundary_construct);
  with_collection(bnd_construct);
  bnd_construct->add_option("--vertex", o.vertex)->required();
  bnd_construct->add_option("--avoid", o.avoid, "family to avoid")->expected(1, -1);
  auto* bnd_aperiodic = bnd->add_subcommand("aperiodic", "aperiodicity of a path");
  common(bnd_aperiodic, "boundary aperiodic", cmd_boundary_aperiodic);
  bnd_aperiodic->add_option("--path", o.path)->required();
  auto* bnd_c = bnd->add_subcommand("condition-c", "witnesses for condition (C)");
  common(bnd_c, "boundary condition-c", cmd_condition_c);
  with_collection(bnd_c);

  auto* rep = app.add_subcommand("represent", "boundary-path representation as sparse matrices");
  common(rep, "represent", cmd_represent);
  with_collection(rep);

  auto* ver = app.add_subcommand("verify", "relation and uniqueness checks");
  common(ver, "verify", cmd_verify);
  with_collection(ver);
  ver->add_flag("--all", o.all, "also run the matrix-unit, gauge and uniqueness checks");
  ver->add_option("--inject-fault", o.inject_fault, "zero the operator of this path first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    const Report report = action(o);
    write_report(out, o, report);
    const bool failed = std::any_of(report.results.begin(), report.results.end(),
                                    [](const Result& r) { return r.status == "fail"; });
    return failed ? kExitCheckFailed : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (o.json) {
      Report r;
      r.results.push_back({"error", "error", std::nullopt, std::string(e.what())});
      write_report(out, o, r);
    }
    return exit_code_for(e.code());
  }
}

}  // namespace kgck
