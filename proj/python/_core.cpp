// Python bindings. Paths cross the boundary as their text form ("a.b'" or a
// vertex id) and families as lists of such strings, so Python never holds a
// Path detached from its graph.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "kgck/boundary.hpp"
#include "kgck/cli.hpp"
#include "kgck/error.hpp"
#include "kgck/exhaustive.hpp"
#include "kgck/io.hpp"
#include "kgck/repn.hpp"

namespace py = pybind11;

namespace {

using namespace kgck;

class PyGraph {
 public:
  explicit PyGraph(KGraph g) : g_(std::move(g)) {}

  static PyGraph from_file(const std::string& path) { return PyGraph(validate(read_graph_file(path))); }
  static PyGraph from_json(const std::string& text) { return PyGraph(validate(parse_graph(text))); }
  static PyGraph omega_graph(std::size_t k, const std::vector<std::uint32_t>& m) {
    return PyGraph(omega(k, DegreeVector(m)));
  }

  const KGraph& graph() const { return g_; }
  std::size_t rank() const { return g_.rank(); }
  bool cyclic() const { return g_.is_cyclic(); }
  std::vector<std::string> vertices() const {
    std::vector<std::string> out;
    for (VertexId v : g_.vertices()) out.push_back(g_.name(v));
    return out;
  }
  std::string emit() const { return emit_graph(g_.spec()); }

  Path path(const std::string& s) const { return g_.parse_path(s); }
  std::string text(const Path& p) const { return g_.to_string(p); }
  std::vector<std::string> texts(const std::vector<Path>& ps) const {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(text(p));
    return out;
  }
  PathFamily family(const std::vector<std::string>& members) const {
    if (members.empty()) throw Error(ErrorCode::PreconditionFailed, "empty family needs a range");
    std::vector<Path> ps;
    for (const auto& m : members) ps.push_back(path(m));
    return PathFamily(ps.front().range(), ps);
  }
  VertexId vertex(const std::string& v) const {
    auto id = g_.find_vertex(v);
    if (!id) throw Error(ErrorCode::UnknownVertex, v);
    return *id;
  }
  DegreeVector degree(const std::vector<std::uint32_t>& d) const {
    if (d.size() != g_.rank()) throw Error(ErrorCode::DomainError, "degree has the wrong rank");
    return DegreeVector(d);
  }

  std::vector<std::uint32_t> path_degree(const std::string& p) const { return path(p).degree().coords(); }
  std::string compose(const std::string& p, const std::string& q) const {
    return text(g_.compose(path(p), path(q)));
  }
  std::vector<std::string> paths(const std::string& v, const std::vector<std::uint32_t>& d) const {
    return texts(g_.paths(vertex(v), degree(d)));
  }
  std::vector<std::string> paths_up_to(const std::string& v, const std::vector<std::uint32_t>& d) const {
    return texts(g_.paths_up_to(vertex(v), degree(d)));
  }
  std::vector<std::string> mce_of(const std::string& mu, const std::string& nu) const {
    return texts(mce(g_, path(mu), path(nu)));
  }
  std::vector<std::string> ext_of(const std::string& mu, const std::vector<std::string>& e) const {
    const Path m = path(mu);
    std::vector<Path> ps;
    for (const auto& x : e) ps.push_back(path(x));
    return texts(ext(g_, m, PathFamily(m.range(), ps)));
  }
  std::vector<std::string> pi(const std::vector<std::string>& seed) const {
    std::vector<Path> ps;
    for (const auto& x : seed) ps.push_back(path(x));
    return texts(pi_closure(g_, ps));
  }
  std::string exhaustive(const std::vector<std::string>& e) const {
    return std::string(to_string(is_exhaustive(g_, family(e)).status));
  }

 private:
  KGraph g_;
};

/// A satiated collection over the exact universe of an acyclic graph.
class PyCollection {
 public:
  PyCollection(const PyGraph& g, const std::vector<std::vector<std::string>>& generators, bool full)
      : graph_(g), s_(make(g, generators, full)) {}

  std::vector<std::vector<std::string>> families() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : s_.families()) out.push_back(graph_.texts(f.members()));
    return out;
  }
  std::string member(const std::vector<std::string>& f) const {
    return std::string(to_string(kgck::member(graph_.family(f), s_)));
  }
  std::vector<std::string> boundary(const std::string& v) const {
    return graph_.texts(boundary_paths(graph_.vertex(v), s_));
  }
  std::string construct(const std::string& v, const std::optional<std::vector<std::string>>& avoid) const {
    std::optional<PathFamily> f;
    if (avoid) f = graph_.family(*avoid);
    return graph_.text(construct_boundary(graph_.vertex(v), s_, f));
  }
  bool condition_c_holds() const { return condition_c(s_).holds; }
  std::size_t representation_dimension() const { return boundary_rep(s_).dim; }
  bool faithful_on_core() const {
    const auto rep = boundary_rep(s_);
    return faithful_on_core_check(rep, s_, {}).faithful();
  }

 private:
  static FamilyCollection make(const PyGraph& g, const std::vector<std::vector<std::string>>& gens, bool full) {
    auto u = Universe::build(g.graph());
    if (full) return FamilyCollection::full(u);
    std::vector<PathFamily> fs;
    for (const auto& m : gens) fs.push_back(g.family(m));
    return satiate(FamilyCollection::from_families(u, fs));
  }

  PyGraph graph_;
  FamilyCollection s_;
};

py::tuple run(const std::vector<std::string>& args) {
  std::vector<std::string> all{"kgck"};
  all.insert(all.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : all) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relative Cuntz-Krieger toolkit for finite k-graphs";

  py::register_exception<Error>(m, "KgckError", PyExc_ValueError);

  py::class_<PyGraph>(m, "Graph")
      .def_static("from_file", &PyGraph::from_file, py::arg("path"))
      .def_static("from_json", &PyGraph::from_json, py::arg("text"))
      .def_static("omega", &PyGraph::omega_graph, py::arg("k"), py::arg("m"))
      .def_property_readonly("rank", &PyGraph::rank)
      .def_property_readonly("cyclic", &PyGraph::cyclic)
      .def("vertices", &PyGraph::vertices)
      .def("emit", &PyGraph::emit, "canonical graph document")
      .def("degree", &PyGraph::path_degree, py::arg("path"))
      .def("compose", &PyGraph::compose, py::arg("p"), py::arg("q"))
      .def("paths", &PyGraph::paths, py::arg("vertex"), py::arg("degree"))
      .def("paths_up_to", &PyGraph::paths_up_to, py::arg("vertex"), py::arg("bound"))
      .def("mce", &PyGraph::mce_of, py::arg("mu"), py::arg("nu"))
      .def("ext", &PyGraph::ext_of, py::arg("mu"), py::arg("family"))
      .def("pi_closure", &PyGraph::pi, py::arg("seed"))
      .def("is_exhaustive", &PyGraph::exhaustive, py::arg("family"),
           "'Exhaustive', 'NotExhaustive' or 'Unknown'");

  py::class_<PyCollection>(m, "Collection")
      .def(py::init<const PyGraph&, const std::vector<std::vector<std::string>>&, bool>(), py::arg("graph"),
           py::arg("generators") = std::vector<std::vector<std::string>>{}, py::arg("full") = false,
           "the satiation of `generators`, or every exhaustive family with full=True")
      .def("families", &PyCollection::families)
      .def("member", &PyCollection::member, py::arg("family"))
      .def("boundary_paths", &PyCollection::boundary, py::arg("vertex"))
      .def("construct_boundary", &PyCollection::construct, py::arg("vertex"), py::arg("avoid") = py::none())
      .def("condition_c", &PyCollection::condition_c_holds)
      .def("representation_dimension", &PyCollection::representation_dimension)
      .def("faithful_on_core", &PyCollection::faithful_on_core);

  m.def("run", &run, py::arg("args"), "run the command line; returns (exit code, stdout, stderr)");
}
