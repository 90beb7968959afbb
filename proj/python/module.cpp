#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l1kit/display_set.hpp"
#include "l1kit/errors.hpp"
#include "l1kit/export.hpp"
#include "l1kit/level1.hpp"
#include "l1kit/network.hpp"
#include "l1kit/oracle.hpp"
#include "l1kit/rspr.hpp"
#include "l1kit/tree.hpp"

namespace py = pybind11;
using namespace l1kit;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Tree> parse_trees(const std::vector<std::string>& newicks) {
  std::vector<Tree> out;
  out.reserve(newicks.size());
  for (const auto& s : newicks) out.push_back(Tree::parse_newick(s));
  return out;
}

TieBreak tie_break(const std::string& name) {
  if (name == "largest") return TieBreak::LargestMoving;
  if (name == "smallest") return TieBreak::SmallestMoving;
  throw InvalidInput("tie_break must be 'largest' or 'smallest'");
}

py::tuple pair_tuple(const OrderedPair& p) {
  return py::make_tuple(p.moving.members(), p.enclosing.members());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Level-1 phylogenetic network toolkit";

  // Translators run newest first, so the base class is registered first.
  auto& base = py::register_exception<Error>(m, "L1kitError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<Tree>(m, "Tree")
      .def(py::init(&Tree::parse_newick), py::arg("newick"))
      .def("newick", &Tree::newick)
      .def_property_readonly("key", &Tree::key)
      .def_property_readonly("leaf_count", &Tree::leaf_count)
      .def("taxa", [](const Tree& t) { return t.taxa().members(); })
      .def("clusters",
           [](const Tree& t) {
             std::vector<std::vector<Taxon>> out;
             for (const auto& c : t.clusters()) out.push_back(c.members());
             return out;
           })
      .def("restrict_to",
           [](const Tree& t, const std::vector<Taxon>& keep) { return t.restrict_to(Cluster(keep)); })
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__lt__", [](const Tree& a, const Tree& b) { return a < b; })
      .def("__hash__", [](const Tree& t) { return py::hash(py::str(t.key())); })
      .def("__str__", &Tree::newick)
      .def("__repr__", [](const Tree& t) { return "Tree('" + t.newick() + "')"; });

  py::class_<Network>(m, "Network")
      .def(py::init(&Network::parse_enewick), py::arg("enewick"))
      .def_static("from_tree", &Network::from_tree)
      .def("enewick", &Network::enewick)
      .def("dot", &Network::dot)
      .def("taxa", [](const Network& n) { return n.taxa().members(); })
      .def_property_readonly("reticulation_count",
                             [](const Network& n) { return n.reticulations().size(); })
      .def("classify", [](const Network& n) { return to_python(classification_json(n, n.classify())); })
      .def("is_level1", &Network::is_level1)
      .def("essential", &Network::essential)
      .def("canonical_form", &Network::canonical_form)
      .def("reticulation_pairs",
           [](const Network& n) {
             py::list out;
             for (const auto& p : reticulation_pairs(n)) out.append(pair_tuple(p));
             return out;
           })
      .def("__eq__", [](const Network& a, const Network& b) { return network_isomorphic(a, b); })
      .def("__hash__", [](const Network& n) { return py::hash(py::str(n.canonical_form())); })
      .def("__str__", &Network::enewick)
      .def("__repr__", [](const Network& n) { return "Network('" + n.enewick() + "')"; });

  m.def("tree_isomorphic", &tree_isomorphic);
  m.def("network_isomorphic", &network_isomorphic);

  m.def(
      "display_set",
      [](const Network& n, std::optional<int> cap) {
        return display_set(n, cap.value_or(default_cap())).trees;
      },
      py::arg("network"), py::arg("cap") = py::none(),
      "Trees displayed by the network, sorted by canonical Newick.");
  m.def(
      "display_set_report",
      [](const Network& n, std::optional<int> cap) {
        return to_python(display_set_json(display_set(n, cap.value_or(default_cap()))));
      },
      py::arg("network"), py::arg("cap") = py::none());
  m.def(
      "is_displayed",
      [](const Network& n, const Tree& t) { return is_displayed(n, t); }, py::arg("network"),
      py::arg("tree"));

  m.def("rspr_distance_one", &rspr_distance_one);
  m.def("is_rnni_one", &is_rnni_one);
  m.def("moving_subtrees", [](const Tree& a, const Tree& b) {
    py::list out;
    for (const auto& p : moving_subtrees(a, b)) out.append(pair_tuple(p));
    return out;
  });
  m.def("rspr_graph", [](const std::vector<std::string>& trees) {
    const Analysis a = analyze_graph(build_rspr_graph(parse_trees(trees)));
    return to_python(rspr_graph_json(a.graph, a.map));
  });

  m.def(
      "check",
      [](const std::vector<std::string>& trees, const std::string& tie) {
        return to_python(level1_json(analyze(parse_trees(trees), tie_break(tie)), std::nullopt, {}));
      },
      py::arg("trees"), py::arg("tie_break") = "largest");
  m.def(
      "reconstruct",
      [](const std::vector<std::string>& trees, const std::string& tie) {
        return construct_level1(parse_trees(trees), tie_break(tie)).network;
      },
      py::arg("trees"), py::arg("tie_break") = "largest",
      "A level-1 network whose display set is exactly the trees, or None.");
  m.def(
      "enumerate",
      [](const std::vector<std::string>& trees) {
        return enumerate_level1(parse_trees(trees)).networks;
      },
      py::arg("trees"));

  m.def(
      "random_network",
      [](int leaves, int reticulations, const std::string& cls, std::uint64_t seed,
         bool forbid_trivial) {
        oracle::GeneratorConfig cfg;
        cfg.leaves = leaves;
        cfg.reticulations = reticulations;
        cfg.target = oracle::parse_network_class(cls);
        cfg.seed = seed;
        cfg.forbid_trivial = forbid_trivial;
        return oracle::random_network(cfg);
      },
      py::arg("leaves"), py::arg("reticulations"), py::arg("network_class") = "level1",
      py::arg("seed") = 0, py::arg("forbid_trivial") = false);
}
