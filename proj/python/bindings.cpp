#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordrep/check_suite.hpp"
#include "wordrep/constructions.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"

namespace py = pybind11;
using namespace wordrep;

namespace {

Graph generate_from_dims(const std::string& family, const std::vector<int>& dims) {
  const auto f = family_from_string(family);
  if (!f) throw InvalidFamilyParams("unknown family '" + family + "'");
  if (static_cast<int>(dims.size()) != family_arity(*f)) {
    throw InvalidFamilyParams(family + " takes " + std::to_string(family_arity(*f)) +
                              " size argument(s)");
  }
  FamilySpec spec{*f, 1, dims.back()};
  if (dims.size() == 2) {
    spec.m = dims[0];
    spec.n = dims[1];
  }
  return generate(spec);
}

std::string report_json(const Report& rep) { return rep.to_json().dump(2); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "uniform word-representants of grid-like graphs";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "WordrepError", PyExc_ValueError);

  py::class_<OccurrenceRef>(m, "OccurrenceRef")
      .def(py::init<Letter, int>(), py::arg("letter"), py::arg("index") = 1)
      .def_readwrite("letter", &OccurrenceRef::letter)
      .def_readwrite("index", &OccurrenceRef::index)
      .def("__repr__", [](const OccurrenceRef& r) {
        return "OccurrenceRef(" + std::to_string(r.letter) + "^" + std::to_string(r.index) + ")";
      });

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def(py::init<std::vector<Letter>, int>(), py::arg("letters"), py::arg("alphabet_size"))
      .def_property_readonly("alphabet_size", &Word::alphabet_size)
      .def_property_readonly("letters", &Word::letters)
      .def("__len__", &Word::length)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__repr__", [](const Word& w) {
        std::string out = "Word([";
        for (int p = 0; p < w.length(); ++p) {
          if (p) out += ", ";
          out += std::to_string(w.letters()[static_cast<std::size_t>(p)]);
        }
        return out + "], alphabet_size=" + std::to_string(w.alphabet_size()) + ")";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int, const std::vector<std::pair<int, int>>&, std::vector<std::string>>(),
           py::arg("n"), py::arg("edges"), py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("names", &Graph::names)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("name", &Graph::name)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("_generate", &generate_from_dims, py::arg("family"), py::arg("dims"));
  m.def("is_complete", &is_complete);
  m.def("induced_subgraph", &induced_subgraph, py::arg("graph"), py::arg("vertices"));
  m.def("parse_graph", &parse_graph);
  m.def("write_graph", &write_graph);

  m.def("occurrences", &occurrences, py::arg("word"), py::arg("letter"));
  m.def("occurrence_position", &occurrence_position, py::arg("word"), py::arg("ref"));
  m.def("is_k_uniform", &is_k_uniform, py::arg("word"), py::arg("k"));
  m.def("alternates", &alternates, py::arg("word"), py::arg("x"), py::arg("y"));
  m.def("graph_of_word", &graph_of_word, py::arg("word"),
        py::arg("names") = std::vector<std::string>{});
  m.def("represents", &represents, py::arg("word"), py::arg("graph"));
  m.def("occurrence_before", &occurrence_before, py::arg("word"), py::arg("a"), py::arg("b"));
  m.def("find_factor", &find_factor, py::arg("word"), py::arg("pattern"));
  m.def("rotate", &rotate, py::arg("word"), py::arg("t"));
  m.def("check_fact1", &check_fact1, py::arg("word"), py::arg("graph"));
  m.def("restrict_to_letters", &restrict_to_letters, py::arg("word"), py::arg("keep"));
  m.def("parse_word", &parse_word, py::arg("text"), py::arg("context"));
  m.def("word_to_text", &word_to_text, py::arg("word"), py::arg("names"));

  m.def("path_word", &path_word, py::arg("n"));
  m.def("grid_word", &grid_word, py::arg("m"), py::arg("n"), py::arg("verify") = true);
  m.def("od_word", &od_word, py::arg("n"));
  m.def("ev_word", &ev_word, py::arg("n"));
  m.def("cyl3_word", &cyl3_word, py::arg("m"), py::arg("verify") = true);
  m.def("cyl_word", &cyl_word, py::arg("m"), py::arg("n"), py::arg("verify") = true);
  m.def("torus_word", &torus_word, py::arg("m"), py::arg("n"));

  py::class_<PruneRules>(m, "PruneRules")
      .def(py::init<>())
      .def_readwrite("p1", &PruneRules::p1)
      .def_readwrite("p2", &PruneRules::p2)
      .def_readwrite("p3", &PruneRules::p3)
      .def_readwrite("p4", &PruneRules::p4)
      .def_readwrite("p5", &PruneRules::p5)
      .def_readwrite("p6", &PruneRules::p6);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("k", &SearchConfig::k)
      .def_readwrite("node_budget", &SearchConfig::node_budget)
      .def_readwrite("time_budget_seconds", &SearchConfig::time_budget_seconds)
      .def_readwrite("break_symmetry", &SearchConfig::break_symmetry)
      .def_readwrite("parallel", &SearchConfig::parallel)
      .def_readwrite("rules", &SearchConfig::rules);

  py::enum_<SearchStatus>(m, "SearchStatus")
      .value("FOUND", SearchStatus::found)
      .value("EXHAUSTED_NO_SOLUTION", SearchStatus::exhausted_no_solution)
      .value("BUDGET_EXCEEDED", SearchStatus::budget_exceeded);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("status", &SearchOutcome::status)
      .def_readonly("word", &SearchOutcome::word)
      .def_readonly("nodes_expanded", &SearchOutcome::nodes_expanded)
      .def_readonly("wall_time_seconds", &SearchOutcome::wall_time_seconds)
      .def("__repr__", [](const SearchOutcome& o) {
        return "SearchOutcome(" + to_string(o.status) +
               ", nodes=" + std::to_string(o.nodes_expanded) + ")";
      });

  py::class_<RepnumResult>(m, "RepnumResult")
      .def_readonly("value", &RepnumResult::value)
      .def_readonly("lower_bound", &RepnumResult::lower_bound)
      .def_readonly("upper_bound", &RepnumResult::upper_bound)
      .def_readonly("per_k", &RepnumResult::per_k);

  py::class_<Report>(m, "Report")
      .def_property_readonly("overall", [](const Report& r) { return to_string(r.overall()); })
      .def_property_readonly("command", [](const Report& r) { return r.command; })
      .def("to_json", &report_json)
      .def("to_text", &Report::to_text);

  m.def("search_k_word", &search_k_word, py::arg("graph"), py::arg("config"));
  m.def("representation_number", &representation_number, py::arg("graph"), py::arg("k_max"),
        py::arg("config") = SearchConfig{});
  m.def(
      "verify_claim_lemma2",
      [](std::optional<std::uint64_t> node_budget, double time_guard, double spot_check) {
        Lemma2Options opt;
        opt.node_budget = node_budget;
        opt.time_guard_seconds = time_guard;
        opt.spot_check_seconds = spot_check;
        return verify_claim_lemma2(opt);
      },
      py::arg("node_budget") = std::nullopt, py::arg("time_guard_seconds") = 900.0,
      py::arg("spot_check_seconds") = 300.0);
  m.def("explore_conjecture", &explore_conjecture, py::arg("m"), py::arg("n"), py::arg("k"),
        py::arg("config") = SearchConfig{});
  m.def(
      "run_check_suite",
      [](int max_size, double time_guard) {
        CheckSuiteOptions opt;
        opt.max_size = max_size;
        opt.lemma2.time_guard_seconds = time_guard;
        return run_check_suite(opt);
      },
      py::arg("max_size") = 12, py::arg("time_guard_seconds") = 900.0);
}
