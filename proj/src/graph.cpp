#include "wordrep/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace wordrep {

namespace {

std::size_t cell(int n, int u, int v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}, {}) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> names)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))),
      matrix_(static_cast<std::size_t>(std::max(n, 0)) * static_cast<std::size_t>(std::max(n, 0)), false),
      names_(std::move(names)) {
  if (n_ < 0) throw InvalidInput("vertex count must be non-negative");
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) names_.push_back(default_vertex_name(v));
  } else if (static_cast<int>(names_.size()) != n_) {
    throw InvalidInput("name list size " + std::to_string(names_.size()) +
                       " != vertex count " + std::to_string(n_));
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (matrix_[cell(n_, u, v)]) {
      throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    matrix_[cell(n_, u, v)] = matrix_[cell(n_, v, u)] = true;
    edges_.emplace_back(u, v);
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(n_));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[cell(n_, u, v)];
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

const std::string& Graph::name(int v) const {
  check_vertex(v);
  return names_[static_cast<std::size_t>(v)];
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ && names_ == other.names_;
}

std::optional<Family> family_from_string(std::string_view text) {
  if (text == "path") return Family::path;
  if (text == "cycle") return Family::cycle;
  if (text == "ladder") return Family::ladder;
  if (text == "prism") return Family::prism;
  if (text == "grid") return Family::grid;
  if (text == "cyl" || text == "cyl_grid") return Family::cyl_grid;
  if (text == "torus" || text == "toroidal_grid") return Family::toroidal_grid;
  if (text == "complete") return Family::complete;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::ladder: return "ladder";
    case Family::prism: return "prism";
    case Family::grid: return "grid";
    case Family::cyl_grid: return "cyl";
    case Family::toroidal_grid: return "torus";
    case Family::complete: return "complete";
  }
  return "?";
}

int family_arity(Family f) {
  switch (f) {
    case Family::grid:
    case Family::cyl_grid:
    case Family::toroidal_grid:
      return 2;
    default:
      return 1;
  }
}

std::string default_vertex_name(int id) { return "v" + std::to_string(id + 1); }

std::string grid_vertex_name(int i, int j) {
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

namespace {

Graph generate_lattice(int m, int n, bool wrap_rows, bool wrap_cols) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j + 1 <= n; ++j) {
      edges.emplace_back(grid_vertex_id(i, j, n), grid_vertex_id(i, j + 1, n));
    }
    if (wrap_rows) edges.emplace_back(grid_vertex_id(i, 1, n), grid_vertex_id(i, n, n));
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i + 1 <= m; ++i) {
      edges.emplace_back(grid_vertex_id(i, j, n), grid_vertex_id(i + 1, j, n));
    }
    if (wrap_cols) edges.emplace_back(grid_vertex_id(1, j, n), grid_vertex_id(m, j, n));
  }
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) names.push_back(grid_vertex_name(i, j));
  }
  return Graph(m * n, edges, std::move(names));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidFamilyParams(message);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  const int m = spec.m;
  const int n = spec.n;
  switch (spec.family) {
    case Family::path:
      require(n >= 1, "path requires n >= 1");
      return generate_lattice(1, n, false, false);
    case Family::ladder:
      require(n >= 1, "ladder requires n >= 1");
      return generate_lattice(2, n, false, false);
    case Family::cycle:
      require(n >= 3, "cycle requires n >= 3");
      return generate_lattice(1, n, true, false);
    case Family::prism:
      require(n >= 3, "prism requires n >= 3");
      return generate_lattice(2, n, true, false);
    case Family::grid:
      require(m >= 1 && n >= 1, "grid requires m >= 1 and n >= 1");
      return generate_lattice(m, n, false, false);
    case Family::cyl_grid:
      require(m >= 1, "cyl requires m >= 1");
      require(n >= 3, "cyl requires n >= 3 (n = 2 would duplicate an edge)");
      return generate_lattice(m, n, true, false);
    case Family::toroidal_grid:
      require(m >= 3 && n >= 3, "torus requires m >= 3 and n >= 3");
      return generate_lattice(m, n, true, true);
    case Family::complete: {
      require(n >= 1, "complete requires n >= 1");
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return Graph(n, edges);
    }
  }
  throw InvalidFamilyParams("unknown family");
}

bool is_complete(const Graph& g) {
  const long long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    const int v = sorted[t];
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
    }
    if (relabel[static_cast<std::size_t>(v)] != -1) {
      throw InvalidVertex("duplicate vertex " + std::to_string(v));
    }
    relabel[static_cast<std::size_t>(v)] = static_cast<int>(t);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int nu = relabel[static_cast<std::size_t>(u)];
    const int nv = relabel[static_cast<std::size_t>(v)];
    if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
  }
  std::vector<std::string> names;
  names.reserve(sorted.size());
  for (int v : sorted) names.push_back(g.name(v));
  return Graph(static_cast<int>(sorted.size()), edges, std::move(names));
}

Graph parse_graph(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  int n = -1, declared_edges = -1, problem_line = -1;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    if (kind.empty()) continue;
    if (kind == "p") {
      if (n != -1) throw ParseError(lineno, "duplicate problem line");
      std::string fmt;
      if (!(fields >> fmt >> n >> declared_edges) || fmt != "edge" || n < 0 ||
          declared_edges < 0) {
        throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
      }
      problem_line = lineno;
      names.assign(static_cast<std::size_t>(n), "");
      for (int v = 0; v < n; ++v) names[static_cast<std::size_t>(v)] = default_vertex_name(v);
      continue;
    }
    if (n == -1) throw ParseError(lineno, "'" + kind + "' line before the problem line");
    if (kind == "n") {
      int id;
      std::string name;
      if (!(fields >> id >> name)) throw ParseError(lineno, "malformed name line");
      if (id < 1 || id > n) throw ParseError(lineno, "vertex index out of range");
      names[static_cast<std::size_t>(id - 1)] = name;
    } else if (kind == "e") {
      int u, v;
      if (!(fields >> u >> v)) throw ParseError(lineno, "malformed edge line");
      if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex index out of range");
      if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
      if (!seen.emplace(u, v).second) {
        throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(lineno, "unknown line type '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "trailing tokens on line");
  }
  if (n == -1) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem line");
  if (static_cast<int>(edges.size()) != declared_edges) {
    throw ParseError(problem_line, "problem line declares " + std::to_string(declared_edges) +
                                       " edges but " + std::to_string(edges.size()) +
                                       " were given");
  }
  return Graph(n, edges, std::move(names));
}

std::string write_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  bool custom = false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.name(v) != default_vertex_name(v)) {
      custom = true;
      break;
    }
  }
  if (custom) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out += "n " + std::to_string(v + 1) + " " + g.name(v) + "\n";
    }
  }
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

}  // namespace wordrep
