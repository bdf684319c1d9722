#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/errors.hpp"

namespace wordrep {

/// Simple undirected labeled graph on a dense 0-based vertex range.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> names = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  /// Sorted edge list, each pair normalized to u < v.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::string& name(int v) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> matrix_;
  std::vector<std::string> names_;
};

enum class Family {
  path,
  cycle,
  ladder,
  prism,
  grid,
  cyl_grid,
  toroidal_grid,
  complete,
};

/// Which graph to generate. `m` is the row count where applicable; for the
/// one-parameter families (path, cycle, ladder, prism, complete) only `n`
/// is read and the row count is implied.
struct FamilySpec {
  Family family = Family::grid;
  int m = 1;
  int n = 1;
};

std::optional<Family> family_from_string(std::string_view text);
std::string_view family_name(Family f);
/// Number of size parameters the family takes on the command line (1 or 2).
int family_arity(Family f);

/// Row-major vertex id of the grid point (i, j), both 1-based, width n.
constexpr int grid_vertex_id(int i, int j, int n) { return (i - 1) * n + (j - 1); }

std::string default_vertex_name(int id);
std::string grid_vertex_name(int i, int j);

/// Builds the requested family with row-major vertex numbering and
/// `x{i}_{j}` names (complete graphs use `v{i}`).
Graph generate(const FamilySpec& spec);

bool is_complete(const Graph& g);

/// Subgraph induced on `vertices`, renumbered densely in ascending order of
/// original id; names carried over.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Graph file format: optional `c ...` comments, one `p edge <n> <m>` line,
/// optional `n <id> <name>` lines (1-based ids), and `e <u> <v>` lines with
/// 1 <= u < v <= n and no duplicates.
Graph parse_graph(const std::string& text);

/// Inverse of parse_graph. Emits edges sorted lexicographically; name lines
/// are emitted only when some name differs from the `v{i}` default.
std::string write_graph(const Graph& g);

}  // namespace wordrep
