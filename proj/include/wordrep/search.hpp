#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "wordrep/graph.hpp"
#include "wordrep/report.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Individually toggleable pruning rules for the depth-first search. All
/// rules are sound: they only ever cut branches that contain no k-uniform
/// representant, so exhaustion verdicts are unaffected by any combination.
struct PruneRules {
  /// Reject an appended letter whose restriction with a neighbor stops
  /// alternating (between consecutive x's every neighbor must occur
  /// exactly once).
  bool p1 = true;
  /// Occurrence counts of adjacent letters may never differ by more than 1.
  bool p2 = true;
  /// Remaining-capacity check: no letter may exceed k occurrences, so every
  /// letter's deficit always fits exactly in the remaining positions.
  bool p3 = true;
  /// When both letters of a non-edge reach count k with their restriction
  /// still perfectly alternating, the pair can no longer break: prune.
  bool p4 = true;
  /// Lookahead sharpening of p4: when a letter reaches count k, a
  /// non-neighbor at count k-1 with an alternating restriction is also
  /// unfixable (its single remaining occurrence extends the alternation).
  bool p5 = true;
  /// Forced-final-order rule. A pair whose letters both have exactly one
  /// occurrence left forces a strict order between those finals: an edge
  /// pair must keep alternating (the letter opposite the restriction's
  /// last must come first), an unbroken non-edge pair must double up (the
  /// restriction's last letter must come first). A directed cycle among
  /// these constraints means no completion exists.
  bool p6 = true;
};

struct SearchConfig {
  int k = 2;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_seconds;
  /// Enumerate only words whose first letter is vertex 0. Sound for
  /// existence questions because uniform words are closed under rotation
  /// (test-validated in the words module).
  bool break_symmetry = true;
  /// Split the tree at depth 2 into independent subtrees processed by a
  /// thread pool. Exhaustion statuses are combined conjunctively; a found
  /// word may differ from the sequential canonical word.
  bool parallel = false;
  PruneRules rules;
  std::optional<std::uint64_t> progress_interval;
  std::function<void(std::uint64_t nodes)> progress;
};

enum class SearchStatus { found, exhausted_no_solution, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::budget_exceeded;
  /// Present iff status == found; re-verified with the independent checker
  /// before being returned.
  std::optional<Word> word;
  std::uint64_t nodes_expanded = 0;
  double wall_time_seconds = 0.0;
};

struct RepnumResult {
  /// The representation number, set iff the bounds coincide.
  std::optional<int> value;
  int lower_bound = 1;
  /// Witnessed by the found word stored in per_k.
  std::optional<int> upper_bound;
  std::vector<std::pair<int, SearchOutcome>> per_k;
};

/// Depth-first search for a k-uniform word representing g. Letters are tried
/// in ascending id, which together with depth-first order makes the found
/// word canonical in sequential mode.
SearchOutcome search_k_word(const Graph& g, const SearchConfig& cfg);

/// Tries k = 2..k_max (complete graphs return 1 immediately, witnessed by a
/// permutation). The first Found fixes the value; a budget interruption
/// stops the chain with a bracket only.
RepnumResult representation_number(const Graph& g, int k_max, const SearchConfig& tmpl = {});

struct Lemma2Options {
  /// Node budget for the main exhaustion leg (testing hook; default none).
  std::optional<std::uint64_t> node_budget;
  /// Wall-clock guard for the main leg; exceeding it downgrades the claim
  /// to inconclusive rather than hanging.
  double time_guard_seconds = 900.0;
  /// Wall budget for the symmetry-breaking-disabled spot check.
  double spot_check_seconds = 300.0;
};

/// Reproduces the 3x3 grid lower bound: unbudgeted k=2 exhaustion with
/// symmetry breaking, a control search on P_3, and a symmetry-off spot
/// check. Budget interruptions are reported as inconclusive, never as a
/// silent pass.
Report verify_claim_lemma2(const Lemma2Options& opt = {});

/// Bounded search for a k-uniform representant of the m x n toroidal grid.
/// The report states the instance-level outcome only; a budget interruption
/// yields an inconclusive record and no verdict.
Report explore_conjecture(int m, int n, int k, const SearchConfig& cfg);

}  // namespace wordrep
