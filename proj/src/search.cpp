#include "wordrep/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "wordrep/constructions.hpp"

namespace wordrep {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "Found";
    case SearchStatus::exhausted_no_solution: return "ExhaustedNoSolution";
    case SearchStatus::budget_exceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

/// State shared between the subtree workers of one search run.
struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<bool> found{false};
  std::mutex found_mutex;
  std::optional<Word> found_word;
  Clock::time_point start;
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_budget_seconds;

  void record_found(Word w) {
    std::lock_guard<std::mutex> lock(found_mutex);
    if (!found_word) found_word = std::move(w);
    found.store(true, std::memory_order_release);
    stop.store(true, std::memory_order_release);
  }

  bool over_deadline() const {
    if (!time_budget_seconds) return false;
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    return elapsed.count() > *time_budget_seconds;
  }
};

class Searcher {
 public:
  Searcher(const Graph& g, const SearchConfig& cfg, Shared& shared)
      : g_(g),
        cfg_(cfg),
        shared_(shared),
        n_(g.vertex_count()),
        k_(cfg.k),
        total_(n_ * cfg.k),
        count_(static_cast<std::size_t>(n_), 0),
        rlast_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1),
        broken_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0),
        matrix_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0),
        order_adj_(static_cast<std::size_t>(n_)),
        order_mark_(static_cast<std::size_t>(n_), 0) {
    finalists_.reserve(static_cast<std::size_t>(n_));
    word_.reserve(static_cast<std::size_t>(total_));
    undo_.reserve(static_cast<std::size_t>(total_) * static_cast<std::size_t>(std::max(n_ - 1, 1)));
    for (int v = 0; v < n_; ++v) {
      for (int u : g.neighbors(v)) matrix_[pidx_raw(v, u)] = 1;
    }
  }

  /// Full depth-first search from the current state. Depth cap, when given,
  /// turns the run into a prefix enumeration that hands each cap-depth
  /// prefix to `sink` instead of descending.
  void run(int depth_cap = -1, std::function<void(const std::vector<Letter>&)> sink = {}) {
    cap_ = depth_cap;
    sink_ = std::move(sink);
    dfs();
  }

  /// Reconstructs a previously enumerated prefix without rule checks or
  /// node accounting.
  void replay(const std::vector<Letter>& prefix) {
    for (Letter x : prefix) commit(x);
  }

 private:
  std::size_t pidx_raw(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }
  std::size_t pidx(int a, int b) const { return a < b ? pidx_raw(a, b) : pidx_raw(b, a); }

  bool passes_rules(int x) const {
    const int cx = count_[static_cast<std::size_t>(x)];
    if (cx >= total_) return false;  // hard cap, reachable only with p3 off
    const PruneRules& r = cfg_.rules;
    if (r.p3 && cx >= k_) return false;
    for (int y : g_.neighbors(x)) {
      if (r.p2 && count_[static_cast<std::size_t>(y)] < cx) return false;
      if (r.p1) {
        const auto i = pidx(x, y);
        if (broken_[i] || rlast_[i] == x) return false;
      }
    }
    if ((r.p4 || r.p5) && cx + 1 == k_) {
      const int threshold = r.p5 ? k_ - 1 : k_;
      for (int y = 0; y < n_; ++y) {
        if (y == x || matrix_[pidx_raw(x, y)]) continue;
        const auto i = pidx(x, y);
        if (broken_[i] || rlast_[i] == x) continue;  // breaks now or already broken
        if (count_[static_cast<std::size_t>(y)] >= threshold) return false;
      }
    }
    return true;
  }

  void commit(int x) {
    for (int y = 0; y < n_; ++y) {
      if (y == x) continue;
      const auto i = pidx(x, y);
      undo_.push_back({i, rlast_[i], broken_[i]});
      if (rlast_[i] == x) broken_[i] = 1;
      rlast_[i] = x;
    }
    ++count_[static_cast<std::size_t>(x)];
    word_.push_back(x);
  }

  void uncommit(int x) {
    for (int t = 0; t < n_ - 1; ++t) {
      const auto& u = undo_.back();
      rlast_[u.pair] = u.rlast;
      broken_[u.pair] = u.broken;
      undo_.pop_back();
    }
    --count_[static_cast<std::size_t>(x)];
    word_.pop_back();
  }

  /// Deadness check for the committed state: collect letters with exactly
  /// one occurrence left, derive the forced order between their final
  /// occurrences pair by pair, and look for a directed cycle.
  bool forced_order_cycle() {
    finalists_.clear();
    for (int x = 0; x < n_; ++x) {
      if (count_[static_cast<std::size_t>(x)] == k_ - 1) finalists_.push_back(x);
    }
    if (finalists_.size() < 2) return false;
    for (int x : finalists_) order_adj_[static_cast<std::size_t>(x)].clear();
    for (std::size_t s = 0; s < finalists_.size(); ++s) {
      for (std::size_t t = s + 1; t < finalists_.size(); ++t) {
        const int a = finalists_[s];
        const int b = finalists_[t];
        const auto i = pidx(a, b);
        if (broken_[i]) continue;
        const int last = rlast_[i];
        if (last < 0) {
          // neither letter placed yet (k = 1): a single occurrence each can
          // only alternate, so a non-edge pair is already unfixable
          if (!matrix_[pidx_raw(a, b)]) return true;
          continue;
        }
        const int other = last == a ? b : a;
        if (matrix_[pidx_raw(a, b)]) {
          order_adj_[static_cast<std::size_t>(other)].push_back(last);
        } else {
          order_adj_[static_cast<std::size_t>(last)].push_back(other);
        }
      }
    }
    // iterative tricolor DFS over the finalists
    for (int x : finalists_) order_mark_[static_cast<std::size_t>(x)] = 0;
    for (int root : finalists_) {
      if (order_mark_[static_cast<std::size_t>(root)] != 0) continue;
      dfs_stack_.clear();
      dfs_stack_.push_back({root, 0});
      order_mark_[static_cast<std::size_t>(root)] = 1;
      while (!dfs_stack_.empty()) {
        auto& [v, next] = dfs_stack_.back();
        const auto& out = order_adj_[static_cast<std::size_t>(v)];
        if (next >= out.size()) {
          order_mark_[static_cast<std::size_t>(v)] = 2;
          dfs_stack_.pop_back();
          continue;
        }
        const int w = out[next++];
        const auto mark = order_mark_[static_cast<std::size_t>(w)];
        if (mark == 1) return true;
        if (mark == 0) {
          order_mark_[static_cast<std::size_t>(w)] = 1;
          dfs_stack_.push_back({w, 0});
        }
      }
    }
    return false;
  }

  /// One node = one committed placement. Returns false once the subtree
  /// must stop (found, budget, or external stop).
  bool expand() {
    if (shared_.node_budget &&
        shared_.nodes.load(std::memory_order_relaxed) >= *shared_.node_budget) {
      shared_.budget_hit.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
      return false;
    }
    const std::uint64_t seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if ((seen & 1023u) == 0 && shared_.over_deadline()) {
      shared_.budget_hit.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
      return false;
    }
    if (cfg_.progress_interval && cfg_.progress && seen % *cfg_.progress_interval == 0) {
      cfg_.progress(seen);
    }
    return true;
  }

  bool try_child(int x, bool& keep_going) {
    if (shared_.stop.load(std::memory_order_relaxed) || !expand()) {
      keep_going = false;
      return false;
    }
    commit(x);
    keep_going = dfs();
    uncommit(x);
    return keep_going;
  }

  bool dfs() {
    const int depth = static_cast<int>(word_.size());
    if (depth == total_) {
      Word w(word_, n_);
      if (is_k_uniform(w, k_) && represents(w, g_)) {
        shared_.record_found(std::move(w));
        return false;
      }
      return true;
    }
    if (cap_ >= 0 && depth == cap_) {
      sink_(word_);
      return true;
    }
    if (cfg_.rules.p6 && depth > 0 && forced_order_cycle()) return true;
    const int last = (depth == 0 && cfg_.break_symmetry) ? 0 : n_ - 1;
    bool keep_going = true;
    for (int x = 0; x <= last; ++x) {
      if (passes_rules(x) && !try_child(x, keep_going)) return keep_going;
    }
    return keep_going;
  }

  struct UndoEntry {
    std::size_t pair;
    int rlast;
    std::uint8_t broken;
  };

  const Graph& g_;
  const SearchConfig& cfg_;
  Shared& shared_;
  int n_, k_, total_;
  int cap_ = -1;
  std::function<void(const std::vector<Letter>&)> sink_;
  std::vector<Letter> word_;
  std::vector<int> count_;
  std::vector<int> rlast_;
  std::vector<std::uint8_t> broken_;
  std::vector<std::uint8_t> matrix_;
  std::vector<UndoEntry> undo_;
  // forced-order scratch
  std::vector<int> finalists_;
  std::vector<std::vector<int>> order_adj_;
  std::vector<std::uint8_t> order_mark_;
  std::vector<std::pair<int, std::size_t>> dfs_stack_;
};

void validate(const Graph& g, const SearchConfig& cfg) {
  if (g.vertex_count() < 1) throw InvalidInput("search requires a graph with at least one vertex");
  if (cfg.k < 1) throw InvalidInput("k must be >= 1");
  if (cfg.node_budget && *cfg.node_budget < 1) throw InvalidInput("node budget must be >= 1");
  if (cfg.time_budget_seconds && *cfg.time_budget_seconds <= 0) {
    throw InvalidInput("time budget must be positive");
  }
}

SearchOutcome finish(const Graph& g, const SearchConfig& cfg, const Shared& shared) {
  SearchOutcome out;
  out.nodes_expanded = shared.nodes.load();
  const std::chrono::duration<double> elapsed = Clock::now() - shared.start;
  out.wall_time_seconds = elapsed.count();
  if (shared.found.load()) {
    out.status = SearchStatus::found;
    out.word = shared.found_word;
    // Re-verify with the independent checker before handing the word out.
    if (!out.word || !is_k_uniform(*out.word, cfg.k) || !represents(*out.word, g)) {
      throw Error("search produced a word that fails re-verification");
    }
  } else if (shared.budget_hit.load()) {
    out.status = SearchStatus::budget_exceeded;
  } else {
    out.status = SearchStatus::exhausted_no_solution;
  }
  return out;
}

SearchOutcome search_sequential(const Graph& g, const SearchConfig& cfg) {
  Shared shared;
  shared.start = Clock::now();
  shared.node_budget = cfg.node_budget;
  shared.time_budget_seconds = cfg.time_budget_seconds;
  Searcher searcher(g, cfg, shared);
  searcher.run();
  return finish(g, cfg, shared);
}

SearchOutcome search_parallel(const Graph& g, const SearchConfig& cfg) {
  constexpr int kSplitDepth = 2;
  if (g.vertex_count() * cfg.k <= kSplitDepth) return search_sequential(g, cfg);

  Shared shared;
  shared.start = Clock::now();
  shared.node_budget = cfg.node_budget;
  shared.time_budget_seconds = cfg.time_budget_seconds;

  std::vector<std::vector<Letter>> prefixes;
  {
    Searcher enumerator(g, cfg, shared);
    enumerator.run(kSplitDepth, [&](const std::vector<Letter>& p) { prefixes.push_back(p); });
  }
  if (shared.stop.load()) return finish(g, cfg, shared);

  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(hw, prefixes.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      while (!shared.stop.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= prefixes.size()) return;
        Searcher worker(g, cfg, shared);
        worker.replay(prefixes[i]);
        worker.run();
      }
    });
  }
  for (auto& th : pool) th.join();
  return finish(g, cfg, shared);
}

}  // namespace

SearchOutcome search_k_word(const Graph& g, const SearchConfig& cfg) {
  validate(g, cfg);
  return cfg.parallel ? search_parallel(g, cfg) : search_sequential(g, cfg);
}

RepnumResult representation_number(const Graph& g, int k_max, const SearchConfig& tmpl) {
  if (k_max < 1) throw InvalidInput("k_max must be >= 1");
  RepnumResult res;
  if (is_complete(g)) {
    SearchConfig cfg = tmpl;
    cfg.k = 1;
    auto out = search_k_word(g, cfg);  // immediate: the identity permutation
    res.per_k.emplace_back(1, out);
    res.value = 1;
    res.lower_bound = 1;
    res.upper_bound = 1;
    return res;
  }
  res.lower_bound = 2;  // only complete graphs admit a 1-uniform representant
  for (int k = 2; k <= k_max; ++k) {
    SearchConfig cfg = tmpl;
    cfg.k = k;
    auto out = search_k_word(g, cfg);
    const SearchStatus status = out.status;
    res.per_k.emplace_back(k, std::move(out));
    if (status == SearchStatus::found) {
      res.value = k;
      res.upper_bound = k;
      res.lower_bound = k;
      break;
    }
    if (status == SearchStatus::exhausted_no_solution) {
      res.lower_bound = k + 1;
      continue;
    }
    break;  // budget exceeded: bracket only
  }
  return res;
}

namespace {

nlohmann::json outcome_details(const SearchOutcome& out, const SearchConfig& cfg) {
  nlohmann::json d{
      {"outcome", to_string(out.status)},
      {"nodes_expanded", out.nodes_expanded},
      {"k", cfg.k},
      {"symmetry_breaking", cfg.break_symmetry},
      {"parallel", cfg.parallel},
  };
  if (cfg.node_budget) d["node_budget"] = *cfg.node_budget;
  return d;
}

nlohmann::json outcome_timing(const SearchOutcome& out) {
  return {{"wall_time_seconds", out.wall_time_seconds}};
}

}  // namespace

Report verify_claim_lemma2(const Lemma2Options& opt) {
  Report rep;
  rep.command = "verify-claim-lemma2";

  {
    // Control leg: the same exhaustion machinery must find a 2-uniform
    // representant of P_3.
    SearchConfig cfg;
    cfg.k = 2;
    const Graph p3 = generate({Family::path, 1, 3});
    auto out = search_k_word(p3, cfg);
    rep.records.push_back({"control-P3-k2-search",
                           "R(P_n)=R(Gr_{1,n})=2",
                           out.status == SearchStatus::found ? CheckStatus::pass
                                                             : CheckStatus::fail,
                           outcome_details(out, cfg), outcome_timing(out)});
  }

  const Graph g33 = generate({Family::grid, 3, 3});
  {
    SearchConfig cfg;
    cfg.k = 2;
    cfg.break_symmetry = true;
    cfg.node_budget = opt.node_budget;
    cfg.time_budget_seconds = opt.time_guard_seconds;
    auto out = search_k_word(g33, cfg);
    CheckStatus status = CheckStatus::fail;
    if (out.status == SearchStatus::exhausted_no_solution) status = CheckStatus::pass;
    if (out.status == SearchStatus::budget_exceeded) status = CheckStatus::inconclusive;
    auto details = outcome_details(out, cfg);
    details["claimed"] = out.status == SearchStatus::exhausted_no_solution
                             ? "no 2-uniform representant exists, so R >= 3"
                             : "inconclusive, budget interrupted the exhaustion";
    rep.records.push_back({"grid-3x3-k2-exhaustion", "We have R(Gr_{3,3}) ≥ 3", status,
                           std::move(details), outcome_timing(out)});
  }
  {
    // Spot check: the verdict must not depend on first-letter fixing.
    SearchConfig cfg;
    cfg.k = 2;
    cfg.break_symmetry = false;
    cfg.time_budget_seconds = opt.spot_check_seconds;
    auto out = search_k_word(g33, cfg);
    CheckStatus status = CheckStatus::fail;
    if (out.status == SearchStatus::exhausted_no_solution) status = CheckStatus::pass;
    if (out.status == SearchStatus::budget_exceeded) status = CheckStatus::inconclusive;
    rep.records.push_back({"grid-3x3-k2-exhaustion-unbroken-spot-check",
                           "We have R(Gr_{3,3}) ≥ 3", status, outcome_details(out, cfg),
                           outcome_timing(out)});
  }
  return rep;
}

Report explore_conjecture(int m, int n, int k, const SearchConfig& cfg) {
  if (m < 3 || n < 3) throw InvalidInput("toroidal grids require m >= 3 and n >= 3");
  SearchConfig run_cfg = cfg;
  run_cfg.k = k;
  const Graph torus = generate({Family::toroidal_grid, m, n});
  auto out = search_k_word(torus, run_cfg);

  Report rep;
  rep.command = "explore-conjecture " + std::to_string(m) + " " + std::to_string(n) + " " +
                std::to_string(k);
  auto details = outcome_details(out, run_cfg);
  details["m"] = m;
  details["n"] = n;
  CheckStatus status = CheckStatus::inconclusive;
  switch (out.status) {
    case SearchStatus::found: {
      status = CheckStatus::pass;
      details["witness"] = word_to_text(*out.word, torus.names());
      details["witness_verified"] = is_k_uniform(*out.word, k) && represents(*out.word, torus);
      details["instance_conclusion"] =
          "a " + std::to_string(k) + "-uniform representant exists for this instance";
      if (k == 3 && m + n >= 8) {
        details["instance_conclusion"] =
            "a 3-uniform representant exists, contradicting the conjectured bound for this "
            "instance";
      }
      break;
    }
    case SearchStatus::exhausted_no_solution:
      status = CheckStatus::pass;
      details["instance_conclusion"] = "no " + std::to_string(k) +
                                       "-uniform representant exists, so R >= " +
                                       std::to_string(k + 1) + " for this instance";
      break;
    case SearchStatus::budget_exceeded:
      status = CheckStatus::inconclusive;
      details["instance_conclusion"] = "budget exceeded, no conclusion for this instance";
      break;
  }
  rep.records.push_back({"toroidal-" + std::to_string(m) + "x" + std::to_string(n) + "-k" +
                             std::to_string(k) + "-search",
                         "If n,m ≥ 3 and m+n ≥ 8", status, std::move(details),
                         outcome_timing(out)});
  return rep;
}

}  // namespace wordrep
