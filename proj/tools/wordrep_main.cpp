#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wordrep/check_suite.hpp"
#include "wordrep/constructions.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/report.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Exit codes: 0 success/pass, 1 semantic negative, 2 usage or parse error,
// 3 IO error, 4 no known explicit word.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoKnownWord = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wordrep::IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw wordrep::IoError("read failure on " + path);
  return buf.str();
}

// Whole-file atomic write: temp file in the same directory, then rename.
void write_file(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw wordrep::IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw wordrep::IoError("write failure on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw wordrep::IoError("cannot rename " + tmp.string() + " to " + path);
}

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
  int seed = 0;  // reserved; search is deterministic
  std::string command_line;
};

void emit(const GlobalFlags& flags, wordrep::Report report) {
  report.command = flags.command_line;
  if (flags.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (!flags.quiet) {
    std::cout << report.to_text();
  }
}

void line(const GlobalFlags& flags, const std::string& text) {
  if (!flags.quiet && !flags.json) std::cout << text << "\n";
}

struct GenArgs {
  std::string family;
  std::vector<int> sizes;
  std::string output;
};

int cmd_gen(const GlobalFlags& flags, const GenArgs& args) {
  const auto family = wordrep::family_from_string(args.family);
  if (!family) throw wordrep::InvalidFamilyParams("unknown family '" + args.family + "'");
  const int arity = wordrep::family_arity(*family);
  if (static_cast<int>(args.sizes.size()) != arity) {
    throw wordrep::InvalidFamilyParams(args.family + " takes " + std::to_string(arity) +
                                       " size argument(s)");
  }
  wordrep::FamilySpec spec{*family, 1, args.sizes.back()};
  if (arity == 2) {
    spec.m = args.sizes[0];
    spec.n = args.sizes[1];
  }
  const wordrep::Graph g = wordrep::generate(spec);
  const std::string text = wordrep::write_graph(g);
  const std::string summary =
      "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
  if (!args.output.empty()) {
    write_file(args.output, text);
    line(flags, summary);
  } else if (!flags.json && !flags.quiet) {
    std::cout << text;
  }
  if (flags.json) {
    wordrep::Report rep;
    rep.command = "gen";
    rep.records.push_back({"gen-" + args.family,
                           "has vertex set V = {x_{ij}",
                           wordrep::CheckStatus::pass,
                           {{"vertices", g.vertex_count()},
                            {"edges", g.edge_count()},
                            {"output", args.output}},
                           json::object()});
    emit(flags, rep);
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string family;
  int m = 1;
  int n = 1;
  bool verify_only = false;
  std::string output;
};

int cmd_construct(const GlobalFlags& flags, const ConstructArgs& args) {
  wordrep::Word w;
  wordrep::FamilySpec spec;
  if (args.family == "grid") {
    spec = {wordrep::Family::grid, args.m, args.n};
    w = wordrep::grid_word(args.m, args.n);
  } else if (args.family == "cyl") {
    spec = {wordrep::Family::cyl_grid, args.m, args.n};
    w = wordrep::cyl_word(args.m, args.n);
  } else if (args.family == "torus") {
    spec = {wordrep::Family::toroidal_grid, args.m, args.n};
    w = wordrep::torus_word(args.m, args.n);
  } else {
    throw wordrep::InvalidFamilyParams("construct supports grid, cyl, torus; got '" +
                                       args.family + "'");
  }
  const wordrep::Graph g = wordrep::generate(spec);
  const std::string text = wordrep::word_to_text(w, g.names());
  if (!args.output.empty()) write_file(args.output, text);
  if (args.verify_only) {
    line(flags, "REPRESENTS k=3");
  } else if (!flags.json && !flags.quiet) {
    std::cout << text;
  }
  if (flags.json) {
    wordrep::Report rep;
    rep.command = "construct";
    rep.records.push_back({"construct-" + args.family + "-" + std::to_string(args.m) + "x" +
                               std::to_string(args.n),
                           args.family == "grid" ? "is 3-representable for every n ≥ 3"
                                                 : "is 3-representable for all m ≥ 1",
                           wordrep::CheckStatus::pass,
                           {{"word", text}, {"k", 3}, {"length", w.length()}},
                           json::object()});
    emit(flags, rep);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string graph_path;
  std::string word_path;
};

int cmd_verify(const GlobalFlags& flags, const VerifyArgs& args) {
  const wordrep::Graph g = wordrep::parse_graph(read_file(args.graph_path));
  const wordrep::Word w = wordrep::parse_word(read_file(args.word_path), g);

  std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int x : w.letters()) ++count[static_cast<std::size_t>(x)];
  const int k = count.empty() ? 0 : count[0];
  bool uniform = k >= 1;
  for (int c : count) uniform = uniform && c == k;

  wordrep::Report rep;
  rep.command = "verify";
  int exit_code = kExitNegative;
  json details{{"graph", args.graph_path}, {"word", args.word_path}};
  if (!uniform) {
    details["reason"] = "word is not uniform over the vertex alphabet";
    line(flags, "NOT UNIFORM");
  } else if (wordrep::represents(w, g)) {
    details["k"] = k;
    exit_code = kExitOk;
    line(flags, "REPRESENTS k=" + std::to_string(k));
  } else {
    for (int x = 0; x < g.vertex_count() && !details.contains("offending_pair"); ++x) {
      for (int y = x + 1; y < g.vertex_count(); ++y) {
        const bool edge = g.adjacent(x, y);
        const bool alt = wordrep::alternates(w, x, y);
        if (edge != alt) {
          details["offending_pair"] = {{"x", g.name(x)},
                                       {"y", g.name(y)},
                                       {"edge", edge},
                                       {"alternates", alt}};
          line(flags, "DOES NOT REPRESENT: pair (" + g.name(x) + ", " + g.name(y) +
                          ") edge=" + (edge ? "true" : "false") +
                          " alternates=" + (alt ? "true" : "false"));
          break;
        }
      }
    }
  }
  rep.records.push_back({"verify", "alternate in w if and only if",
                         exit_code == kExitOk ? wordrep::CheckStatus::pass
                                              : wordrep::CheckStatus::fail,
                         std::move(details), json::object()});
  if (flags.json) emit(flags, rep);
  return exit_code;
}

struct SearchArgs {
  std::string graph_path;
  int k = 2;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::string witness;
  bool no_symmetry = false;
  bool parallel = false;
  std::optional<std::uint64_t> progress;
};

wordrep::SearchConfig make_config(const SearchArgs& args) {
  wordrep::SearchConfig cfg;
  cfg.k = args.k;
  cfg.node_budget = args.budget_nodes;
  cfg.time_budget_seconds = args.budget_seconds;
  cfg.break_symmetry = !args.no_symmetry;
  cfg.parallel = args.parallel;
  if (args.progress) {
    cfg.progress_interval = args.progress;
    cfg.progress = [](std::uint64_t nodes) {
      std::cerr << "... " << nodes << " nodes expanded\n";
    };
  }
  return cfg;
}

json search_record_details(const wordrep::SearchOutcome& out, const wordrep::SearchConfig& cfg,
                           const wordrep::Graph& g, const std::string& witness_path) {
  json d{{"outcome", wordrep::to_string(out.status)},
         {"nodes_expanded", out.nodes_expanded},
         {"k", cfg.k},
         {"symmetry_breaking", cfg.break_symmetry},
         {"parallel", cfg.parallel}};
  if (out.word) d["word"] = wordrep::word_to_text(*out.word, g.names());
  if (!witness_path.empty()) d["witness_file"] = witness_path;
  return d;
}

int cmd_search(const GlobalFlags& flags, const SearchArgs& args) {
  const wordrep::Graph g = wordrep::parse_graph(read_file(args.graph_path));
  const wordrep::SearchConfig cfg = make_config(args);
  const auto out = wordrep::search_k_word(g, cfg);

  std::string witness_path;
  if (out.word && !args.witness.empty()) {
    witness_path = args.witness;
    write_file(witness_path, wordrep::word_to_text(*out.word, g.names()));
  }
  line(flags, "status: " + wordrep::to_string(out.status));
  line(flags, "nodes: " + std::to_string(out.nodes_expanded));
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "time: %.3fs", out.wall_time_seconds);
    line(flags, buf);
  }
  if (out.word && !flags.json && !flags.quiet) {
    std::cout << "word: " << wordrep::word_to_text(*out.word, g.names());
  }
  if (flags.json) {
    wordrep::Report rep;
    rep.command = "search";
    rep.records.push_back({"search-k" + std::to_string(args.k),
                           "each letter appears exactly k times",
                           out.status == wordrep::SearchStatus::budget_exceeded
                               ? wordrep::CheckStatus::inconclusive
                               : wordrep::CheckStatus::pass,
                           search_record_details(out, cfg, g, witness_path),
                           {{"wall_time_seconds", out.wall_time_seconds}}});
    emit(flags, rep);
  }
  return out.status == wordrep::SearchStatus::found ? kExitOk : kExitNegative;
}

struct RepnumArgs {
  std::string graph_path;
  int max_k = 3;
  SearchArgs search;
};

int cmd_repnum(const GlobalFlags& flags, const RepnumArgs& args) {
  const wordrep::Graph g = wordrep::parse_graph(read_file(args.graph_path));
  const wordrep::SearchConfig tmpl = make_config(args.search);
  const auto res = wordrep::representation_number(g, args.max_k, tmpl);

  std::string witness_path;
  const wordrep::Word* witness = nullptr;
  for (const auto& [k, out] : res.per_k) {
    if (out.word) witness = &*out.word;
  }
  if (witness != nullptr && !args.search.witness.empty()) {
    witness_path = args.search.witness;
    write_file(witness_path, wordrep::word_to_text(*witness, g.names()));
  }

  if (res.value) {
    line(flags, "R = " + std::to_string(*res.value));
  } else if (res.upper_bound) {
    line(flags, "R <= " + std::to_string(*res.upper_bound));
  } else {
    const bool interrupted =
        !res.per_k.empty() &&
        res.per_k.back().second.status == wordrep::SearchStatus::budget_exceeded;
    line(flags, "R >= " + std::to_string(res.lower_bound) +
                    (interrupted ? " (budget exceeded)" : " (no k-uniform word up to max-k)"));
  }
  if (flags.json) {
    wordrep::Report rep;
    rep.command = "repnum";
    bool interrupted = false;
    for (const auto& [k, out] : res.per_k) {
      wordrep::SearchConfig cfg = tmpl;
      cfg.k = k;
      interrupted = interrupted || out.status == wordrep::SearchStatus::budget_exceeded;
      rep.records.push_back({"search-k" + std::to_string(k),
                             "each letter appears exactly k times",
                             out.status == wordrep::SearchStatus::budget_exceeded
                                 ? wordrep::CheckStatus::inconclusive
                                 : wordrep::CheckStatus::pass,
                             search_record_details(out, cfg, g, witness_path),
                             {{"wall_time_seconds", out.wall_time_seconds}}});
    }
    json d{{"lower_bound", res.lower_bound}};
    if (res.value) d["value"] = *res.value;
    if (res.upper_bound) d["upper_bound"] = *res.upper_bound;
    rep.records.push_back({"representation-number", "The minimum such k is called",
                           res.value ? wordrep::CheckStatus::pass
                                     : wordrep::CheckStatus::inconclusive,
                           std::move(d), json::object()});
    emit(flags, rep);
  }
  return res.value ? kExitOk : kExitNegative;
}

struct ExploreArgs {
  int m = 3;
  int n = 3;
  int k = 3;
  SearchArgs search;
};

int cmd_explore(const GlobalFlags& flags, const ExploreArgs& args) {
  wordrep::SearchConfig cfg = make_config(args.search);
  const auto rep = wordrep::explore_conjecture(args.m, args.n, args.k, cfg);
  const auto& rec = rep.records.front();
  const bool found = rec.details.contains("witness");
  if (found && !args.search.witness.empty()) {
    write_file(args.search.witness, rec.details["witness"].get<std::string>());
  }
  if (flags.json) {
    emit(flags, rep);
  } else {
    line(flags, rep.to_text());
  }
  return found ? kExitOk : kExitNegative;
}

struct PaperCheckArgs {
  int max_size = 12;
  double time_guard = 900.0;
  std::string report_path;
};

int cmd_paper_check(const GlobalFlags& flags, const PaperCheckArgs& args) {
  wordrep::CheckSuiteOptions opt;
  opt.max_size = args.max_size;
  opt.lemma2.time_guard_seconds = args.time_guard;
  auto rep = wordrep::run_check_suite(opt);
  rep.command = flags.command_line;
  if (!args.report_path.empty()) write_file(args.report_path, rep.to_json().dump(2) + "\n");
  if (flags.json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else if (!flags.quiet) {
    std::cout << rep.to_text();
  }
  return rep.overall() == wordrep::CheckStatus::pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uniform word-representants of grid-like graphs"};
  app.set_version_flag("--version", wordrep::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "emit machine-readable reports");
  app.add_flag("--quiet", flags.quiet, "suppress human-readable output");
  app.add_option("--seed", flags.seed, "reserved; the search is deterministic")
      ->default_val(0);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  gen->add_option("family", gen_args.family,
                  "path|cycle|ladder|prism|grid|cyl|torus|complete")
      ->required();
  gen->add_option("sizes", gen_args.sizes, "m n for grid/cyl/torus, n otherwise")
      ->required()
      ->expected(1, 2);
  gen->add_option("-o,--output", gen_args.output, "graph file to write");

  ConstructArgs con_args;
  auto* con = app.add_subcommand("construct", "build an explicit 3-uniform representant");
  con->add_option("family", con_args.family, "grid|cyl|torus")->required();
  con->add_option("m", con_args.m, "rows")->required();
  con->add_option("n", con_args.n, "columns")->required();
  con->add_flag("--verify-only", con_args.verify_only, "print the verdict, not the word");
  con->add_option("-o,--output", con_args.output, "word file to write");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "check a word file against a graph file");
  ver->add_option("graph", ver_args.graph_path, "graph file")->required();
  ver->add_option("word", ver_args.word_path, "word file")->required();

  SearchArgs search_args;
  auto* sea = app.add_subcommand("search", "search for a k-uniform representant");
  sea->add_option("--graph", search_args.graph_path, "graph file")->required();
  sea->add_option("--k", search_args.k, "multiplicity")->required()->check(CLI::PositiveNumber);
  sea->add_option("--budget-nodes", search_args.budget_nodes, "max expanded nodes")
      ->check(CLI::PositiveNumber);
  sea->add_option("--budget-seconds", search_args.budget_seconds, "wall-clock budget")
      ->check(CLI::PositiveNumber);
  sea->add_option("--witness", search_args.witness, "write the found word here");
  sea->add_flag("--no-symmetry-breaking", search_args.no_symmetry,
                "do not fix the first letter");
  sea->add_flag("--parallel", search_args.parallel, "split the tree across threads");
  sea->add_option("--progress", search_args.progress, "report every N nodes")
      ->check(CLI::PositiveNumber);

  RepnumArgs rep_args;
  auto* rep = app.add_subcommand("repnum", "compute the representation number");
  rep->add_option("--graph", rep_args.graph_path, "graph file")->required();
  rep->add_option("--max-k", rep_args.max_k, "largest multiplicity to try")
      ->required()
      ->check(CLI::PositiveNumber);
  rep->add_option("--budget-nodes", rep_args.search.budget_nodes, "per-k node budget")
      ->check(CLI::PositiveNumber);
  rep->add_option("--budget-seconds", rep_args.search.budget_seconds, "per-k wall budget")
      ->check(CLI::PositiveNumber);
  rep->add_option("--witness", rep_args.search.witness, "write the witness word here");
  rep->add_flag("--parallel", rep_args.search.parallel, "split the tree across threads");

  ExploreArgs exp_args;
  auto* exp = app.add_subcommand("explore-conjecture",
                                 "bounded toroidal representant search");
  exp->add_option("m", exp_args.m, "rows")->required()->check(CLI::PositiveNumber);
  exp->add_option("n", exp_args.n, "columns")->required()->check(CLI::PositiveNumber);
  exp->add_option("k", exp_args.k, "multiplicity")->required()->check(CLI::PositiveNumber);
  exp->add_option("--budget-nodes", exp_args.search.budget_nodes, "node budget")
      ->check(CLI::PositiveNumber);
  exp->add_option("--budget-seconds", exp_args.search.budget_seconds, "wall budget")
      ->check(CLI::PositiveNumber);
  exp->add_option("--witness", exp_args.search.witness, "write the found word here");
  exp->add_flag("--parallel", exp_args.search.parallel, "split the tree across threads");
  exp->add_option("--progress", exp_args.search.progress, "report every N nodes")
      ->check(CLI::PositiveNumber);

  PaperCheckArgs pc_args;
  auto* pc = app.add_subcommand("paper-check", "run the full claim-verification suite");
  pc->add_option("--max-size", pc_args.max_size, "sweep bound")
      ->default_val(12)
      ->check(CLI::Range(3, 64));
  pc->add_option("--time-guard", pc_args.time_guard, "exhaustion wall guard in seconds")
      ->check(CLI::PositiveNumber);
  pc->add_option("--report", pc_args.report_path, "also write the JSON report here");

  for (int i = 1; i < argc; ++i) {
    if (i > 1) flags.command_line += ' ';
    flags.command_line += argv[i];
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(flags, gen_args);
    if (con->parsed()) return cmd_construct(flags, con_args);
    if (ver->parsed()) return cmd_verify(flags, ver_args);
    if (sea->parsed()) return cmd_search(flags, search_args);
    if (rep->parsed()) return cmd_repnum(flags, rep_args);
    if (exp->parsed()) return cmd_explore(flags, exp_args);
    if (pc->parsed()) return cmd_paper_check(flags, pc_args);
  } catch (const wordrep::NoKnownWord& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoKnownWord;
  } catch (const wordrep::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const wordrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
