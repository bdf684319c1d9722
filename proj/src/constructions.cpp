#include "wordrep/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "wordrep/graph.hpp"

namespace wordrep {

namespace {

std::string ref_str(const OccurrenceRef& r) {
  return "letter " + std::to_string(r.letter) + " occurrence " + std::to_string(r.index);
}

struct ResolvedSubstitution {
  int start = 0;  // 1-based position of the anchor's first letter
  int len = 0;
  const Substitution* sub = nullptr;
};

ResolvedSubstitution resolve(const Word& base, const Substitution& sub) {
  if (sub.anchor.empty()) throw InvalidInput("substitution with empty anchor");
  std::vector<int> pos;
  pos.reserve(sub.anchor.size());
  for (const auto& ref : sub.anchor) {
    try {
      pos.push_back(occurrence_position(base, ref));
    } catch (const NoSuchOccurrence&) {
      throw AnchorNotFound("anchor " + ref_str(ref) + " does not exist in the base word");
    }
  }
  for (std::size_t i = 1; i < pos.size(); ++i) {
    if (pos[i] != pos[i - 1] + 1) {
      throw AnchorNotFound("anchor occurrences " + ref_str(sub.anchor[i - 1]) + " and " +
                           ref_str(sub.anchor[i]) + " are not contiguous in the base word");
    }
  }
  // The replacement must carry each anchor letter exactly once, in order.
  int prev = -1;
  for (const auto& ref : sub.anchor) {
    int found = -1;
    int count = 0;
    for (std::size_t t = 0; t < sub.replacement.size(); ++t) {
      if (sub.replacement[t] == ref.letter) {
        ++count;
        found = static_cast<int>(t);
      }
    }
    if (count != 1) {
      throw InvalidInput("replacement must contain anchor " + ref_str(ref) + " exactly once");
    }
    if (found < prev) {
      throw InvalidInput("replacement reorders the anchor letters");
    }
    prev = found;
  }
  return {pos.front(), static_cast<int>(pos.size()), &sub};
}

}  // namespace

Word splice(const Word& base, const SubstitutionPlan& plan) {
  std::vector<ResolvedSubstitution> resolved;
  resolved.reserve(plan.size());
  for (const auto& sub : plan) resolved.push_back(resolve(base, sub));
  std::sort(resolved.begin(), resolved.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  for (std::size_t i = 1; i < resolved.size(); ++i) {
    if (resolved[i - 1].start + resolved[i - 1].len > resolved[i].start) {
      throw OverlappingAnchors("anchors at positions " + std::to_string(resolved[i - 1].start) +
                               " and " + std::to_string(resolved[i].start) + " overlap");
    }
  }
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(base.length()) + 8 * plan.size());
  std::size_t next = 0;
  for (int p = 1; p <= base.length(); ++p) {
    if (next < resolved.size() && resolved[next].start == p) {
      const auto& r = resolved[next];
      out.insert(out.end(), r.sub->replacement.begin(), r.sub->replacement.end());
      p += r.len - 1;
      ++next;
    } else {
      out.push_back(base.at(p));
    }
  }
  return Word(std::move(out), base.alphabet_size());
}

Word path_word(int n) {
  if (n < 1) throw InvalidSize("path word requires n >= 1");
  std::vector<Letter> s;
  s.reserve(static_cast<std::size_t>(3 * n));
  for (int t = 1; t <= n + 2; ++t) {
    for (int l = t; l >= t - 2; --l) {
      if (l >= 1 && l <= n) s.push_back(l - 1);
    }
  }
  return Word(std::move(s), n);
}

namespace {

void self_check(const Word& w, const Graph& g, const char* what) {
  if (!is_k_uniform(w, 3) || !represents(w, g)) {
    throw Error(std::string(what) + " self-check failed, the constructed word is wrong");
  }
}

OccurrenceRef ref(Letter x, int index) { return OccurrenceRef{x, index}; }

// Splice rules extending a grid word by one row. Rows are 1-based; `p` is
// the previous top row, `r` the new one. All anchors address occurrences of
// the pre-step word; the plan is applied in one simultaneous splice.
SubstitutionPlan grid_step_plan(int p, int r, int n) {
  const auto id = [n](int i, int j) { return grid_vertex_id(i, j, n); };
  SubstitutionPlan plan;
  plan.push_back({{ref(id(p, 1), 2)}, {id(r, 1), id(p, 1), id(r, 2), id(r, 1)}});
  const int k = n / 2;
  for (int t = 1; t <= k - 1; ++t) {
    plan.push_back({{ref(id(p, 2 * t + 1), 2), ref(id(p, 2 * t), 3)},
                    {id(r, 2 * t + 1), id(p, 2 * t + 1), id(r, 2 * t), id(r, 2 * t - 1),
                     id(r, 2 * t + 2), id(p, 2 * t), id(r, 2 * t + 1), id(r, 2 * t)}});
  }
  if (n % 2 == 1) {
    plan.push_back({{ref(id(p, n), 2), ref(id(p, n - 1), 3)},
                    {id(r, n), id(p, n), id(r, n - 1), id(p, n - 1), id(r, n - 2)}});
  }
  plan.push_back({{ref(id(p, n), 3)}, {id(r, n), id(r, n - 1), id(p, n), id(r, n)}});
  return plan;
}

}  // namespace

Word grid_word(int m, int n, bool verify) {
  if (m < 1) throw InvalidSize("grid word requires m >= 1");
  if (n < 3) throw InvalidSize("grid word requires n >= 3");
  Word w(path_word(n).letters(), m * n);  // row 1 under row-major ids
  for (int r = 2; r <= m; ++r) w = splice(w, grid_step_plan(r - 1, r, n));
  if (verify) self_check(w, generate({Family::grid, m, n}), "grid word");
  return w;
}

Word od_word(int n) {
  if (n < 4) throw InvalidSize("Od requires n >= 4");
  std::vector<Letter> s;
  s.reserve(static_cast<std::size_t>(3 * n));
  s.push_back(0);
  s.push_back(n - 1);
  for (int t = 2; t <= n - 1; ++t) {
    s.push_back(t - 1);
    s.push_back(t - 2);
  }
  s.push_back(n - 1);
  s.push_back(n - 2);
  for (int t = 1; t <= n - 2; ++t) s.push_back(t - 1);
  s.push_back(n - 1);
  s.push_back(n - 2);
  return Word(std::move(s), n);
}

Word ev_word(int n) {
  if (n < 4) throw InvalidSize("Ev requires n >= 4");
  std::vector<Letter> s;
  s.reserve(static_cast<std::size_t>(3 * n));
  for (int t = 1; t <= n - 2; ++t) s.push_back(t - 1);
  s.push_back(n - 1);
  s.push_back(n - 2);
  const auto od = od_word(n).letters();
  s.insert(s.end(), od.begin(), od.end() - n);
  return Word(std::move(s), n);
}

namespace {

SubstitutionPlan cyl3_step_plan(int p, int r) {
  const auto id = [](int i, int j) { return grid_vertex_id(i, j, 3); };
  return {
      {{ref(id(p, 1), 2)}, {id(r, 1), id(r, 2), id(p, 1)}},
      {{ref(id(p, 3), 2)}, {id(r, 3), id(p, 3), id(r, 1)}},
      {{ref(id(p, 2), 3)}, {id(r, 2), id(r, 3), id(r, 1), id(p, 2), id(r, 2)}},
      {{ref(id(p, 3), 3)}, {id(p, 3), id(r, 3)}},
  };
}

SubstitutionPlan cyl_step_plan_even(int p, int r, int n) {
  const auto id = [n](int i, int j) { return grid_vertex_id(i, j, n); };
  SubstitutionPlan plan;
  for (int j = 1; j <= n; ++j) {
    plan.push_back({{ref(id(p, j), 2)}, {id(r, j), id(p, j)}});
  }
  plan.push_back({{ref(id(p, 1), 3)}, {id(r, 1), id(r, n), id(p, 1)}});
  for (int j = 2; j <= n - 2; ++j) {
    plan.push_back({{ref(id(p, j), 3)}, {id(r, j), id(r, j - 1), id(p, j)}});
  }
  plan.push_back({{ref(id(p, n), 3)}, {id(r, n - 1), id(r, n - 2), id(p, n)}});
  plan.push_back({{ref(id(p, n - 1), 3)}, {id(r, n), id(p, n - 1), id(r, n - 1)}});
  return plan;
}

SubstitutionPlan cyl_step_plan_odd(int p, int r, int n) {
  const auto id = [n](int i, int j) { return grid_vertex_id(i, j, n); };
  SubstitutionPlan plan;
  plan.push_back({{ref(id(p, 1), 2)}, {id(r, 1), id(p, 1)}});
  plan.push_back({{ref(id(p, n), 2)}, {id(r, n), id(p, n)}});
  for (int j = 2; j <= n - 1; ++j) {
    plan.push_back({{ref(id(p, j), 2)}, {id(r, j), id(r, j - 1), id(p, j)}});
  }
  plan.push_back({{ref(id(p, n), 3)}, {id(r, n), id(r, n - 1), id(r, 1), id(p, n)}});
  Substitution tail{{ref(id(p, n - 1), 3)}, {}};
  for (int j = 2; j <= n - 2; ++j) tail.replacement.push_back(id(r, j));
  tail.replacement.push_back(id(r, n));
  tail.replacement.push_back(id(p, n - 1));
  tail.replacement.push_back(id(r, n - 1));
  plan.push_back(std::move(tail));
  return plan;
}

}  // namespace

Word cyl3_word(int m, bool verify) {
  if (m < 1) throw InvalidSize("cylinder word requires m >= 1");
  std::vector<Letter> seed;
  for (int rep = 0; rep < 3; ++rep) {
    for (int j = 0; j < 3; ++j) seed.push_back(j);
  }
  Word w(std::move(seed), 3 * m);
  for (int r = 2; r <= m; ++r) w = splice(w, cyl3_step_plan(r - 1, r));
  if (verify) self_check(w, generate({Family::cyl_grid, m, 3}), "cylinder word");
  return w;
}

Word cyl_word(int m, int n, bool verify) {
  if (m < 1) throw InvalidSize("cylinder word requires m >= 1");
  if (n < 3) throw InvalidSize("cylinder word requires n >= 3");
  if (n == 3) return cyl3_word(m, verify);
  Word w(od_word(n).letters(), m * n);  // row 1 under row-major ids
  for (int r = 2; r <= m; ++r) {
    w = splice(w, r % 2 == 0 ? cyl_step_plan_even(r - 1, r, n)
                             : cyl_step_plan_odd(r - 1, r, n));
  }
  if (verify) self_check(w, generate({Family::cyl_grid, m, n}), "cylinder word");
  return w;
}

Word torus_word(int m, int n) {
  // The letters a, b, c, ... enumerate the grid column-major; vertex ids are
  // row-major, so letter t maps to row t % m + 1, column t / m + 1.
  static constexpr std::array<const char*, 2> kWords = {
      "abcdefgadhigbcaehbfdeighcfi",
      "ajbkcdaeblfcgdjahkigehfdbelcifjgkhli",
  };
  const char* text = nullptr;
  if (m == 3 && n == 3) text = kWords[0];
  if (m == 3 && n == 4) text = kWords[1];
  if (text == nullptr) {
    throw NoKnownWord("no explicit 3-uniform toroidal word is known for " + std::to_string(m) +
                      "x" + std::to_string(n) + "; use the search module");
  }
  std::vector<Letter> s;
  for (const char* c = text; *c != '\0'; ++c) {
    const int t = *c - 'a';
    const int i = t % m + 1;
    const int j = t / m + 1;
    s.push_back(grid_vertex_id(i, j, n));
  }
  Word w(std::move(s), m * n);
  self_check(w, generate({Family::toroidal_grid, m, n}), "toroidal word");
  return w;
}

bool path_word_order_a(const Word& w, int n) {
  for (int t = 2; t <= n / 2; ++t) {
    if (!occurrence_before(w, {2 * t - 3, 3}, {2 * t - 1, 2})) return false;
  }
  return true;
}

bool path_word_order_b(const Word& w, int n) {
  for (int t = 1; t <= n - 1; ++t) {
    for (int i = 1; i <= 3; ++i) {
      if (!occurrence_before(w, {t - 1, i}, {t, i})) return false;
    }
  }
  return true;
}

bool cycle_word_order_1(const Word& w, int n) {
  if (w.empty() || w.at(1) != 0) return false;
  for (int i = 1; i <= 3; ++i) {
    if (!occurrence_before(w, {n - 1, i}, {n - 2, i})) return false;
  }
  return true;
}

bool od_word_order_2(const Word& w, int n) {
  return occurrence_before(w, {n - 3, 1}, {n - 1, 2});
}

bool ev_word_order_2(const Word& w, int n) {
  for (int j = 1; j <= n - 1; ++j) {
    if (!occurrence_before(w, {j, 2}, {j - 1, 3})) return false;
  }
  return true;
}

namespace {

bool occurrence_layers_ordered(const Word& w, int n, int lo, int hi) {
  // max position of any x^lo must precede min position of any x^hi
  int max_lo = 0, min_hi = w.length() + 1;
  for (int x = 0; x < n; ++x) {
    max_lo = std::max(max_lo, occurrence_position(w, {x, lo}));
    min_hi = std::min(min_hi, occurrence_position(w, {x, hi}));
  }
  return max_lo < min_hi;
}

}  // namespace

bool od_word_order_3(const Word& w, int n) { return occurrence_layers_ordered(w, n, 2, 3); }

bool ev_word_order_3(const Word& w, int n) { return occurrence_layers_ordered(w, n, 1, 2); }

std::vector<Letter> grid_row_letters(int row, int n) {
  std::vector<Letter> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) ids.push_back(grid_vertex_id(row, j, n));
  return ids;
}

}  // namespace wordrep
