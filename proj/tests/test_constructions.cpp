#include "doctest.h"
#include "wordrep/check_suite.hpp"
#include "wordrep/constructions.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

using namespace wordrep;

TEST_CASE("splice basics") {
  const Word base({0, 1, 0}, 3);  // a b a over {a,b,c}
  // replace a^2 by c a
  const Word out = splice(base, {{{{0, 2}}, {2, 0}}});
  CHECK(out == Word({0, 1, 2, 0}, 3));
}

TEST_CASE("splice rejects bad plans") {
  const Word base({0, 1, 0}, 3);
  // overlapping targets: a^2 alone and the factor b^1 a^2
  CHECK_THROWS_AS(splice(base, {{{{0, 2}}, {2, 0}}, {{{1, 1}, {0, 2}}, {1, 0, 2}}}),
                  OverlappingAnchors);
  // missing occurrence
  CHECK_THROWS_AS(splice(base, {{{{0, 3}}, {0, 2}}}), AnchorNotFound);
  // non-contiguous factor: a^1 a^2 have b between them
  CHECK_THROWS_AS(splice(base, {{{{0, 1}, {0, 2}}, {0, 0, 2}}}), AnchorNotFound);
  // replacement must carry the anchor letter exactly once
  CHECK_THROWS_AS(splice(base, {{{{0, 2}}, {2, 2}}}), InvalidInput);
  CHECK_THROWS_AS(splice(base, {{{{0, 2}}, {0, 2, 0}}}), InvalidInput);
  // and must not reorder a factor's letters
  CHECK_THROWS_AS(splice(Word({0, 1}, 2), {{{{0, 1}, {1, 1}}, {1, 0}}}), InvalidInput);
}

TEST_CASE("path word") {
  CHECK(path_word(3) == Word({0, 1, 0, 2, 1, 0, 2, 1, 2}, 3));
  CHECK(path_word(1) == Word({0, 0, 0}, 1));
  CHECK(path_word(2) == Word({0, 1, 0, 1, 0, 1}, 2));
  CHECK(path_word(4).length() == 12);
  CHECK_THROWS_AS(path_word(0), InvalidSize);

  for (int n = 1; n <= 30; ++n) {
    const Word w = path_word(n);
    CHECK(is_k_uniform(w, 3));
    CHECK(represents(w, generate({Family::path, 1, n})));
  }
}

TEST_CASE("path word order laws") {
  // the instance from the 4-letter word: x4^2 after x2^3
  CHECK(occurrence_before(path_word(4), {1, 3}, {3, 2}));
  for (int n = 3; n <= 50; ++n) {
    const Word w = path_word(n);
    CHECK(path_word_order_a(w, n));
    CHECK(path_word_order_b(w, n));
  }
}

TEST_CASE("grid word small instances") {
  // hand-expanded 2x3 instance
  CHECK(grid_word(2, 3) ==
        Word({0, 1, 3, 0, 4, 3, 2, 1, 0, 5, 2, 4, 1, 3, 5, 4, 2, 5}, 6));
  // hand-expanded 2x4 instance
  CHECK(grid_word(2, 4) ==
        Word({0, 1, 4, 0, 5, 4, 2, 1, 0, 3, 6, 2, 5, 4, 7, 1, 6, 5, 3, 2, 7, 6, 3, 7}, 8));
  CHECK(grid_word(2, 4).length() == 24);
  CHECK(is_k_uniform(grid_word(2, 4), 3));

  const Word g33 = grid_word(3, 3);
  CHECK(g33.length() == 27);
  CHECK(represents(g33, generate({Family::grid, 3, 3})));

  CHECK(grid_word(1, 5) == Word(path_word(5).letters(), 5));
  CHECK_THROWS_AS(grid_word(2, 2), InvalidSize);
  CHECK_THROWS_AS(grid_word(0, 4), InvalidSize);
}

TEST_CASE("grid word sweep with structural laws") {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 3; n <= 7; ++n) {
      const Word w = grid_word(m, n);  // self-verifying
      const Graph g = generate({Family::grid, m, n});
      CHECK(is_k_uniform(w, 3));
      CHECK(represents(w, g));
      CHECK(check_fact1(w, g));
      // every row restricts to the path word
      for (int j = 1; j <= m; ++j) {
        CHECK(restrict_to_letters(w, grid_row_letters(j, n)) == path_word(n));
      }
      // newest-row factors, consumed by the next recursion step
      for (int t = 1; t <= n / 2 - 1; ++t) {
        CHECK(find_factor(w, {{grid_vertex_id(m, 2 * t + 1, n), 2},
                              {grid_vertex_id(m, 2 * t, n), 3}})
                  .has_value());
      }
      CHECK(find_factor(w, {{grid_vertex_id(m, n, n), 2}, {grid_vertex_id(m, n - 1, n), 3}})
                .has_value());
    }
  }
}

TEST_CASE("cycle seed words") {
  CHECK(od_word(4) == Word({0, 3, 1, 0, 2, 1, 3, 2, 0, 1, 3, 2}, 4));
  CHECK(ev_word(4) == Word({0, 1, 3, 2, 0, 3, 1, 0, 2, 1, 3, 2}, 4));
  CHECK_THROWS_AS(od_word(3), InvalidSize);
  CHECK_THROWS_AS(ev_word(3), InvalidSize);

  for (int n = 4; n <= 50; ++n) {
    const Word od = od_word(n);
    const Word ev = ev_word(n);
    if (n <= 20) {
      const Graph cycle = generate({Family::cycle, 1, n});
      CHECK(represents(od, cycle));
      CHECK(represents(ev, cycle));
    }
    // Ev is Od with the trailing permutation block moved to the front
    CHECK(ev == rotate(od, 2 * n));
    CHECK(cycle_word_order_1(od, n));
    CHECK(cycle_word_order_1(ev, n));
    CHECK(od_word_order_2(od, n));
    CHECK(ev_word_order_2(ev, n));
    CHECK(od_word_order_3(od, n));
    CHECK(ev_word_order_3(ev, n));
  }
}

TEST_CASE("cylinder word with three columns") {
  CHECK(cyl3_word(1) == Word({0, 1, 2, 0, 1, 2, 0, 1, 2}, 3));
  // hand-expanded 2x3 instance
  CHECK(cyl3_word(2) ==
        Word({0, 1, 2, 3, 4, 0, 1, 5, 2, 3, 0, 4, 5, 3, 1, 4, 2, 5}, 6));
  CHECK(represents(cyl3_word(2), generate({Family::prism, 2, 3})));
  CHECK_THROWS_AS(cyl3_word(0), InvalidSize);

  for (int m = 1; m <= 8; ++m) {
    const Word w = cyl3_word(m);
    const Graph g = generate({Family::cyl_grid, m, 3});
    CHECK(is_k_uniform(w, 3));
    CHECK(represents(w, g));
    CHECK(check_fact1(w, g));
  }
}

TEST_CASE("cylinder word general") {
  CHECK(cyl_word(1, 5) == Word(od_word(5).letters(), 5));
  // hand-expanded 2x4 instance
  CHECK(cyl_word(2, 4) ==
        Word({0, 3, 1, 4, 0, 2, 5, 1, 7, 3, 6, 2, 4, 7, 0, 5, 4, 1, 6, 5, 3, 7, 2, 6}, 8));
  CHECK_THROWS_AS(cyl_word(2, 2), InvalidSize);
  CHECK_THROWS_AS(cyl_word(0, 5), InvalidSize);

  const Word w34 = cyl_word(3, 4);
  CHECK(w34.length() == 36);
  CHECK(represents(w34, generate({Family::cyl_grid, 3, 4})));
  CHECK(restrict_to_letters(w34, grid_row_letters(3, 4)) == od_word(4));

  for (int m = 1; m <= 6; ++m) {
    for (int n = 4; n <= 7; ++n) {
      const Word w = cyl_word(m, n);
      const Graph g = generate({Family::cyl_grid, m, n});
      CHECK(represents(w, g));
      CHECK(check_fact1(w, g));
      // row subwords relabel to the parity-matched seed word
      for (int j = 1; j <= m; ++j) {
        CHECK(restrict_to_letters(w, grid_row_letters(j, n)) ==
              (j % 2 == 1 ? od_word(n) : ev_word(n)));
      }
    }
  }
}

TEST_CASE("toroidal constants") {
  const Word w33 = torus_word(3, 3);
  CHECK(w33.length() == 27);
  CHECK(is_k_uniform(w33, 3));
  CHECK(represents(w33, generate({Family::toroidal_grid, 3, 3})));
  // column-major renaming: the word starts a b c d e f g -> ids 0 3 6 1 4 7 2
  CHECK(std::vector<Letter>(w33.letters().begin(), w33.letters().begin() + 7) ==
        std::vector<Letter>{0, 3, 6, 1, 4, 7, 2});

  const Word w34 = torus_word(3, 4);
  CHECK(w34.length() == 36);
  CHECK(represents(w34, generate({Family::toroidal_grid, 3, 4})));

  CHECK_THROWS_AS(torus_word(3, 5), NoKnownWord);
  CHECK_THROWS_AS(torus_word(4, 4), NoKnownWord);
}

TEST_CASE("a corrupted word is flagged by the suite checks") {
  Word good = grid_word(3, 3);
  auto letters = good.letters();
  std::swap(letters[2], letters[11]);
  const Word bad(letters, good.alphabet_size());
  const CheckRecord rec = verify_grid_word_record(bad, 3, 3);
  CHECK(rec.status == CheckStatus::fail);
  CHECK(rec.anchor == "is 3-representable for every n ≥ 3");
  CHECK(verify_grid_word_record(good, 3, 3).status == CheckStatus::pass);

  Word cyl_good = cyl_word(3, 4);
  auto cyl_letters = cyl_good.letters();
  std::swap(cyl_letters[0], cyl_letters[35]);
  CHECK(verify_cyl_word_record(Word(cyl_letters, 12), 3, 4).status == CheckStatus::fail);
}
