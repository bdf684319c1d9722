#pragma once

#include "wordrep/report.hpp"
#include "wordrep/search.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct CheckSuiteOptions {
  /// Upper bound for the construction sweeps (rows and columns).
  int max_size = 12;
  /// Budgets for the exhaustion legs.
  Lemma2Options lemma2;
};

/// Record for one constructed grid word: 3-uniformity, representation, the
/// row-subword and top-row factor laws, and the occurrence-order fact on
/// edges. Exposed so a corrupted word can be fed through the same check.
CheckRecord verify_grid_word_record(const Word& w, int m, int n);

/// Same for a cylindrical word (no factor law; row subwords relabel to the
/// cycle seed words).
CheckRecord verify_cyl_word_record(const Word& w, int m, int n);

/// Runs the whole claim-verification suite: construction sweeps over both
/// orientations, structural laws, seed-word order properties, the explicit
/// toroidal constants, the 3x3 grid k=2 exhaustion, and the known-value
/// controls. Failures become fail records; interrupted exhaustions become
/// inconclusive records.
Report run_check_suite(const CheckSuiteOptions& opt = {});

}  // namespace wordrep
