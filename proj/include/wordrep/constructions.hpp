#pragma once

#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// One occurrence-targeted substitution: the anchor (a single occurrence or
/// a contiguous factor of occurrences in the base word) is replaced by
/// `replacement`. The replacement must contain each anchor letter exactly
/// once, in the anchor's relative order; those positions are where the
/// anchored occurrences end up after the splice.
struct Substitution {
  std::vector<OccurrenceRef> anchor;
  std::vector<Letter> replacement;
};

using SubstitutionPlan = std::vector<Substitution>;

/// Applies all substitutions simultaneously. Anchors are resolved against
/// occurrence indices of the pre-substitution base word and must be pairwise
/// disjoint.
Word splice(const Word& base, const SubstitutionPlan& plan);

/// 3-uniform representant of the path P_n:
///   x1 x2 x1 x3 x2 x1 x4 x3 x2 ... xn x_{n-1} x_{n-2} xn x_{n-1} xn.
/// For n = 1 this degenerates to x1 x1 x1 and for n = 2 to (x1 x2)^3.
Word path_word(int n);

/// 3-uniform representant of the m x n grid (n >= 3), built row by row from
/// path_word via the occurrence splice rules. Letters are row-major grid ids.
/// Self-verifies against the generated grid unless verify is false.
Word grid_word(int m, int n, bool verify = true);

/// The two 3-uniform cycle representants used as row seeds (n >= 4):
///   Od = x1 xn x2 x1 x3 x2 ... x_{n-1} x_{n-2} xn x_{n-1} | x1 ... x_{n-2} xn x_{n-1}
///   Ev = the trailing permutation of Od moved to the front.
Word od_word(int n);
Word ev_word(int n);

/// 3-uniform representant of the cylindrical grid with 3 columns (m >= 1).
Word cyl3_word(int m, bool verify = true);

/// 3-uniform representant of the m x n cylindrical grid (n >= 3; n = 3
/// dispatches to cyl3_word). Row seeds alternate between Od and Ev.
Word cyl_word(int m, int n, bool verify = true);

/// Known explicit 3-uniform toroidal representants; only (3,3) and (3,4)
/// exist. Letters map column-major onto row-major grid ids. Other sizes
/// throw NoKnownWord (use the search module instead).
Word torus_word(int m, int n);

// Order predicates on the constructed words, used by the verification
// suites. All positions follow the x^i occurrence notation.

/// In path_word(n): x_{2t}^2 comes after x_{2t-2}^3 for t = 2..floor(n/2).
bool path_word_order_a(const Word& w, int n);
/// In path_word(n): x_t^i comes before x_{t+1}^i for all t < n, i = 1..3.
bool path_word_order_b(const Word& w, int n);
/// Od/Ev both start with x1 and have x_n^i before x_{n-1}^i for i = 1..3.
bool cycle_word_order_1(const Word& w, int n);
/// In Od: x_{n-2}^1 before x_n^2.
bool od_word_order_2(const Word& w, int n);
/// In Ev: x_{j+1}^2 before x_j^3 for all j = 1..n-1.
bool ev_word_order_2(const Word& w, int n);
/// In Od: every third occurrence comes after every second occurrence.
bool od_word_order_3(const Word& w, int n);
/// In Ev: every second occurrence comes after every first occurrence.
bool ev_word_order_3(const Word& w, int n);

/// Letters of grid row `row` (1-based) in row-major order, width n.
std::vector<Letter> grid_row_letters(int row, int n);

}  // namespace wordrep
