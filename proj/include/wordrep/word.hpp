#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrep/errors.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

/// A word symbol. Letters are dense 0-based vertex ids; display names live
/// in the owning Graph or a separate naming map.
using Letter = int;

/// Handle for "the index-th occurrence of letter" (index is 1-based).
struct OccurrenceRef {
  Letter letter = 0;
  int index = 1;

  bool operator==(const OccurrenceRef&) const = default;
};

/// Finite sequence of letters over a dense alphabet {0, ..., alphabet_size-1}.
/// Positions are 1-based in every external-facing API, matching the x^i
/// occurrence notation. Immutable after construction.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  int alphabet_size() const noexcept { return alphabet_size_; }
  int length() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Letter at 1-based position pos.
  Letter at(int pos) const;
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
};

/// Strictly increasing 1-based positions of x in w; empty if x is absent.
std::vector<int> occurrences(const Word& w, Letter x);

/// 1-based position of the given occurrence; throws NoSuchOccurrence.
int occurrence_position(const Word& w, const OccurrenceRef& ref);

/// True iff every letter of the alphabet occurs in w exactly k times.
bool is_k_uniform(const Word& w, int k);

/// True iff the restriction of w to {x, y} has no two equal consecutive
/// symbols. A restriction with at most one symbol counts as alternating;
/// the words produced here are uniform over their full alphabet, so that
/// vacuous case never influences represents().
bool alternates(const Word& w, Letter x, Letter y);

/// Graph on w's alphabet with an edge {x, y} iff alternates(w, x, y).
Graph graph_of_word(const Word& w, std::vector<std::string> names = {});

/// True iff graph_of_word(w) has exactly g's edge set under the identity
/// correspondence of ids.
bool represents(const Word& w, const Graph& g);

/// True iff the position of a strictly precedes the position of b.
bool occurrence_before(const Word& w, const OccurrenceRef& a, const OccurrenceRef& b);

/// Start position (1-based) if the given occurrences appear contiguously in
/// w in the given order; nullopt otherwise.
std::optional<int> find_factor(const Word& w, const std::vector<OccurrenceRef>& pattern);

/// Cyclic left rotation by t positions (t >= 0).
Word rotate(const Word& w, int t);

/// For every edge xy of g and every i >= 2 up to the smaller occurrence
/// count: x^i comes after y^{i-1} and y^i after x^{i-1}.
bool check_fact1(const Word& w, const Graph& g);

/// Deletes every letter not in `keep` and relabels keep[t] -> t.
Word restrict_to_letters(const Word& w, const std::vector<Letter>& keep);

/// Word file format: whitespace-separated vertex-name tokens, one word per
/// file, lines starting with '#' ignored. Tokens are resolved against the
/// context graph's names; all-digit tokens also resolve as 1-based ids.
Word parse_word(const std::string& text, const Graph& context);

std::string word_to_text(const Word& w, const std::vector<std::string>& names);

}  // namespace wordrep
