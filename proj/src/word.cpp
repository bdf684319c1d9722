#include "wordrep/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace wordrep {

namespace {

std::string letter_str(Letter x) { return std::to_string(x); }

void check_letter(int alphabet_size, Letter x) {
  if (x < 0 || x >= alphabet_size) {
    throw InvalidLetter("letter id " + letter_str(x) + " out of range for alphabet of size " +
                        std::to_string(alphabet_size));
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 0) throw InvalidInput("alphabet size must be non-negative");
  for (Letter x : letters_) check_letter(alphabet_size_, x);
}

Letter Word::at(int pos) const {
  if (pos < 1 || pos > length()) {
    throw InvalidInput("position " + std::to_string(pos) + " out of range 1.." +
                       std::to_string(length()));
  }
  return letters_[static_cast<std::size_t>(pos - 1)];
}

std::vector<int> occurrences(const Word& w, Letter x) {
  check_letter(w.alphabet_size(), x);
  std::vector<int> out;
  const auto& s = w.letters();
  for (int p = 0; p < w.length(); ++p) {
    if (s[static_cast<std::size_t>(p)] == x) out.push_back(p + 1);
  }
  return out;
}

int occurrence_position(const Word& w, const OccurrenceRef& ref) {
  check_letter(w.alphabet_size(), ref.letter);
  if (ref.index < 1) {
    throw NoSuchOccurrence("occurrence index must be positive, got " +
                           std::to_string(ref.index));
  }
  int seen = 0;
  const auto& s = w.letters();
  for (int p = 0; p < w.length(); ++p) {
    if (s[static_cast<std::size_t>(p)] == ref.letter && ++seen == ref.index) return p + 1;
  }
  throw NoSuchOccurrence("letter " + letter_str(ref.letter) + " has no occurrence " +
                         std::to_string(ref.index));
}

bool is_k_uniform(const Word& w, int k) {
  if (k < 1) throw InvalidInput("k must be a positive integer");
  std::vector<int> count(static_cast<std::size_t>(w.alphabet_size()), 0);
  for (Letter x : w.letters()) ++count[static_cast<std::size_t>(x)];
  return std::all_of(count.begin(), count.end(), [k](int c) { return c == k; });
}

bool alternates(const Word& w, Letter x, Letter y) {
  check_letter(w.alphabet_size(), x);
  check_letter(w.alphabet_size(), y);
  if (x == y) throw InvalidPair("alternation is defined for distinct letters");
  Letter last = -1;
  for (Letter c : w.letters()) {
    if (c != x && c != y) continue;
    if (c == last) return false;
    last = c;
  }
  return true;
}

namespace {

// Positions of each letter, then pairwise merge checks: O(L + V^2 k).
std::vector<std::vector<int>> position_table(const Word& w) {
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(w.alphabet_size()));
  const auto& s = w.letters();
  for (int p = 0; p < w.length(); ++p) {
    pos[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])].push_back(p + 1);
  }
  return pos;
}

bool alternates_from_positions(const std::vector<int>& px, const std::vector<int>& py) {
  std::size_t i = 0, j = 0;
  int last = -1;  // 0 = x side, 1 = y side
  while (i < px.size() || j < py.size()) {
    const bool take_x = j == py.size() || (i < px.size() && px[i] < py[j]);
    const int side = take_x ? 0 : 1;
    if (side == last) return false;
    last = side;
    if (take_x) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

Graph graph_of_word(const Word& w, std::vector<std::string> names) {
  if (w.empty()) throw InvalidInput("graph_of_word requires a non-empty word");
  const int n = w.alphabet_size();
  const auto pos = position_table(w);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (alternates_from_positions(pos[static_cast<std::size_t>(x)],
                                    pos[static_cast<std::size_t>(y)])) {
        edges.emplace_back(x, y);
      }
    }
  }
  return Graph(n, edges, std::move(names));
}

bool represents(const Word& w, const Graph& g) {
  if (w.alphabet_size() != g.vertex_count()) {
    throw SizeMismatch("word alphabet size " + std::to_string(w.alphabet_size()) +
                       " != vertex count " + std::to_string(g.vertex_count()));
  }
  const auto pos = position_table(w);
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y = x + 1; y < g.vertex_count(); ++y) {
      const bool alt = alternates_from_positions(pos[static_cast<std::size_t>(x)],
                                                 pos[static_cast<std::size_t>(y)]);
      if (alt != g.adjacent(x, y)) return false;
    }
  }
  return true;
}

bool occurrence_before(const Word& w, const OccurrenceRef& a, const OccurrenceRef& b) {
  return occurrence_position(w, a) < occurrence_position(w, b);
}

std::optional<int> find_factor(const Word& w, const std::vector<OccurrenceRef>& pattern) {
  if (pattern.empty()) throw InvalidInput("find_factor requires a non-empty pattern");
  int prev = occurrence_position(w, pattern.front());
  const int start = prev;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    const int p = occurrence_position(w, pattern[i]);
    if (p != prev + 1) return std::nullopt;
    prev = p;
  }
  return start;
}

Word rotate(const Word& w, int t) {
  if (t < 0) throw InvalidInput("rotation amount must be non-negative");
  if (w.empty()) return w;
  const int len = w.length();
  const int r = t % len;
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  out.insert(out.end(), w.letters().begin() + r, w.letters().end());
  out.insert(out.end(), w.letters().begin(), w.letters().begin() + r);
  return Word(std::move(out), w.alphabet_size());
}

bool check_fact1(const Word& w, const Graph& g) {
  if (w.alphabet_size() != g.vertex_count()) {
    throw SizeMismatch("word alphabet size " + std::to_string(w.alphabet_size()) +
                       " != vertex count " + std::to_string(g.vertex_count()));
  }
  const auto pos = position_table(w);
  for (const auto& [x, y] : g.edges()) {
    const auto& px = pos[static_cast<std::size_t>(x)];
    const auto& py = pos[static_cast<std::size_t>(y)];
    const std::size_t upto = std::min(px.size(), py.size());
    for (std::size_t i = 1; i < upto; ++i) {
      if (px[i] < py[i - 1] || py[i] < px[i - 1]) return false;
    }
  }
  return true;
}

Word restrict_to_letters(const Word& w, const std::vector<Letter>& keep) {
  std::unordered_map<Letter, Letter> relabel;
  relabel.reserve(keep.size());
  for (std::size_t t = 0; t < keep.size(); ++t) {
    check_letter(w.alphabet_size(), keep[t]);
    if (!relabel.emplace(keep[t], static_cast<Letter>(t)).second) {
      throw InvalidInput("restrict_to_letters: duplicate letter " + letter_str(keep[t]));
    }
  }
  std::vector<Letter> out;
  for (Letter c : w.letters()) {
    if (auto it = relabel.find(c); it != relabel.end()) out.push_back(it->second);
  }
  return Word(std::move(out), static_cast<int>(keep.size()));
}

Word parse_word(const std::string& text, const Graph& context) {
  std::unordered_map<std::string, int> by_name;
  for (int v = 0; v < context.vertex_count(); ++v) by_name.emplace(context.name(v), v);

  std::vector<Letter> letters;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      if (auto it = by_name.find(tok); it != by_name.end()) {
        letters.push_back(it->second);
        continue;
      }
      const bool digits = !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      });
      if (digits) {
        const long id = std::stol(tok);
        if (id < 1 || id > context.vertex_count()) {
          throw ParseError(lineno, "vertex id " + tok + " out of range 1.." +
                                       std::to_string(context.vertex_count()));
        }
        letters.push_back(static_cast<Letter>(id - 1));
        continue;
      }
      throw ParseError(lineno, "unknown vertex name '" + tok + "'");
    }
  }
  if (letters.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "file contains no word");
  return Word(std::move(letters), context.vertex_count());
}

std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != w.alphabet_size()) {
    throw SizeMismatch("naming map size " + std::to_string(names.size()) +
                       " != alphabet size " + std::to_string(w.alphabet_size()));
  }
  std::string out;
  for (int p = 0; p < w.length(); ++p) {
    if (p > 0) out += ' ';
    out += names[static_cast<std::size_t>(w.letters()[static_cast<std::size_t>(p)])];
  }
  out += '\n';
  return out;
}

}  // namespace wordrep
