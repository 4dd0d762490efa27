#include "qm/words.hpp"

#include <algorithm>

#include "qm/errors.hpp"

namespace qm {

std::string_view mode_name(Mode mode) { return mode == Mode::monoid ? "monoid" : "group"; }

Alphabet::Alphabet(Mode mode, int rank) : mode_(mode), rank_(rank) {
  if (rank < 2 || rank > 26) throw PreconditionError("alphabet rank must be in 2..26");
}

char Alphabet::letter_name(Letter l) const {
  if (!is_group()) return static_cast<char>('a' + l);
  char base = static_cast<char>((l & 1) != 0 ? 'A' : 'a');
  return static_cast<char>(base + (l >> 1));
}

std::optional<Letter> Alphabet::letter_from_name(char c) const {
  if (c >= 'a' && c < 'a' + rank_) {
    int gen = c - 'a';
    return static_cast<Letter>(is_group() ? 2 * gen : gen);
  }
  if (is_group() && c >= 'A' && c < 'A' + rank_) return static_cast<Letter>(2 * (c - 'A') + 1);
  return std::nullopt;
}

std::strong_ordering shortlex_compare(std::string_view w1, std::string_view w2) {
  if (w1.size() != w2.size()) return w1.size() <=> w2.size();
  int c = w1.compare(w2);
  return c <=> 0;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text == "1") return {};
  if (text.empty()) throw ParseError("empty word");
  std::string codes;
  codes.reserve(text.size());
  for (char c : text) {
    auto l = alphabet.letter_from_name(c);
    if (!l) throw ParseError("letter '" + std::string(1, c) + "' not in alphabet");
    codes.push_back(static_cast<char>(*l));
  }
  Word w(std::move(codes));
  if (alphabet.is_group() && !is_reduced(w, alphabet))
    throw ParseError("word '" + std::string(text) + "' is not reduced");
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) out.push_back(alphabet.letter_name(w[i]));
  return out;
}

std::uint64_t count_occurrences(const Word& v, const Word& w) {
  if (v.length() > w.length()) return 0;
  if (v.length() == 0) return w.length();
  std::uint64_t count = 0;
  std::string_view hay = w.codes(), needle = v.codes();
  for (std::size_t j = 0; j + needle.size() <= hay.size(); ++j)
    if (hay.compare(j, needle.size(), needle) == 0) ++count;
  return count;
}

bool is_reduced(const Word& w, const Alphabet& alphabet) {
  if (!alphabet.is_group()) return true;
  for (std::size_t i = 1; i < w.length(); ++i)
    if (w[i] == alphabet.inverse(w[i - 1])) return false;
  return true;
}

Word invert_word(const Word& w, const Alphabet& alphabet) {
  if (!alphabet.is_group()) throw PreconditionError("inversion needs group mode");
  std::string codes(w.codes().rbegin(), w.codes().rend());
  for (char& c : codes) c = static_cast<char>(alphabet.inverse(static_cast<Letter>(c)));
  return Word(std::move(codes));
}

std::string_view stem_view(std::string_view w) {
  if (w.size() < 2) throw PreconditionError("stem needs a word of length >= 2");
  return w.substr(1, w.size() - 2);
}

Word stem_of(const Word& w) { return Word(std::string(stem_view(w.codes()))); }

std::int64_t quasimorphism_value(const Word& v, const Word& w, const Alphabet& alphabet) {
  return static_cast<std::int64_t>(count_occurrences(v, w)) -
         static_cast<std::int64_t>(count_occurrences(v, invert_word(w, alphabet)));
}

}  // namespace qm
