#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qm {

enum class Mode : std::uint8_t { monoid, group };

std::string_view mode_name(Mode mode);

// Letter codes are dense indices. Monoid: generator i has code i.
// Group: generator i has code 2i and its inverse 2i+1, so a < A < b < B < ...
using Letter = std::uint8_t;

class Alphabet {
 public:
  Alphabet(Mode mode, int rank);

  Mode mode() const { return mode_; }
  bool is_group() const { return mode_ == Mode::group; }
  int rank() const { return rank_; }
  int letter_count() const { return is_group() ? 2 * rank_ : rank_; }

  Letter inverse(Letter l) const { return static_cast<Letter>(l ^ 1); }
  char letter_name(Letter l) const;
  std::optional<Letter> letter_from_name(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Mode mode_;
  int rank_;
};

// A word is a string of letter codes; the alphabet is carried by the surrounding list.
class Word {
 public:
  Word() = default;
  explicit Word(std::string codes) : codes_(std::move(codes)) {}

  std::size_t length() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(codes_[i]); }
  Letter front() const { return static_cast<Letter>(codes_.front()); }
  Letter back() const { return static_cast<Letter>(codes_.back()); }
  std::string_view codes() const { return codes_; }

  Word prefix(std::size_t len) const { return Word(codes_.substr(0, len)); }
  Word suffix(std::size_t len) const { return Word(codes_.substr(codes_.size() - len)); }
  Word father() const { return prefix(length() - 1); }
  void push_back(Letter l) { codes_.push_back(static_cast<char>(l)); }
  void push_front(Letter l) { codes_.insert(codes_.begin(), static_cast<char>(l)); }

  friend Word operator+(const Word& a, const Word& b) { return Word(a.codes_ + b.codes_); }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string codes_;
};

std::strong_ordering shortlex_compare(std::string_view w1, std::string_view w2);
inline std::strong_ordering shortlex_compare(const Word& w1, const Word& w2) {
  return shortlex_compare(w1.codes(), w2.codes());
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_compare(a, b) < 0; }
};

// "1" denotes the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

std::uint64_t count_occurrences(const Word& v, const Word& w);
bool is_reduced(const Word& w, const Alphabet& alphabet);
Word invert_word(const Word& w, const Alphabet& alphabet);
Word stem_of(const Word& w);
std::string_view stem_view(std::string_view w);
std::int64_t quasimorphism_value(const Word& v, const Word& w, const Alphabet& alphabet);

}  // namespace qm
