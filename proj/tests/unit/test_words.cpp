#include <doctest.h>

#include <random>

#include "qm/errors.hpp"
#include "qm/words.hpp"
#include "support.hpp"

using namespace qm;

namespace {

const Alphabet M2(Mode::monoid, 2);
const Alphabet M3(Mode::monoid, 3);
const Alphabet F2(Mode::group, 2);

Word W(const char* s, const Alphabet& a) { return parse_word(s, a); }

bool is_prefix(const Word& w, const Word& x) {
  return w.length() <= x.length() && x.codes().substr(0, w.length()) == w.codes();
}
bool is_suffix(const Word& w, const Word& x) {
  return w.length() <= x.length() && x.codes().substr(x.length() - w.length()) == w.codes();
}

}  // namespace

TEST_CASE("occurrence counting") {
  CHECK(count_occurrences(Word(), W("aba", M2)) == 3);
  CHECK(count_occurrences(W("aa", M2), W("aaaa", M2)) == 3);
  CHECK(count_occurrences(W("ab", M2), W("ba", M2)) == 0);
  CHECK(count_occurrences(W("aB", F2), W("aBaB", F2)) == 2);
  CHECK(count_occurrences(Word(), Word()) == 0);
}

TEST_CASE("inversion and reduction") {
  CHECK(format_word(invert_word(W("abA", F2), F2), F2) == "aBA");
  CHECK(invert_word(Word(), F2).empty());
  CHECK(format_word(invert_word(W("a", F2), F2), F2) == "A");
  CHECK_FALSE(is_reduced(Word(std::string{0, 1}), F2));
  CHECK(is_reduced(W("aBa", F2), F2));
  CHECK(is_reduced(Word(), F2));
  CHECK_THROWS_AS(parse_word("aA", F2), ParseError);
  CHECK_THROWS_AS(parse_word("ad", M3), ParseError);
  CHECK_THROWS_AS(parse_word("A", M3), ParseError);
  CHECK_THROWS_AS(parse_word("", M3), ParseError);
  CHECK(parse_word("1", M3).empty());
  CHECK(format_word(Word(), M3) == "1");
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_compare(W("b", M2), W("aa", M2)) < 0);
  CHECK(shortlex_compare(W("ab", M3), W("ac", M3)) < 0);
  CHECK(shortlex_compare(W("a", F2), W("A", F2)) < 0);
  CHECK(shortlex_compare(W("A", F2), W("b", F2)) < 0);
  CHECK(shortlex_compare(W("ab", M2), W("ab", M2)) == 0);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 2000; ++k) {
    Word x = qmtest::random_word(F2, rng() % 4, rng), y = qmtest::random_word(F2, rng() % 4, rng),
         z = qmtest::random_word(F2, rng() % 4, rng);
    auto xy = shortlex_compare(x, y), yx = shortlex_compare(y, x);
    REQUIRE((xy < 0) == (yx > 0));
    REQUIRE((xy == 0) == (x == y));
    if (xy < 0 && shortlex_compare(y, z) < 0) REQUIRE(shortlex_compare(x, z) < 0);
  }
}

TEST_CASE("stems") {
  CHECK(format_word(stem_of(W("abc", M3)), M3) == "b");
  CHECK(stem_of(W("ab", M3)).empty());
  CHECK(format_word(stem_of(W("aBa", F2)), F2) == "B");
  CHECK_THROWS_AS(stem_of(W("a", M3)), PreconditionError);
}

TEST_CASE("quasimorphism values") {
  CHECK(quasimorphism_value(W("a", F2), W("aa", F2), F2) == 2);
  CHECK(quasimorphism_value(W("ab", F2), Word(), F2) == 0);
  CHECK(quasimorphism_value(W("ab", F2), W("ab", F2), F2) == 1);
  std::mt19937_64 rng(4);
  for (int k = 0; k < 1000; ++k) {
    Word v = qmtest::random_word(F2, rng() % 3 + 1, rng), w = qmtest::random_word(F2, rng() % 8, rng);
    REQUIRE(quasimorphism_value(v, invert_word(w, F2), F2) == -quasimorphism_value(v, w, F2));
  }
}

TEST_CASE("naming round trip") {
  for (int n : {2, 5, 26}) {
    for (Mode mode : {Mode::monoid, Mode::group}) {
      Alphabet a(mode, n);
      for (int l = 0; l < a.letter_count(); ++l) {
        auto back = a.letter_from_name(a.letter_name(static_cast<Letter>(l)));
        REQUIRE(back.has_value());
        REQUIRE(*back == l);
      }
    }
  }
  CHECK_THROWS(Alphabet(Mode::monoid, 1));
  CHECK_THROWS(Alphabet(Mode::group, 27));
}

TEST_CASE("monoid extension identities") {
  std::mt19937_64 rng(5);
  for (const Alphabet& a : {M2, M3}) {
    for (int k = 0; k < 3000; ++k) {
      Word w = qmtest::random_word(a, rng() % 4, rng), x = qmtest::random_word(a, rng() % 9, rng);
      std::int64_t right = static_cast<std::int64_t>(count_occurrences(w, x));
      std::int64_t left = right;
      for (int l = 0; l < a.letter_count(); ++l) {
        Word wr = w, wl = w;
        wr.push_back(static_cast<Letter>(l));
        wl.push_front(static_cast<Letter>(l));
        right -= static_cast<std::int64_t>(count_occurrences(wr, x));
        left -= static_cast<std::int64_t>(count_occurrences(wl, x));
      }
      if (w.empty()) {
        REQUIRE(right == 0);
        REQUIRE(left == 0);
      } else {
        REQUIRE(right == (is_suffix(w, x) ? 1 : 0));
        REQUIRE(left == (is_prefix(w, x) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("group extension identities") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 3000; ++k) {
    Word w = qmtest::random_word(F2, rng() % 4, rng), x = qmtest::random_word(F2, rng() % 9, rng);
    std::int64_t left = static_cast<std::int64_t>(count_occurrences(w, x)), right = left;
    for (int l = 0; l < F2.letter_count(); ++l) {
      if (!w.empty() && l != F2.inverse(w.front())) {
        Word wl = w;
        wl.push_front(static_cast<Letter>(l));
        left -= static_cast<std::int64_t>(count_occurrences(wl, x));
      }
      if (!w.empty() && l != F2.inverse(w.back())) {
        Word wr = w;
        wr.push_back(static_cast<Letter>(l));
        right -= static_cast<std::int64_t>(count_occurrences(wr, x));
      }
      if (w.empty()) {
        Word single;
        single.push_back(static_cast<Letter>(l));
        left -= static_cast<std::int64_t>(count_occurrences(single, x));
        right = left;
      }
    }
    if (w.empty()) {
      REQUIRE(left == 0);
    } else {
      REQUIRE(left == (is_prefix(w, x) ? 1 : 0));
      REQUIRE(right == (is_suffix(w, x) ? 1 : 0));
    }
    Word v = qmtest::random_word(F2, rng() % 3, rng);
    REQUIRE(count_occurrences(v, invert_word(x, F2)) == count_occurrences(invert_word(v, F2), x));
  }
}
