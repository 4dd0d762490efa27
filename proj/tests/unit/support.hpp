#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qm/lists.hpp"
#include "qm/monoid_min.hpp"

namespace qmtest {

using Entries = std::vector<std::pair<std::string, std::string>>;

template <qm::CoefficientDomain D>
qm::EncodedList<D> make(qm::Mode mode, int n, const Entries& entries) {
  qm::Alphabet alphabet(mode, n);
  qm::EncodedList<D> out(alphabet);
  for (const auto& [w, x] : entries) out.push_back(qm::parse_word(w, alphabet), D::parse(x));
  return out;
}

inline qm::EncodedList<qm::IntDomain> monoid(int n, const Entries& entries) {
  return make<qm::IntDomain>(qm::Mode::monoid, n, entries);
}

inline qm::EncodedList<qm::IntDomain> group(int n, const Entries& entries) {
  return make<qm::IntDomain>(qm::Mode::group, n, entries);
}

template <qm::CoefficientDomain D>
Entries dump(const qm::EncodedList<D>& list) {
  Entries out;
  for (const auto& e : list) out.emplace_back(qm::format_word(e.word, list.alphabet()), D::format(e.coeff));
  return out;
}

// Value of a code computed from its binary spelling, independent of the code's arithmetic.
inline mpq_class reference_value(const qm::IntCode& x) {
  std::string s = x.to_binary();
  if (s.empty()) return 0;
  mpq_class v(mpz_class(s.substr(1), 2));
  return s[0] == '-' ? mpq_class(-v) : v;
}

inline mpq_class reference_value(const qm::RatCode& x) {
  std::string s = x.to_binary();
  if (s.empty()) return 0;
  auto a = s.find('/'), b = s.find('/', a + 1);
  mpz_class k(s.substr(1, a - 1), 2), m(s.substr(a + 1, b - a - 1), 2), n(s.substr(b + 1), 2);
  mpq_class v = mpq_class(k) + mpq_class(m, n);
  v.canonicalize();
  return s[0] == '-' ? mpq_class(-v) : v;
}

inline qm::Word random_word(const qm::Alphabet& alphabet, std::size_t len, std::mt19937_64& rng) {
  qm::Word w;
  for (std::size_t k = 0; k < len; ++k) {
    int excluded = alphabet.is_group() && !w.empty() ? alphabet.inverse(w.back()) : -1;
    int choices = alphabet.letter_count() - (excluded >= 0 ? 1 : 0);
    int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    if (excluded >= 0 && pick >= excluded) ++pick;
    w.push_back(static_cast<qm::Letter>(pick));
  }
  return w;
}

// Nonzero coefficient with numerators and denominators at most 16.
template <qm::CoefficientDomain D>
typename D::Code small_code(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  qm::Sign s = pick(0, 1) == 0 ? qm::Sign::plus : qm::Sign::minus;
  if constexpr (D::kind == qm::CoeffKind::integer) {
    return qm::IntCode(s, qm::Natural(static_cast<std::uint64_t>(pick(1, 16))));
  } else {
    int den = pick(1, 16);
    int num = pick(0, den - 1);
    int whole = pick(0, 3);
    if (whole == 0 && num == 0) whole = 1;
    return qm::RatCode(s, qm::Natural(whole), qm::Natural(num), qm::Natural(den));
  }
}

// Appends c*(e_w - sum of the left or right one-letter extensions of w).
template <qm::CoefficientDomain D>
void append_relation(qm::EncodedList<D>& list, const qm::Word& w, bool left,
                     const typename D::Code& c, bool drop_one = false, std::size_t drop = 0) {
  const qm::Alphabet& alphabet = list.alphabet();
  int excluded = -1;
  if (alphabet.is_group() && !w.empty()) excluded = alphabet.inverse(left ? w.front() : w.back());
  list.push_back(w, c);
  std::size_t k = 0;
  for (int a = 0; a < alphabet.letter_count(); ++a) {
    if (a == excluded) continue;
    if (drop_one && k++ == drop) continue;
    qm::Word x = w;
    if (left)
      x.push_front(static_cast<qm::Letter>(a));
    else
      x.push_back(static_cast<qm::Letter>(a));
    list.push_back(std::move(x), D::negate(c));
  }
}

// Mixture of extension relations, near-miss relations and noise, with words of length <= depth.
template <qm::CoefficientDomain D>
qm::EncodedList<D> random_instance(const qm::Alphabet& alphabet, std::size_t depth,
                                   std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  qm::EncodedList<D> out(alphabet);
  const std::size_t kind = pick(0, 4);
  if (kind == 4) {
    std::size_t count = pick(1, 12);
    for (std::size_t k = 0; k < count; ++k)
      out.push_back(random_word(alphabet, pick(0, depth), rng), small_code<D>(rng));
    return out;
  }
  if (depth >= 1) {
    std::size_t relations = pick(1, 10);
    for (std::size_t k = 0; k < relations; ++k)
      append_relation(out, random_word(alphabet, pick(0, depth - 1), rng), pick(0, 1) == 0,
                      small_code<D>(rng));
  }
  if (kind == 1) {
    std::size_t noise = pick(1, 3);
    for (std::size_t k = 0; k < noise; ++k)
      out.push_back(random_word(alphabet, pick(0, depth), rng), small_code<D>(rng));
  } else if (kind == 2 && depth >= 1) {
    append_relation(out, random_word(alphabet, pick(0, depth - 1), rng), pick(0, 1) == 0,
                    small_code<D>(rng), true, pick(0, 1));
  } else if (kind == 3 && depth >= 1) {
    // Full constant brotherhood plus a perturbation of one member.
    qm::Word father = random_word(alphabet, pick(0, depth - 1), rng);
    auto c = small_code<D>(rng);
    for (int a = 0; a < alphabet.letter_count(); ++a) {
      if (alphabet.is_group() && !father.empty() && a == alphabet.inverse(father.back())) continue;
      qm::Word x = father;
      x.push_back(static_cast<qm::Letter>(a));
      out.push_back(std::move(x), c);
    }
    if (pick(0, 1) == 0) out.push_back(random_word(alphabet, father.length() + 1, rng), small_code<D>(rng));
  }
  return out;
}

// Size bound promised for a non-minimal main step.
inline bool step_within_bound(const qm::StepReport& r) {
  if (r.minimal) return true;
  if (r.mode == qm::Mode::group && r.depth == 2)
    return r.output_total <= r.input_coeff + 2 * static_cast<std::size_t>(r.rank);
  if (r.mode == qm::Mode::monoid && r.rank < 3) return true;
  return 9 * r.output_total <= 8 * r.input_total;
}

struct StepAudit {
  std::size_t steps = 0;
  std::size_t violations = 0;
};

template <qm::CoefficientDomain D>
qm::MinimizeHooks<D> audit_hooks(StepAudit& audit) {
  qm::MinimizeHooks<D> hooks;
  hooks.on_step = [&audit](const qm::StepReport& r) {
    ++audit.steps;
    if (!step_within_bound(r)) ++audit.violations;
  };
  return hooks;
}

}  // namespace qmtest
