#pragma once

#include <cstddef>
#include <list>
#include <utility>

#include "qm/coeff.hpp"
#include "qm/words.hpp"

namespace qm {

template <CoefficientDomain D>
struct Pair {
  Word word;
  typename D::Code coeff;
};

// Doubly linked list of (word, coefficient) pairs over a fixed alphabet.
template <CoefficientDomain D>
class EncodedList {
 public:
  using Domain = D;
  using Code = typename D::Code;
  using Entry = Pair<D>;
  using Storage = std::list<Entry>;
  using iterator = typename Storage::iterator;
  using const_iterator = typename Storage::const_iterator;

  explicit EncodedList(Alphabet alphabet) : alphabet_(alphabet) {}

  const Alphabet& alphabet() const { return alphabet_; }

  void push_back(Word w, Code c) { entries_.push_back(Entry{std::move(w), std::move(c)}); }
  // Moves every entry of other to the end of this list.
  void splice_back(EncodedList& other) { entries_.splice(entries_.end(), other.entries_); }
  void splice_back(EncodedList& other, const_iterator first, const_iterator last) {
    entries_.splice(entries_.end(), other.entries_, first, last);
  }

  iterator begin() { return entries_.begin(); }
  iterator end() { return entries_.end(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& front() const { return entries_.front(); }

  Storage& entries() { return entries_; }
  const Storage& entries() const { return entries_; }

  std::size_t word_size() const {
    std::size_t s = 0;
    for (const auto& e : entries_) s += e.word.length();
    return s;
  }
  std::size_t coeff_size() const {
    std::size_t s = 0;
    for (const auto& e : entries_) s += D::size(e.coeff);
    return s;
  }
  std::size_t total_size() const { return word_size() + coeff_size(); }

 private:
  Alphabet alphabet_;
  Storage entries_;
};

template <CoefficientDomain D>
struct WeightedBrotherhood {
  EncodedList<D> members;
  Word father;
};

// Number of children of a vertex at the given depth in the Cayley tree.
std::size_t brotherhood_fullness(const Alphabet& alphabet, std::size_t depth);

template <CoefficientDomain D>
EncodedList<D> normalize_list(EncodedList<D> list);

template <CoefficientDomain D>
bool is_normalized(const EncodedList<D>& list);

// Removes the leading run of entries sharing the first entry's father.
template <CoefficientDomain D>
WeightedBrotherhood<D> detach_brotherhood(EncodedList<D>& list);

// Full brotherhood whose members all carry equal coefficients.
template <CoefficientDomain D>
bool is_prunable(const EncodedList<D>& members, std::size_t fullness);

template <CoefficientDomain D>
typename D::Code evaluate(const EncodedList<D>& list, const Word& w);

template <CoefficientDomain D>
EncodedList<D> build_difference(const EncodedList<D>& l1, const EncodedList<D>& l2);

template <CoefficientDomain D>
int max_depth(const EncodedList<D>& list);

}  // namespace qm
