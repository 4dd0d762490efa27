#include "qm/lists.hpp"

#include <algorithm>
#include <vector>

#include "qm/errors.hpp"

namespace qm {

std::size_t brotherhood_fullness(const Alphabet& alphabet, std::size_t depth) {
  if (depth == 0) throw PreconditionError("the root has no brotherhood");
  auto n = static_cast<std::size_t>(alphabet.rank());
  if (!alphabet.is_group()) return n;
  return depth == 1 ? 2 * n : 2 * n - 1;
}

template <CoefficientDomain D>
EncodedList<D> normalize_list(EncodedList<D> list) {
  using Entry = typename EncodedList<D>::Entry;
  // Entries are moved through contiguous buffers so every radix pass streams memory.
  std::vector<std::vector<Entry>> by_length;
  for (auto& e : list.entries()) {
    std::size_t len = e.word.length();
    if (by_length.size() <= len) by_length.resize(len + 1);
    by_length[len].push_back(std::move(e));
  }
  list.entries().clear();

  const std::size_t letters = static_cast<std::size_t>(list.alphabet().letter_count());
  std::vector<std::size_t> offset(letters + 1);
  std::vector<Entry> scratch;
  EncodedList<D> out(list.alphabet());
  for (std::size_t len = 0; len < by_length.size(); ++len) {
    std::vector<Entry>& group = by_length[len];
    if (group.empty()) continue;
    for (std::size_t pos = len; pos-- > 0;) {
      std::fill(offset.begin(), offset.end(), 0);
      for (const auto& e : group) ++offset[static_cast<std::size_t>(e.word[pos]) + 1];
      for (std::size_t k = 1; k <= letters; ++k) offset[k] += offset[k - 1];
      scratch.resize(group.size());
      for (auto& e : group) scratch[offset[e.word[pos]]++] = std::move(e);
      group.swap(scratch);
    }
    for (std::size_t i = 0; i < group.size();) {
      std::size_t j = i + 1;
      typename D::Code sum = std::move(group[i].coeff);
      for (; j < group.size() && group[j].word == group[i].word; ++j) sum = D::add(sum, group[j].coeff);
      if (!D::is_zero(sum)) out.push_back(std::move(group[i].word), std::move(sum));
      i = j;
    }
    std::vector<Entry>().swap(group);
  }
  return out;
}

template <CoefficientDomain D>
bool is_normalized(const EncodedList<D>& list) {
  const Word* prev = nullptr;
  for (const auto& e : list) {
    if (D::is_zero(e.coeff)) return false;
    if (prev != nullptr && shortlex_compare(*prev, e.word) >= 0) return false;
    prev = &e.word;
  }
  return true;
}

template <CoefficientDomain D>
WeightedBrotherhood<D> detach_brotherhood(EncodedList<D>& list) {
  if (list.empty()) throw PreconditionError("cannot detach from an empty list");
  auto first = list.begin();
  const std::size_t len = first->word.length();
  if (len == 0) throw PreconditionError("the empty word has no brotherhood");
  WeightedBrotherhood<D> b{EncodedList<D>(list.alphabet()), first->word.father()};
  const std::string_view father = b.father.codes();
  auto last = std::next(first);
  while (last != list.end() && last->word.length() == len &&
         last->word.codes().substr(0, len - 1) == father)
    ++last;
  b.members.splice_back(list, first, last);
  return b;
}

template <CoefficientDomain D>
bool is_prunable(const EncodedList<D>& members, std::size_t fullness) {
  if (members.size() != fullness) return false;
  const auto& first = members.front().coeff;
  return std::all_of(members.begin(), members.end(),
                     [&](const auto& e) { return D::equal(e.coeff, first); });
}

template <CoefficientDomain D>
typename D::Code evaluate(const EncodedList<D>& list, const Word& w) {
  typename D::Code sum = D::zero();
  for (const auto& e : list) {
    std::uint64_t count = count_occurrences(e.word, w);
    if (count != 0) sum = D::add(sum, D::scale(e.coeff, count));
  }
  return sum;
}

template <CoefficientDomain D>
EncodedList<D> build_difference(const EncodedList<D>& l1, const EncodedList<D>& l2) {
  if (!(l1.alphabet() == l2.alphabet())) throw PreconditionError("lists use different alphabets");
  EncodedList<D> out = l1;
  for (const auto& e : l2) out.push_back(e.word, D::negate(e.coeff));
  return normalize_list(std::move(out));
}

template <CoefficientDomain D>
int max_depth(const EncodedList<D>& list) {
  int depth = -1;
  for (const auto& e : list)
    if (!D::is_zero(e.coeff)) depth = std::max(depth, static_cast<int>(e.word.length()));
  return depth;
}

#define QM_INSTANTIATE_LISTS(D)                                                   \
  template EncodedList<D> normalize_list<D>(EncodedList<D>);                      \
  template bool is_normalized<D>(const EncodedList<D>&);                          \
  template WeightedBrotherhood<D> detach_brotherhood<D>(EncodedList<D>&);         \
  template bool is_prunable<D>(const EncodedList<D>&, std::size_t);               \
  template D::Code evaluate<D>(const EncodedList<D>&, const Word&);               \
  template EncodedList<D> build_difference<D>(const EncodedList<D>&, const EncodedList<D>&); \
  template int max_depth<D>(const EncodedList<D>&);

QM_INSTANTIATE_LISTS(IntDomain)
QM_INSTANTIATE_LISTS(RatDomain)

}  // namespace qm
