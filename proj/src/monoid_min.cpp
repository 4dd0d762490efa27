#include "qm/monoid_min.hpp"

#include <limits>

#include "qm/errors.hpp"
#include "qm/group_min.hpp"

namespace qm {

namespace {

template <CoefficientDomain D>
void require_normalized_depth(const EncodedList<D>& list, std::size_t depth) {
  for (const auto& e : list)
    if (e.word.length() != depth) throw PreconditionError("list is not of constant depth");
  if (!is_normalized(list)) throw PreconditionError("list is not normalized");
}

std::vector<Letter> letters_except(const Alphabet& alphabet, int excluded) {
  std::vector<Letter> out;
  for (int l = 0; l < alphabet.letter_count(); ++l)
    if (l != excluded) out.push_back(static_cast<Letter>(l));
  return out;
}

// Position of l in the letter range that skips `excluded`.
std::size_t skip_index(Letter l, int excluded) {
  if (l == excluded) throw PreconditionError("word is not reduced around the stem");
  return excluded >= 0 && l > excluded ? l - 1u : l;
}

Word with_front(Letter l, const Word& u) {
  Word w = u;
  w.push_front(l);
  return w;
}

Word with_back(const Word& u, Letter l) {
  Word w = u;
  w.push_back(l);
  return w;
}

// Smallest k in [0, count) minimizing cost(k); keep(k) filters candidates.
template <class Cost, class Keep>
std::size_t argmin(std::size_t count, Cost cost, Keep keep) {
  std::size_t best = count;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 0; k < count; ++k) {
    if (!keep(k)) continue;
    std::size_t c = cost(k);
    if (best == count || c < best_cost) {
      best = k;
      best_cost = c;
    }
  }
  return best;
}

template <class Cost>
std::size_t argmin(std::size_t count, Cost cost) {
  return argmin(count, cost, [](std::size_t) { return true; });
}

template <CoefficientDomain D>
MoveResult<D> minimal_verdict(EncodedList<D> list) {
  return {true, std::move(list)};
}

}  // namespace

template <CoefficientDomain D>
PruneResult<D> prune_list(EncodedList<D> list, std::size_t depth) {
  if (depth < 1) throw PreconditionError("pruning needs depth >= 1");
  require_normalized_depth(list, depth);
  const std::size_t fullness = brotherhood_fullness(list.alphabet(), depth);
  PruneResult<D> r{EncodedList<D>(list.alphabet()), EncodedList<D>(list.alphabet())};
  while (!list.empty()) {
    auto b = detach_brotherhood(list);
    if (!is_prunable(b.members, fullness)) {
      r.kept.splice_back(b.members);
      continue;
    }
    auto best = b.members.begin();
    for (auto it = b.members.begin(); it != b.members.end(); ++it)
      if (D::size(it->coeff) < D::size(best->coeff)) best = it;
    r.pruned.push_back(std::move(b.father), std::move(best->coeff));
  }
  return r;
}

template <CoefficientDomain D>
TransferMatrix<D> build_transfer_matrix(const EncodedList<D>& family, const Word& stem) {
  const Alphabet& alphabet = family.alphabet();
  int row_excluded = -1, col_excluded = -1;
  if (alphabet.is_group()) {
    if (stem.empty()) throw PreconditionError("group transfer needs a nonempty stem");
    row_excluded = alphabet.inverse(stem.front());
    col_excluded = alphabet.inverse(stem.back());
  }
  TransferMatrix<D> t(stem, letters_except(alphabet, row_excluded),
                      letters_except(alphabet, col_excluded));
  for (const auto& e : family) {
    if (e.word.length() != stem.length() + 2 || stem_view(e.word.codes()) != stem.codes())
      throw PreconditionError("stem mismatch in transfer family");
    auto& cell = t.at(skip_index(e.word.front(), row_excluded), skip_index(e.word.back(), col_excluded));
    if (!D::is_zero(cell)) throw PreconditionError("repeated word in transfer family");
    cell = e.coeff;
  }
  return t;
}

template <CoefficientDomain D>
std::optional<ColumnRowDecomposition<D>> decompose_column_row(const TransferMatrix<D>& t) {
  const std::size_t m = t.rows();
  ColumnRowDecomposition<D> dec;
  dec.pivot_row = argmin(m, [&](std::size_t i) { return t.row_size(i); });
  const std::size_t i0 = dec.pivot_row;

  for (std::size_t i = 0; i < m; ++i) {
    if (i == i0) continue;
    auto first = D::sub(t.at(i, 0), t.at(i0, 0));
    for (std::size_t j = 1; j < t.cols(); ++j)
      if (!D::equal(D::sub(t.at(i, j), t.at(i0, j)), first)) return std::nullopt;
  }

  dec.pivot_col = argmin(t.cols(), [&](std::size_t j) {
    std::size_t column = 0;
    for (std::size_t i = 0; i < m; ++i) column += D::size(t.at(i, j));
    return (m - 2) * D::size(t.at(i0, j)) + column;
  });
  const std::size_t j0 = dec.pivot_col;
  for (std::size_t i = 0; i < m; ++i)
    dec.y.push_back(i == i0 ? D::zero() : D::sub(t.at(i, j0), t.at(i0, j0)));
  for (std::size_t j = 0; j < t.cols(); ++j) dec.z.push_back(t.at(i0, j));
  return dec;
}

template <CoefficientDomain D>
MoveResult<D> transfer_and_prune(EncodedList<D> family) {
  if (family.empty()) throw PreconditionError("empty transfer family");
  const Alphabet& alphabet = family.alphabet();
  const std::size_t depth = family.front().word.length();
  if (depth < 2 || (alphabet.is_group() && depth < 3))
    throw PreconditionError("transfer needs depth >= 2 (monoid) or >= 3 (group)");
  const Word u = stem_of(family.front().word);
  const TransferMatrix<D> t = build_transfer_matrix(family, u);

  auto dec = decompose_column_row(t);
  if (!dec) return minimal_verdict(std::move(family));

  const std::size_t m = t.rows();
  const std::size_t i0 = dec->pivot_row;
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!D::is_zero(t.at(i, j))) ++nontrivial;
  const bool sparse = (m > 3 && nontrivial < 3 * m) || (m == 3 && nontrivial < 2 * m);

  EncodedList<D> out(alphabet);
  if (!sparse) {
    for (std::size_t j = 0; j < m; ++j)
      if (!D::is_zero(dec->z[j])) out.push_back(with_back(u, t.col_letter(j)), dec->z[j]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != i0 && !D::is_zero(dec->y[i])) out.push_back(with_front(t.row_letter(i), u), dec->y[i]);
    return {false, normalize_list(std::move(out))};
  }

  auto row_entries = [&](std::size_t i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (!D::is_zero(t.at(i, j))) ++c;
    return c;
  };
  const std::size_t i1 = argmin(m, row_entries);
  auto in_zero_set = [&](std::size_t j) { return D::is_zero(t.at(i1, j)); };

  for (std::size_t i = 0; i < m; ++i) {
    if (i == i1) continue;
    std::size_t j1 = argmin(m, [&](std::size_t j) { return D::size(t.at(i, j)); }, in_zero_set);
    if (!D::is_zero(t.at(i, j1))) out.push_back(with_front(t.row_letter(i), u), t.at(i, j1));
  }
  if (i0 == i1) {
    for (std::size_t j = 0; j < m; ++j)
      if (!in_zero_set(j)) out.push_back(with_back(u, t.col_letter(j)), t.at(i1, j));
  } else {
    std::size_t j0 = argmin(m, [&](std::size_t j) { return D::size(t.at(i0, j)); }, in_zero_set);
    for (std::size_t j = 0; j < m; ++j) {
      if (in_zero_set(j) || D::equal(t.at(i0, j), t.at(i0, j0))) continue;
      out.push_back(with_back(u, t.col_letter(j)), D::sub(t.at(i0, j), t.at(i0, j0)));
    }
  }
  return {false, normalize_list(std::move(out))};
}

template <CoefficientDomain D>
MoveResult<D> main_processing_step(EncodedList<D> list, std::size_t depth) {
  if (depth < 2) throw PreconditionError("main step needs depth >= 2");
  const Alphabet alphabet = list.alphabet();
  const EncodedList<D> input = list;
  auto [kept, out] = prune_list(std::move(list), depth);

  if (alphabet.is_group() && depth == 2) {
    auto special = special_transfer_and_prune(std::move(kept));
    if (special.minimal) return minimal_verdict(input);
    out.splice_back(special.list);
    return {false, normalize_list(std::move(out))};
  }

  // kept is sorted, so each first-letter bucket is a contiguous run.
  std::vector<EncodedList<D>> buckets(static_cast<std::size_t>(alphabet.letter_count()),
                                      EncodedList<D>(alphabet));
  while (!kept.empty()) {
    Letter a = kept.front().word.front();
    auto last = kept.begin();
    while (last != kept.end() && last->word.front() == a) ++last;
    buckets[a].splice_back(kept, kept.begin(), last);
  }

  while (true) {
    std::string_view u;
    bool found = false;
    for (const auto& b : buckets) {
      if (b.empty()) continue;
      std::string_view s = stem_view(b.front().word.codes());
      if (!found || shortlex_compare(s, u) < 0) u = s;
      found = true;
    }
    if (!found) break;

    const int excluded = alphabet.is_group() ? alphabet.inverse(static_cast<Letter>(u.front())) : -1;
    const std::string stem(u);
    EncodedList<D> family(alphabet);
    for (std::size_t a = 0; a < buckets.size(); ++a) {
      if (static_cast<int>(a) == excluded || buckets[a].empty()) continue;
      // A related brotherhood is empty while another one is not constant.
      if (stem_view(buckets[a].front().word.codes()) != stem) return minimal_verdict(input);
      auto b = detach_brotherhood(buckets[a]);
      family.splice_back(b.members);
    }
    auto moved = transfer_and_prune(std::move(family));
    if (moved.minimal) return minimal_verdict(input);
    out.splice_back(moved.list);
  }
  return {false, normalize_list(std::move(out))};
}

template <CoefficientDomain D>
EncodedList<D> find_minimal_list(const EncodedList<D>& list, const MinimizeHooks<D>& hooks) {
  const Alphabet alphabet = list.alphabet();
  EncodedList<D> normalized = normalize_list(list);
  const int d = max_depth(normalized);
  if (d <= 0) {
    if (hooks.on_frame) hooks.on_frame(normalized);
    return normalized;
  }

  // levels[k] holds the words of length k; the normalized list is sorted by length.
  std::vector<EncodedList<D>> levels(static_cast<std::size_t>(d) + 1, EncodedList<D>(alphabet));
  while (!normalized.empty()) {
    std::size_t len = normalized.front().word.length();
    auto last = normalized.begin();
    while (last != normalized.end() && last->word.length() == len) ++last;
    levels[len].splice_back(normalized, normalized.begin(), last);
  }

  auto assemble = [&](EncodedList<D> top, std::size_t below) {
    EncodedList<D> all(alphabet);
    for (std::size_t k = 0; k < below; ++k) {
      EncodedList<D> copy = levels[k];
      all.splice_back(copy);
    }
    all.splice_back(top);
    return all;
  };
  auto frame = [&](const EncodedList<D>& top, std::size_t below) {
    if (hooks.on_frame) hooks.on_frame(assemble(top, below));
  };

  EncodedList<D> m = std::move(levels[static_cast<std::size_t>(d)]);
  frame(m, static_cast<std::size_t>(d));
  for (std::size_t i = static_cast<std::size_t>(d); i >= 2; --i) {
    if (m.empty()) {
      m = std::move(levels[i - 1]);
      continue;
    }
    const std::size_t in_total = m.total_size(), in_coeff = m.coeff_size();
    auto step = main_processing_step(std::move(m), i);
    if (hooks.on_step)
      hooks.on_step({alphabet.mode(), alphabet.rank(), i, step.minimal, in_total, in_coeff,
                     step.minimal ? in_total : step.list.total_size()});
    if (step.minimal) return assemble(std::move(step.list), i);
    step.list.splice_back(levels[i - 1]);
    m = normalize_list(std::move(step.list));
    frame(m, i - 1);
  }

  EncodedList<D> result(alphabet);
  if (m.empty()) {
    result = std::move(levels[0]);
  } else {
    EncodedList<D> depth_one = m;
    auto pruned = prune_list(std::move(depth_one), 1);
    if (pruned.kept.empty()) {
      pruned.pruned.splice_back(levels[0]);
      result = normalize_list(std::move(pruned.pruned));
    } else {
      result = assemble(std::move(m), 1);
    }
  }
  if (hooks.on_frame) hooks.on_frame(result);
  return result;
}

template <CoefficientDomain D>
bool decide_equivalent(const EncodedList<D>& l1, const EncodedList<D>& l2) {
  return find_minimal_list(build_difference(l1, l2)).empty();
}

#define QM_INSTANTIATE_MIN(D)                                                                  \
  template PruneResult<D> prune_list<D>(EncodedList<D>, std::size_t);                          \
  template TransferMatrix<D> build_transfer_matrix<D>(const EncodedList<D>&, const Word&);     \
  template std::optional<ColumnRowDecomposition<D>> decompose_column_row<D>(                   \
      const TransferMatrix<D>&);                                                               \
  template MoveResult<D> transfer_and_prune<D>(EncodedList<D>);                                \
  template MoveResult<D> main_processing_step<D>(EncodedList<D>, std::size_t);                 \
  template EncodedList<D> find_minimal_list<D>(const EncodedList<D>&, const MinimizeHooks<D>&); \
  template bool decide_equivalent<D>(const EncodedList<D>&, const EncodedList<D>&);

QM_INSTANTIATE_MIN(IntDomain)
QM_INSTANTIATE_MIN(RatDomain)

}  // namespace qm
