#include "qm/group_min.hpp"

#include <unordered_map>

#include "qm/errors.hpp"

namespace qm {

namespace {

void require_group(const Alphabet& alphabet) {
  if (!alphabet.is_group()) throw PreconditionError("operation needs a group list");
}

}  // namespace

template <CoefficientDomain D>
SpecialTransferMatrix<D> build_special_transfer_matrix(const EncodedList<D>& list) {
  require_group(list.alphabet());
  SpecialTransferMatrix<D> t(list.alphabet());
  for (const auto& e : list) {
    if (e.word.length() != 2) throw PreconditionError("special transfer needs depth 2");
    auto& cell = t.at(e.word[0], e.word[1]);
    if (!D::is_zero(cell)) throw PreconditionError("repeated word in special transfer");
    cell = e.coeff;
  }
  return t;
}

template <CoefficientDomain D>
MoveResult<D> special_transfer_and_prune(EncodedList<D> list) {
  const Alphabet& alphabet = list.alphabet();
  if (!is_normalized(list)) throw PreconditionError("list is not normalized");
  const auto t = build_special_transfer_matrix(list);
  const auto letters = static_cast<Letter>(alphabet.letter_count());
  const Letter b = 0;
  const Letter b_inv = alphabet.inverse(b);

  // Fit t(x,y) = r(x) + c(y) on reduced pairs with r(b) = 0.
  std::vector<typename D::Code> r(letters, D::zero()), c(letters, D::zero());
  for (Letter y = 0; y < letters; ++y)
    if (y != b_inv) c[y] = t.at(b, y);
  auto pick = [&](Letter x) {
    for (Letter y = 0; y < letters; ++y)
      if (y != b_inv && y != alphabet.inverse(x)) return y;
    return b_inv;
  };
  for (Letter x = 0; x < letters; ++x)
    if (x != b) r[x] = D::sub(t.at(x, pick(x)), c[pick(x)]);
  const Letter x0 = b == 0 ? 1 : 0;
  c[b_inv] = D::sub(t.at(x0, b_inv), r[x0]);
  for (Letter x = 0; x < letters; ++x)
    for (Letter y = 0; y < letters; ++y) {
      if (y == alphabet.inverse(x)) continue;
      if (!D::equal(t.at(x, y), D::add(r[x], c[y]))) return {true, std::move(list)};
    }

  EncodedList<D> out(alphabet);
  for (Letter x = 0; x < letters; ++x)
    if (!D::is_zero(t.at(x, x))) out.push_back(Word(std::string(1, static_cast<char>(x))), t.at(x, x));
  return {false, normalize_list(std::move(out))};
}

template <CoefficientDomain D>
bool is_antisymmetric(const EncodedList<D>& list) {
  require_group(list.alphabet());
  const EncodedList<D> n = normalize_list(list);
  std::unordered_map<std::string_view, const typename D::Code*> coeff;
  for (const auto& e : n) coeff.emplace(e.word.codes(), &e.coeff);
  for (const auto& e : n) {
    Word inv = invert_word(e.word, n.alphabet());
    auto it = coeff.find(inv.codes());
    if (it == coeff.end() || !D::equal(*it->second, D::negate(e.coeff))) return false;
  }
  return true;
}

template <CoefficientDomain D>
bool decide_cohomologous(const EncodedList<D>& l1, const EncodedList<D>& l2) {
  require_group(l1.alphabet());
  if (!is_antisymmetric(l1) || !is_antisymmetric(l2))
    throw PreconditionError("cohomology needs antisymmetric lists");
  return max_depth(find_minimal_list(build_difference(l1, l2))) <= 1;
}

template <CoefficientDomain D>
PruneResult<D> prune_list_group(EncodedList<D> list, std::size_t depth) {
  require_group(list.alphabet());
  return prune_list(std::move(list), depth);
}

template <CoefficientDomain D>
MoveResult<D> transfer_and_prune_group(EncodedList<D> family) {
  require_group(family.alphabet());
  return transfer_and_prune(std::move(family));
}

template <CoefficientDomain D>
MoveResult<D> main_processing_step_group(EncodedList<D> list, std::size_t depth) {
  require_group(list.alphabet());
  return main_processing_step(std::move(list), depth);
}

template <CoefficientDomain D>
EncodedList<D> find_minimal_list_group(const EncodedList<D>& list, const MinimizeHooks<D>& hooks) {
  require_group(list.alphabet());
  return find_minimal_list(list, hooks);
}

template <CoefficientDomain D>
bool decide_equivalent_group(const EncodedList<D>& l1, const EncodedList<D>& l2) {
  require_group(l1.alphabet());
  return decide_equivalent(l1, l2);
}

#define QM_INSTANTIATE_GROUP(D)                                                          \
  template SpecialTransferMatrix<D> build_special_transfer_matrix<D>(const EncodedList<D>&); \
  template MoveResult<D> special_transfer_and_prune<D>(EncodedList<D>);                  \
  template bool is_antisymmetric<D>(const EncodedList<D>&);                              \
  template bool decide_cohomologous<D>(const EncodedList<D>&, const EncodedList<D>&);    \
  template PruneResult<D> prune_list_group<D>(EncodedList<D>, std::size_t);              \
  template MoveResult<D> transfer_and_prune_group<D>(EncodedList<D>);                    \
  template MoveResult<D> main_processing_step_group<D>(EncodedList<D>, std::size_t);     \
  template EncodedList<D> find_minimal_list_group<D>(const EncodedList<D>&,              \
                                                     const MinimizeHooks<D>&);           \
  template bool decide_equivalent_group<D>(const EncodedList<D>&, const EncodedList<D>&);

QM_INSTANTIATE_GROUP(IntDomain)
QM_INSTANTIATE_GROUP(RatDomain)

}  // namespace qm
