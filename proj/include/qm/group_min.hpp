#pragma once

#include <vector>

#include "qm/monoid_min.hpp"

namespace qm {

// Coefficients of all reduced length-2 words, indexed by letter codes.
template <CoefficientDomain D>
class SpecialTransferMatrix {
 public:
  using Code = typename D::Code;

  explicit SpecialTransferMatrix(const Alphabet& alphabet)
      : letters_(static_cast<std::size_t>(alphabet.letter_count())), cells_(letters_ * letters_) {}

  std::size_t letters() const { return letters_; }
  const Code& at(Letter first, Letter last) const { return cells_[first * letters_ + last]; }
  Code& at(Letter first, Letter last) { return cells_[first * letters_ + last]; }

 private:
  std::size_t letters_;
  std::vector<Code> cells_;
};

template <CoefficientDomain D>
SpecialTransferMatrix<D> build_special_transfer_matrix(const EncodedList<D>& list);

// Depth-2 move with special letter a. Input: normalized group list of constant depth 2.
template <CoefficientDomain D>
MoveResult<D> special_transfer_and_prune(EncodedList<D> list);

template <CoefficientDomain D>
bool is_antisymmetric(const EncodedList<D>& list);

// Throws PreconditionError unless both lists are antisymmetric group lists.
template <CoefficientDomain D>
bool decide_cohomologous(const EncodedList<D>& l1, const EncodedList<D>& l2);

// Group-mode entry points; they reject monoid lists.
template <CoefficientDomain D>
PruneResult<D> prune_list_group(EncodedList<D> list, std::size_t depth);
template <CoefficientDomain D>
MoveResult<D> transfer_and_prune_group(EncodedList<D> family);
template <CoefficientDomain D>
MoveResult<D> main_processing_step_group(EncodedList<D> list, std::size_t depth);
template <CoefficientDomain D>
EncodedList<D> find_minimal_list_group(const EncodedList<D>& list,
                                       const MinimizeHooks<D>& hooks = {});
template <CoefficientDomain D>
bool decide_equivalent_group(const EncodedList<D>& l1, const EncodedList<D>& l2);

}  // namespace qm
