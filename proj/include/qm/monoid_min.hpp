#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qm/lists.hpp"

namespace qm {

// The routines below serve both modes: the alphabet decides the brotherhood
// fullness and the row/column letter sets. Group depth 2 is delegated to the
// special move in group_min.hpp.

template <CoefficientDomain D>
struct PruneResult {
  EncodedList<D> kept;    // brotherhoods that were not prunable
  EncodedList<D> pruned;  // one pair per pruned brotherhood, at the father
};

template <CoefficientDomain D>
PruneResult<D> prune_list(EncodedList<D> list, std::size_t depth);

template <CoefficientDomain D>
class TransferMatrix {
 public:
  using Code = typename D::Code;

  TransferMatrix(Word stem, std::vector<Letter> row_letters, std::vector<Letter> col_letters)
      : stem_(std::move(stem)),
        row_letters_(std::move(row_letters)),
        col_letters_(std::move(col_letters)),
        cells_(row_letters_.size() * col_letters_.size()) {}

  const Word& stem() const { return stem_; }
  std::size_t rows() const { return row_letters_.size(); }
  std::size_t cols() const { return col_letters_.size(); }
  Letter row_letter(std::size_t i) const { return row_letters_[i]; }
  Letter col_letter(std::size_t j) const { return col_letters_[j]; }

  const Code& at(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
  Code& at(std::size_t i, std::size_t j) { return cells_[i * cols() + j]; }

  std::size_t row_size(std::size_t i) const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < cols(); ++j) s += D::size(at(i, j));
    return s;
  }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& c : cells_) s += D::size(c);
    return s;
  }

 private:
  Word stem_;
  std::vector<Letter> row_letters_;
  std::vector<Letter> col_letters_;
  std::vector<Code> cells_;
};

template <CoefficientDomain D>
TransferMatrix<D> build_transfer_matrix(const EncodedList<D>& family, const Word& stem);

// t_ij = y_i + z_j with y at the pivot row equal to zero.
template <CoefficientDomain D>
struct ColumnRowDecomposition {
  std::vector<typename D::Code> y;
  std::vector<typename D::Code> z;
  std::size_t pivot_row = 0;
  std::size_t pivot_col = 0;
};

// Pivot row: smallest row of minimal size. Pivot column: smallest j minimizing
// (m-2)|t_{pivot,j}| + sum_i |t_ij|. Empty when T is not a column-row-sum.
template <CoefficientDomain D>
std::optional<ColumnRowDecomposition<D>> decompose_column_row(const TransferMatrix<D>& t);

template <CoefficientDomain D>
struct MoveResult {
  bool minimal = false;
  EncodedList<D> list;
};

// Family of related non-constant brotherhoods sharing one stem, as a normalized list.
template <CoefficientDomain D>
MoveResult<D> transfer_and_prune(EncodedList<D> family);

template <CoefficientDomain D>
MoveResult<D> main_processing_step(EncodedList<D> list, std::size_t depth);

struct StepReport {
  Mode mode;
  int rank;
  std::size_t depth;
  bool minimal;
  std::size_t input_total;
  std::size_t input_coeff;
  std::size_t output_total;
};

template <CoefficientDomain D>
struct MinimizeHooks {
  std::function<void(const StepReport&)> on_step;
  // Called with the whole current list before the first step and after each step.
  std::function<void(const EncodedList<D>&)> on_frame;
};

template <CoefficientDomain D>
EncodedList<D> find_minimal_list(const EncodedList<D>& list, const MinimizeHooks<D>& hooks = {});

template <CoefficientDomain D>
bool decide_equivalent(const EncodedList<D>& l1, const EncodedList<D>& l2);

}  // namespace qm
