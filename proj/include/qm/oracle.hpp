#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qm/lists.hpp"

namespace qm {

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxDimension = 10000;

// Signed unit combination of basis words, e.g. e_w - sum_a e_{aw}.
struct Relation {
  Word word;
  bool left;
  std::vector<std::pair<std::size_t, int>> terms;  // (column, +1/-1), sorted by column
};

// All words of length <= depth (reduced in group mode), longest first,
// plus the left and right extension relations of every word shorter than depth.
class RelationBasis {
 public:
  RelationBasis(const Alphabet& alphabet, std::size_t depth);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t depth() const { return depth_; }
  std::size_t dimension() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::optional<std::size_t> column_of(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::size_t depth_;
  std::vector<Word> words_;
  std::unordered_map<std::string, std::size_t> column_;
  std::vector<Relation> relations_;
};

// Number of words of length <= depth; throws OracleTooLarge past kOracleMaxDimension.
std::size_t oracle_dimension(const Alphabet& alphabet, std::size_t depth);

RelationBasis relation_vectors(const Alphabet& alphabet, std::size_t depth);

struct OracleReduction {
  // Length of the longest word with a nonzero residual coordinate, -1 if none.
  int minimal_depth = -1;
  std::vector<mpq_class> residual;
  // target = sum_k combination[k] * relation_k + residual (filled when tracking).
  std::vector<mpq_class> combination;
};

OracleReduction reduce_against_relations(const RelationBasis& basis,
                                         const std::vector<mpq_class>& target, bool track);

mpq_class to_rational(const IntCode& x);
mpq_class to_rational(const RatCode& x);

template <CoefficientDomain D>
int oracle_minimal_depth(const EncodedList<D>& list);

template <CoefficientDomain D>
bool oracle_equivalent(const EncodedList<D>& l1, const EncodedList<D>& l2);

// Maximum of |f_L(w)| over seeded random words of length <= max_len
// (reduced in group mode); one sample always has length exactly max_len.
template <CoefficientDomain D>
mpq_class empirical_sup(const EncodedList<D>& list, std::size_t samples, std::size_t max_len,
                        std::uint64_t seed);

EncodedList<IntDomain> relation_as_list(const RelationBasis& basis, std::size_t index);

}  // namespace qm
