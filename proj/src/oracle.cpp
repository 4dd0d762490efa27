#include "qm/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <tuple>

#include "qm/errors.hpp"

namespace qm {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;

// a - f*b over sorted sparse rows.
SparseRow axpy(const SparseRow& a, const mpq_class& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      mpq_class v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale_row(SparseRow& row, const mpq_class& f) {
  for (auto& [col, v] : row) v *= f;
}

struct Echelon {
  std::vector<std::optional<SparseRow>> pivot;   // by leading column
  std::vector<SparseRow> combination;            // by leading column, over relation ids
};

Echelon build_echelon(const RelationBasis& basis) {
  Echelon e;
  e.pivot.resize(basis.dimension());
  e.combination.resize(basis.dimension());
  const auto& rels = basis.relations();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    SparseRow row;
    for (auto [col, sign] : rels[k].terms) row.emplace_back(col, mpq_class(sign));
    SparseRow combo{{k, mpq_class(1)}};
    while (!row.empty() && e.pivot[row.front().first]) {
      std::size_t lead = row.front().first;
      mpq_class f = row.front().second;
      row = axpy(row, f, *e.pivot[lead]);
      combo = axpy(combo, f, e.combination[lead]);
    }
    if (row.empty()) continue;
    mpq_class inv = 1 / row.front().second;
    scale_row(row, inv);
    scale_row(combo, inv);
    std::size_t lead = row.front().first;
    e.pivot[lead] = std::move(row);
    e.combination[lead] = std::move(combo);
  }
  return e;
}

const Echelon& echelon_for(const RelationBasis& basis) {
  static std::mutex mutex;
  static std::map<std::tuple<Mode, int, std::size_t>, std::unique_ptr<Echelon>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(basis.alphabet().mode(), basis.alphabet().rank(), basis.depth());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Echelon>(build_echelon(basis))).first;
  return *it->second;
}

const RelationBasis& basis_for(const Alphabet& alphabet, std::size_t depth) {
  static std::mutex mutex;
  static std::map<std::tuple<Mode, int, std::size_t>, std::unique_ptr<RelationBasis>> cache;
  oracle_dimension(alphabet, depth);
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(alphabet.mode(), alphabet.rank(), depth);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<RelationBasis>(alphabet, depth)).first;
  return *it->second;
}

std::vector<Letter> extensions(const Alphabet& alphabet, int excluded) {
  std::vector<Letter> out;
  for (int l = 0; l < alphabet.letter_count(); ++l)
    if (l != excluded) out.push_back(static_cast<Letter>(l));
  return out;
}

std::uint64_t occurrences(std::string_view v, std::string_view w) {
  if (v.empty()) return w.size();
  std::uint64_t c = 0;
  for (std::size_t j = 0; j + v.size() <= w.size(); ++j)
    if (w.substr(j, v.size()) == v) ++c;
  return c;
}

template <CoefficientDomain D>
void accumulate(std::vector<mpq_class>& target, const RelationBasis& basis,
                const EncodedList<D>& list, int sign) {
  for (const auto& e : list) {
    auto col = basis.column_of(e.word);
    if (!col) throw PreconditionError("word outside the oracle basis");
    target[*col] += sign * to_rational(e.coeff);
  }
}

template <CoefficientDomain D>
std::size_t longest_word(const EncodedList<D>& list) {
  std::size_t len = 0;
  for (const auto& e : list) len = std::max(len, e.word.length());
  return len;
}

template <CoefficientDomain D>
int minimal_depth_of(const std::vector<std::pair<const EncodedList<D>*, int>>& parts) {
  const Alphabet& alphabet = parts.front().first->alphabet();
  bool any = false;
  std::size_t depth = 0;
  for (auto [list, sign] : parts) {
    if (!(list->alphabet() == alphabet)) throw PreconditionError("lists use different alphabets");
    any = any || !list->empty();
    depth = std::max(depth, longest_word(*list));
  }
  if (!any) return -1;
  const RelationBasis& basis = basis_for(alphabet, depth);
  std::vector<mpq_class> target(basis.dimension());
  for (auto [list, sign] : parts) accumulate(target, basis, *list, sign);
  return reduce_against_relations(basis, target, false).minimal_depth;
}

}  // namespace

std::size_t oracle_dimension(const Alphabet& alphabet, std::size_t depth) {
  std::size_t total = 1, level = 1;
  for (std::size_t k = 1; k <= depth; ++k) {
    std::size_t branch = alphabet.is_group() && k > 1 ? alphabet.letter_count() - 1
                                                      : alphabet.letter_count();
    level *= branch;
    total += level;
    if (total > kOracleMaxDimension)
      throw OracleTooLarge("oracle dimension exceeds " + std::to_string(kOracleMaxDimension) +
                           " words at depth " + std::to_string(depth));
  }
  return total;
}

RelationBasis::RelationBasis(const Alphabet& alphabet, std::size_t depth)
    : alphabet_(alphabet), depth_(depth) {
  oracle_dimension(alphabet, depth);
  std::vector<std::vector<Word>> levels{{Word{}}};
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<Word> next;
    for (const Word& w : levels.back())
      for (Letter a : extensions(alphabet, alphabet.is_group() && !w.empty()
                                               ? alphabet.inverse(w.back())
                                               : -1)) {
        Word x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    levels.push_back(std::move(next));
  }
  for (std::size_t k = depth + 1; k-- > 0;)
    for (Word& w : levels[k]) {
      column_.emplace(std::string(w.codes()), words_.size());
      words_.push_back(std::move(w));
    }

  auto add_relation = [&](const Word& w, bool left, const std::vector<Letter>& letters) {
    Relation r{w, left, {}};
    r.terms.emplace_back(column_.at(std::string(w.codes())), 1);
    for (Letter a : letters) {
      Word x = w;
      if (left)
        x.push_front(a);
      else
        x.push_back(a);
      r.terms.emplace_back(column_.at(std::string(x.codes())), -1);
    }
    std::sort(r.terms.begin(), r.terms.end());
    relations_.push_back(std::move(r));
  };
  for (std::size_t k = 0; k + 1 <= depth; ++k)
    for (const Word& w : words_) {
      if (w.length() != k) continue;
      if (w.empty()) {
        add_relation(w, true, extensions(alphabet, -1));
        continue;
      }
      const bool group = alphabet.is_group();
      add_relation(w, true, extensions(alphabet, group ? alphabet.inverse(w.front()) : -1));
      add_relation(w, false, extensions(alphabet, group ? alphabet.inverse(w.back()) : -1));
    }
}

std::optional<std::size_t> RelationBasis::column_of(const Word& w) const {
  auto it = column_.find(std::string(w.codes()));
  if (it == column_.end()) return std::nullopt;
  return it->second;
}

RelationBasis relation_vectors(const Alphabet& alphabet, std::size_t depth) {
  return RelationBasis(alphabet, depth);
}

OracleReduction reduce_against_relations(const RelationBasis& basis,
                                         const std::vector<mpq_class>& target, bool track) {
  const Echelon& e = echelon_for(basis);
  OracleReduction r;
  r.residual = target;
  if (track) r.combination.assign(basis.relations().size(), mpq_class(0));
  for (std::size_t c = 0; c < basis.dimension(); ++c) {
    if (r.residual[c] == 0 || !e.pivot[c]) continue;
    mpq_class f = r.residual[c];
    for (const auto& [col, v] : *e.pivot[c]) r.residual[col] -= f * v;
    if (track)
      for (const auto& [k, v] : e.combination[c]) r.combination[k] += f * v;
  }
  for (std::size_t c = 0; c < basis.dimension(); ++c)
    if (r.residual[c] != 0) {
      r.minimal_depth = static_cast<int>(basis.words()[c].length());
      break;
    }
  return r;
}

mpq_class to_rational(const IntCode& x) {
  mpz_class z = x.magnitude().value();
  if (!x.empty() && x.sign() == Sign::minus) z = -z;
  return mpq_class(z);
}

mpq_class to_rational(const RatCode& x) {
  if (x.empty()) return 0;
  auto nat = [](const Natural& n) { return to_rational(IntCode(Sign::plus, n)); };
  mpq_class v = nat(x.whole()) + nat(x.numerator()) / nat(x.denominator());
  v.canonicalize();
  return x.sign() == Sign::minus ? mpq_class(-v) : v;
}

template <CoefficientDomain D>
int oracle_minimal_depth(const EncodedList<D>& list) {
  return minimal_depth_of<D>({{&list, 1}});
}

template <CoefficientDomain D>
bool oracle_equivalent(const EncodedList<D>& l1, const EncodedList<D>& l2) {
  return minimal_depth_of<D>({{&l1, 1}, {&l2, -1}}) == -1;
}

template <CoefficientDomain D>
mpq_class empirical_sup(const EncodedList<D>& list, std::size_t samples, std::size_t max_len,
                        std::uint64_t seed) {
  const Alphabet& alphabet = list.alphabet();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::string, mpq_class>> terms;
  for (const auto& e : list) terms.emplace_back(std::string(e.word.codes()), to_rational(e.coeff));

  mpq_class best = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t len = s == 0 ? max_len
                             : std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    std::string w;
    for (std::size_t k = 0; k < len; ++k) {
      int excluded = alphabet.is_group() && !w.empty()
                         ? alphabet.inverse(static_cast<Letter>(w.back()))
                         : -1;
      int choices = alphabet.letter_count() - (excluded >= 0 ? 1 : 0);
      int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
      if (excluded >= 0 && pick >= excluded) ++pick;
      w.push_back(static_cast<char>(pick));
    }
    mpq_class value = 0;
    for (const auto& [v, x] : terms) value += x * static_cast<unsigned long>(occurrences(v, w));
    if (abs(value) > best) best = abs(value);
  }
  return best;
}

EncodedList<IntDomain> relation_as_list(const RelationBasis& basis, std::size_t index) {
  EncodedList<IntDomain> out(basis.alphabet());
  for (auto [col, sign] : basis.relations().at(index).terms)
    out.push_back(basis.words()[col], IntCode::from_int(sign));
  return out;
}

#define QM_INSTANTIATE_ORACLE(D)                                                       \
  template int oracle_minimal_depth<D>(const EncodedList<D>&);                         \
  template bool oracle_equivalent<D>(const EncodedList<D>&, const EncodedList<D>&);    \
  template mpq_class empirical_sup<D>(const EncodedList<D>&, std::size_t, std::size_t, \
                                      std::uint64_t);

QM_INSTANTIATE_ORACLE(IntDomain)
QM_INSTANTIATE_ORACLE(RatDomain)

}  // namespace qm
