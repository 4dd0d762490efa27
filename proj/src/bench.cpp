#include "qm/bench.hpp"

#include <chrono>
#include <ostream>
#include <random>

#include "qm/monoid_min.hpp"

namespace qm {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t with_bits(std::mt19937_64& rng, int bits) {
  std::uint64_t top = std::uint64_t{1} << (bits - 1);
  return top | (rng() & (top - 1));
}

int geometric_bits(std::mt19937_64& rng) {
  int b = 1;
  while (b < 62 && (rng() & 1) != 0) ++b;
  return b;
}

template <CoefficientDomain D>
typename D::Code random_code(std::mt19937_64& rng) {
  Sign s = (rng() & 1) != 0 ? Sign::plus : Sign::minus;
  if constexpr (D::kind == CoeffKind::integer) {
    return IntCode(s, Natural(with_bits(rng, geometric_bits(rng))));
  } else {
    std::uint64_t den = with_bits(rng, geometric_bits(rng));
    std::uint64_t num = rng() % den;
    std::uint64_t whole = (rng() & 1) != 0 ? with_bits(rng, geometric_bits(rng)) : 0;
    if (whole == 0 && num == 0) whole = 1;
    return RatCode(s, Natural(whole), Natural(num), Natural(den));
  }
}

Word random_word(const Alphabet& alphabet, std::size_t len, std::mt19937_64& rng) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    int excluded = alphabet.is_group() && !w.empty() ? alphabet.inverse(w.back()) : -1;
    int choices = alphabet.letter_count() - (excluded >= 0 ? 1 : 0);
    int pick = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    if (excluded >= 0 && pick >= excluded) ++pick;
    w.push_back(static_cast<Letter>(pick));
  }
  return w;
}

template <CoefficientDomain D>
BenchRecord time_one(const BenchConfig& config, std::size_t size, std::size_t trial) {
  const Alphabet alphabet(config.mode, config.rank);
  const std::uint64_t seed = trial_seed(config.seed, size, trial);
  auto input = generate_collapsing_list<D>(alphabet, size, config.depth, seed);
  auto start = std::chrono::steady_clock::now();
  auto minimal = find_minimal_list(input);
  auto stop = std::chrono::steady_clock::now();
  return {config.mode,
          config.coeff,
          config.rank,
          size,
          input.total_size(),
          seed,
          static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()),
          minimal.total_size()};
}

}  // namespace

template <CoefficientDomain D>
EncodedList<D> generate_collapsing_list(const Alphabet& alphabet, std::size_t target_total,
                                        std::size_t depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EncodedList<D> out(alphabet);
  std::size_t total = 0;
  while (total < target_total) {
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, depth - 1)(rng);
    Word w = random_word(alphabet, len, rng);
    auto c = random_code<D>(rng);
    auto minus_c = D::negate(c);
    const bool left = (rng() & 1) != 0;
    int excluded = -1;
    if (alphabet.is_group() && !w.empty()) excluded = alphabet.inverse(left ? w.front() : w.back());

    total += w.length() + D::size(c);
    for (int a = 0; a < alphabet.letter_count(); ++a) {
      if (a == excluded) continue;
      Word x = w;
      if (left)
        x.push_front(static_cast<Letter>(a));
      else
        x.push_back(static_cast<Letter>(a));
      total += x.length() + D::size(minus_c);
      out.push_back(std::move(x), minus_c);
    }
    out.push_back(std::move(w), std::move(c));
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t size, std::size_t trial) {
  return mix(mix(seed) ^ mix(size) ^ (trial + 1));
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  std::vector<BenchRecord> records;
  // Trials sweep the whole ladder in turn so machine noise spreads over every size.
  for (std::size_t trial = 0; trial < config.trials; ++trial)
    for (std::size_t size : config.sizes) {
      BenchRecord r = config.coeff == CoeffKind::integer ? time_one<IntDomain>(config, size, trial)
                                                         : time_one<RatDomain>(config, size, trial);
      if (on_record) on_record(r);
      records.push_back(r);
    }
  return records;
}

void write_bench_csv_header(std::ostream& out) {
  out << "mode,coeff,n,size,input_total,seed,runtime_ns,output_size\n";
}

void write_bench_csv_row(std::ostream& out, const BenchRecord& r) {
  out << mode_name(r.mode) << ',' << (r.coeff == CoeffKind::integer ? "int" : "rat") << ','
      << r.rank << ',' << r.size << ',' << r.input_total << ',' << r.seed << ',' << r.runtime_ns
      << ',' << r.output_size << '\n';
}

template EncodedList<IntDomain> generate_collapsing_list<IntDomain>(const Alphabet&, std::size_t,
                                                                    std::size_t, std::uint64_t);
template EncodedList<RatDomain> generate_collapsing_list<RatDomain>(const Alphabet&, std::size_t,
                                                                    std::size_t, std::uint64_t);

}  // namespace qm
