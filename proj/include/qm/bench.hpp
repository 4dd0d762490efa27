#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qm/lists.hpp"

namespace qm {

// Sum of random left/right extension relations c*(e_w - sum_a e_{aw}) (or e_{wa})
// at words w with |w| < depth, until the total size reaches target_total.
// The result is equivalent to the empty list, so minimization walks every level.
// Lengths are uniform in [0, depth), letters uniform (reduced in group mode),
// coefficient bit sizes geometric with mean 2.
template <CoefficientDomain D>
EncodedList<D> generate_collapsing_list(const Alphabet& alphabet, std::size_t target_total,
                                        std::size_t depth, std::uint64_t seed);

struct BenchConfig {
  Mode mode = Mode::monoid;
  CoeffKind coeff = CoeffKind::integer;
  int rank = 3;
  std::vector<std::size_t> sizes;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::size_t depth = 14;
};

struct BenchRecord {
  Mode mode;
  CoeffKind coeff;
  int rank;
  std::size_t size;         // requested total size
  std::size_t input_total;  // generated total size
  std::uint64_t seed;       // per-trial generator seed
  std::uint64_t runtime_ns;
  std::size_t output_size;
};

std::uint64_t trial_seed(std::uint64_t seed, std::size_t size, std::size_t trial);

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

void write_bench_csv_header(std::ostream& out);
void write_bench_csv_row(std::ostream& out, const BenchRecord& r);

}  // namespace qm
