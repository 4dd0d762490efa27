// Acceptance run: prints one PASS/FAIL line per criterion, exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qm/bench.hpp"
#include "qm/group_min.hpp"
#include "qm/oracle.hpp"
#include "support.hpp"

using namespace qm;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kFigureBudgetMs = 1.0;
constexpr std::size_t kAgreementInstances = 500;
constexpr std::size_t kAgreementMaxDepth = 4;
constexpr double kAgreementBudgetSeconds = 600.0;
constexpr std::size_t kArithmeticPairs = 100000;
constexpr std::size_t kScalingTrials = 7;
constexpr int kScalingMinExp = 14;
constexpr int kScalingMaxExp = 20;
constexpr double kIntDoublingMax = 2.6;
constexpr double kRatSpreadMax = 3.0;
constexpr std::size_t kIdentityPairs = 10000;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome figure_reproduction() {
  auto fig = qmtest::monoid(3, {{"1", "-1"}, {"b", "-6"}, {"c", "-1"}, {"aa", "4"}, {"ab", "4"},
                                {"ac", "4"}, {"ca", "1"}, {"cb", "1"}, {"cc", "1"}});
  const qmtest::Entries expected = {{"1", "-1"}, {"a", "4"}, {"b", "-6"}};
  std::vector<double> ms;
  bool exact = true;
  for (int k = 0; k < 11; ++k) {
    auto start = Clock::now();
    auto m = find_minimal_list(fig);
    ms.push_back(seconds_since(start) * 1e3);
    exact = exact && qmtest::dump(m) == expected;
  }
  std::sort(ms.begin(), ms.end());
  double median = ms[ms.size() / 2];
  std::ostringstream d;
  d << "output " << (exact ? "matches" : "differs") << ", median " << median << " ms (budget "
    << kFigureBudgetMs << " ms)";
  return {exact && median < kFigureBudgetMs, d.str()};
}

Outcome transfer_figure() {
  auto family = normalize_list(qmtest::monoid(3, {{"aa", "1"}, {"ab", "2"}, {"ac", "3"}, {"ba", "4"}, {"bb", "5"},
                                                  {"bc", "4"}, {"ca", "5"}, {"cb", "4"}, {"cc", "5"}}));
  bool crs = decompose_column_row(build_transfer_matrix(family, Word())).has_value();
  auto move = transfer_and_prune(family);
  auto step = main_processing_step(family, 2);
  bool unchanged = qmtest::dump(move.list) == qmtest::dump(family);
  bool pass = !crs && move.minimal && step.minimal && unchanged &&
              oracle_minimal_depth(family) == 2;
  return {pass, std::string("column-row-sum=") + (crs ? "yes" : "no") +
                    ", move minimal=" + (move.minimal ? "yes" : "no") +
                    ", step minimal=" + (step.minimal ? "yes" : "no")};
}

struct AgreementStats {
  std::size_t instances = 0;
  std::size_t depth_mismatch = 0;
  std::size_t verdict_mismatch = 0;
  std::size_t equivalent_pairs = 0;
  std::size_t bound_violations = 0;
  qmtest::StepAudit audit;
  std::size_t special_steps = 0;
  double seconds = 0;
};

template <CoefficientDomain D>
void agreement_config(const Alphabet& alphabet, std::mt19937_64& rng, AgreementStats& s) {
  const std::size_t bound_factor = alphabet.is_group() ? 18 * alphabet.rank() + 9 : 9;
  for (std::size_t k = 0; k < kAgreementInstances; ++k) {
    std::size_t depth = rng() % kAgreementMaxDepth + 1;
    auto l = qmtest::random_instance<D>(alphabet, depth, rng);
    auto hooks = qmtest::audit_hooks<D>(s.audit);
    auto on_step = hooks.on_step;
    hooks.on_step = [&](const StepReport& r) {
      on_step(r);
      if (r.mode == Mode::group && r.depth == 2 && !r.minimal) ++s.special_steps;
    };
    auto m = find_minimal_list(l, hooks);
    ++s.instances;
    if (max_depth(m) != oracle_minimal_depth(l)) ++s.depth_mismatch;
    if (m.total_size() > bound_factor * normalize_list(l).total_size()) ++s.bound_violations;

    // Half the partners differ from l by extension relations only.
    EncodedList<D> other(alphabet);
    if (rng() % 2 == 0) {
      other = l;
      std::size_t relations = rng() % 4 + 1;
      for (std::size_t r = 0; r < relations; ++r)
        qmtest::append_relation(other, qmtest::random_word(alphabet, rng() % depth, rng), rng() % 2 == 0,
                                qmtest::small_code<D>(rng));
    } else {
      other = qmtest::random_instance<D>(alphabet, depth, rng);
    }
    bool oracle = oracle_equivalent(l, other);
    if (oracle) ++s.equivalent_pairs;
    if (decide_equivalent(l, other) != oracle) ++s.verdict_mismatch;
  }
}

AgreementStats run_agreement() {
  AgreementStats s;
  std::mt19937_64 rng(20240601);
  auto start = Clock::now();
  for (Mode mode : {Mode::monoid, Mode::group})
    for (int n : {2, 3}) {
      Alphabet a(mode, n);
      agreement_config<IntDomain>(a, rng, s);
      agreement_config<RatDomain>(a, rng, s);
    }
  s.seconds = seconds_since(start);
  return s;
}

Outcome oracle_agreement(const AgreementStats& s) {
  std::ostringstream d;
  d << s.instances << " instances (" << kAgreementInstances << " per configuration), "
    << s.depth_mismatch << " depth mismatches, " << s.verdict_mismatch << " verdict mismatches ("
    << s.equivalent_pairs << " equivalent pairs), " << s.seconds << " s (budget "
    << kAgreementBudgetSeconds << " s)";
  bool pass = s.instances == 8 * kAgreementInstances && s.depth_mismatch == 0 &&
              s.verdict_mismatch == 0 && s.seconds < kAgreementBudgetSeconds;
  return {pass, d.str()};
}

Outcome contraction(const AgreementStats& s) {
  std::ostringstream d;
  d << s.audit.steps << " main steps audited (" << s.special_steps << " group depth-2), "
    << s.audit.violations << " violations";
  return {s.audit.steps > 0 && s.special_steps > 0 && s.audit.violations == 0, d.str()};
}

Outcome output_bounds(const AgreementStats& s) {
  std::ostringstream d;
  d << s.instances << " outputs checked, " << s.bound_violations << " violations";
  return {s.instances > 0 && s.bound_violations == 0, d.str()};
}

std::string random_bits(std::mt19937_64& rng, int max_bits) {
  int bits = std::uniform_int_distribution<int>(0, max_bits)(rng);
  if (bits == 0) return "0";
  std::string s = "1";
  for (int k = 1; k < bits; ++k) s.push_back((rng() & 1) != 0 ? '1' : '0');
  return s;
}

Outcome arithmetic() {
  std::mt19937_64 rng(77);
  std::size_t int_bad = 0, rat_bad = 0, int_value_bad = 0, rat_value_bad = 0;
  auto sign = [&] { return (rng() & 1) != 0 ? "+" : "-"; };
  auto int_code = [&] { return IntCode::from_binary(sign() + random_bits(rng, 200)); };
  auto rat_code = [&] {
    mpz_class n(random_bits(rng, 100), 2);
    if (n == 0) n = 1;
    mpz_class m = mpz_class(random_bits(rng, 120), 2) % n;
    return RatCode::from_binary(sign() + random_bits(rng, 120) + "/" + m.get_str(2) + "/" + n.get_str(2));
  };
  for (std::size_t k = 0; k < kArithmeticPairs; ++k) {
    IntCode a = int_code(), b = int_code();
    IntCode s = int_add(a, b), t = int_sub(a, b);
    const std::size_t max_size = std::max(int_size(a), int_size(b));
    if (int_size(s) > max_size + 1 || int_size(t) > max_size + 1) ++int_bad;
    auto va = qmtest::reference_value(a), vb = qmtest::reference_value(b);
    if (qmtest::reference_value(s) != va + vb || qmtest::reference_value(t) != va - vb) ++int_value_bad;

    RatCode x = rat_code(), y = rat_code();
    RatCode p = rat_add(x, y), q = rat_sub(x, y);
    if (rat_size(p) > rat_size(x) + rat_size(y) || rat_size(q) > rat_size(x) + rat_size(y)) ++rat_bad;
    auto vx = qmtest::reference_value(x), vy = qmtest::reference_value(y);
    if (qmtest::reference_value(p) != vx + vy || qmtest::reference_value(q) != vx - vy) ++rat_value_bad;
  }
  std::ostringstream d;
  d << kArithmeticPairs << " pairs per domain: rational size violations " << rat_bad
    << ", integer size violations " << int_bad << ", value mismatches " << int_value_bad + rat_value_bad;
  return {int_bad + rat_bad + int_value_bad + rat_value_bad == 0, d.str()};
}

std::vector<double> median_runtimes(CoeffKind coeff, std::vector<double>& sizes) {
  BenchConfig config;
  config.mode = Mode::monoid;
  config.coeff = coeff;
  config.rank = 3;
  config.trials = kScalingTrials;
  for (int e = kScalingMinExp; e <= kScalingMaxExp; ++e) config.sizes.push_back(std::size_t{1} << e);
  BenchConfig warmup = config;
  warmup.trials = 1;
  run_bench(warmup);
  auto records = run_bench(config);
  std::vector<double> medians;
  sizes.clear();
  for (std::size_t size : config.sizes) {
    std::vector<double> times;
    double total = 0;
    for (const auto& r : records)
      if (r.size == size) {
        times.push_back(static_cast<double>(r.runtime_ns));
        total += static_cast<double>(r.input_total);
      }
    std::sort(times.begin(), times.end());
    medians.push_back(times[times.size() / 2]);
    sizes.push_back(total / static_cast<double>(times.size()));
  }
  return medians;
}

Outcome scaling() {
  std::vector<double> int_sizes, rat_sizes;
  auto int_times = median_runtimes(CoeffKind::integer, int_sizes);
  auto rat_times = median_runtimes(CoeffKind::rational, rat_sizes);

  double worst_ratio = 0;
  for (std::size_t k = 1; k < int_times.size(); ++k)
    worst_ratio = std::max(worst_ratio, int_times[k] / int_times[k - 1]);

  double lo = 1e300, hi = 0;
  for (std::size_t k = 0; k < rat_times.size(); ++k) {
    double norm = rat_times[k] / (rat_sizes[k] * std::log2(rat_sizes[k]));
    lo = std::min(lo, norm);
    hi = std::max(hi, norm);
  }
  double spread = hi / lo;

  std::ostringstream d;
  d.precision(3);
  d << "int worst doubling ratio " << worst_ratio << " (max " << kIntDoublingMax
    << "), rat runtime/(N log N) spread " << spread << " (max " << kRatSpreadMax << "); int ms:";
  for (double t : int_times) d << ' ' << t / 1e6;
  d << "; rat ms:";
  for (double t : rat_times) d << ' ' << t / 1e6;
  return {worst_ratio <= kIntDoublingMax && spread <= kRatSpreadMax, d.str()};
}

bool is_prefix(const Word& w, const Word& x) {
  return w.length() <= x.length() && x.codes().substr(0, w.length()) == w.codes();
}
bool is_suffix(const Word& w, const Word& x) {
  return w.length() <= x.length() && x.codes().substr(x.length() - w.length()) == w.codes();
}

std::int64_t occurrences(const Word& v, const Word& w) {
  return static_cast<std::int64_t>(count_occurrences(v, w));
}

Outcome extension_identities() {
  std::mt19937_64 rng(99);
  std::size_t failures = 0;
  for (Mode mode : {Mode::monoid, Mode::group}) {
    Alphabet a(mode, 3);
    for (std::size_t k = 0; k < kIdentityPairs; ++k) {
      Word w = qmtest::random_word(a, rng() % 4, rng), x = qmtest::random_word(a, rng() % 12, rng);
      std::int64_t left = occurrences(w, x), right = left;
      for (int l = 0; l < a.letter_count(); ++l) {
        const auto letter = static_cast<Letter>(l);
        if (w.empty() || !a.is_group() || l != a.inverse(w.front())) {
          Word wl = w;
          wl.push_front(letter);
          left -= occurrences(wl, x);
        }
        if (w.empty() || !a.is_group() || l != a.inverse(w.back())) {
          Word wr = w;
          wr.push_back(letter);
          right -= occurrences(wr, x);
        }
      }
      std::int64_t want_left = w.empty() ? 0 : (is_prefix(w, x) ? 1 : 0);
      std::int64_t want_right = w.empty() ? 0 : (is_suffix(w, x) ? 1 : 0);
      if (left != want_left || right != want_right) ++failures;
      if (a.is_group() && occurrences(w, invert_word(x, a)) != occurrences(invert_word(w, a), x))
        ++failures;
    }
  }
  std::ostringstream d;
  d << kIdentityPairs << " word pairs per mode, " << failures << " failures";
  return {failures == 0, d.str()};
}

Outcome cohomology() {
  auto hom = qmtest::group(2, {{"a", "1"}, {"A", "-1"}});
  auto brooks = qmtest::group(2, {{"ab", "1"}, {"BA", "-1"}});
  auto empty = qmtest::group(2, {});
  bool hom_yes = decide_cohomologous(hom, empty);
  bool brooks_yes = decide_cohomologous(brooks, empty);
  int hom_depth = oracle_minimal_depth(build_difference(hom, empty));
  int brooks_depth = oracle_minimal_depth(build_difference(brooks, empty));
  bool pass = hom_yes && !brooks_yes && hom_depth <= 1 && brooks_depth > 1;
  std::ostringstream d;
  d << "exponent sum: " << (hom_yes ? "yes" : "no") << " (oracle depth " << hom_depth
    << "), Brooks ab: " << (brooks_yes ? "yes" : "no") << " (oracle depth " << brooks_depth << ")";
  return {pass, d.str()};
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d [%s]: %s - %s\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };
  report(1, "figure reproduction", figure_reproduction());
  report(2, "transfer figure", transfer_figure());
  AgreementStats stats = run_agreement();
  report(3, "oracle agreement", oracle_agreement(stats));
  report(4, "contraction", contraction(stats));
  report(5, "output size bounds", output_bounds(stats));
  report(6, "arithmetic size bounds", arithmetic());
  report(7, "scaling", scaling());
  report(8, "extension identities", extension_identities());
  report(9, "cohomology", cohomology());
  return all ? 0 : 1;
}
