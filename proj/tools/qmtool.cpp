// qmtool: minimize, compare, render and benchmark qmlist files.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qm/bench.hpp"
#include "qm/errors.hpp"
#include "qm/group_min.hpp"
#include "qm/list_io.hpp"
#include "qm/oracle.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 3;
constexpr int kUsage = 2;
constexpr int kPrecondition = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

qm::AnyList load(const std::string& path) {
  try {
    return qm::parse_list(read_file(path));
  } catch (const qm::ParseError& e) {
    throw qm::ParseError(path + ": " + e.what());
  }
}

template <class F>
auto with_pair(const qm::AnyList& a, const qm::AnyList& b, F&& f) {
  return std::visit(
      [&](const auto& l1, const auto& l2) -> bool {
        if constexpr (std::is_same_v<std::decay_t<decltype(l1)>, std::decay_t<decltype(l2)>>) {
          if (!(l1.alphabet() == l2.alphabet())) throw UsageError("lists use different alphabets");
          return f(l1, l2);
        } else {
          throw UsageError("lists use different coefficient domains");
        }
      },
      a, b);
}

int verdict(bool yes) {
  std::cout << (yes ? "yes" : "no") << '\n';
  return yes ? kYes : kNo;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.push_back(std::stoull(item));
    } else {
      std::size_t base = std::stoull(item.substr(0, caret));
      std::size_t exp = std::stoull(item.substr(caret + 1));
      std::size_t v = 1;
      for (std::size_t k = 0; k < exp; ++k) v *= base;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimize counting functions on free monoids and free groups"};
  app.require_subcommand(1);

  std::string in, out, trace, word, file1, file2;

  auto* minimize = app.add_subcommand("minimize", "Write a minimal equivalent list");
  minimize->add_option("--in", in, "Input qmlist file")->required();
  minimize->add_option("--out", out, "Output file (default: stdout)");
  minimize->add_option("--trace", trace, "Write one DOT frame per step to this file");

  auto* equiv = app.add_subcommand("equiv", "Decide whether two lists are equivalent");
  equiv->add_option("first", file1)->required();
  equiv->add_option("second", file2)->required();

  auto* cohom = app.add_subcommand("cohom", "Decide whether two antisymmetric group lists are cohomologous");
  cohom->add_option("first", file1)->required();
  cohom->add_option("second", file2)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the counting function at a word");
  eval->add_option("--in", in, "Input qmlist file")->required();
  eval->add_option("--word", word, "Word, '1' for the empty word")->required();

  auto* render = app.add_subcommand("render", "Render the weighted tree as DOT");
  render->add_option("--in", in, "Input qmlist file")->required();
  render->add_option("--out", out, "Output file (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force linear algebra cross-check");
  oracle->require_subcommand(1);
  auto* oracle_equiv = oracle->add_subcommand("equiv", "Equivalence by elimination");
  oracle_equiv->add_option("first", file1)->required();
  oracle_equiv->add_option("second", file2)->required();
  auto* oracle_depth = oracle->add_subcommand("depth", "Minimal depth by elimination");
  oracle_depth->add_option("--in", in, "Input qmlist file")->required();

  qm::BenchConfig bench_config;
  std::string bench_mode = "monoid", bench_coeff = "int", bench_sizes = "2^14,2^15,2^16", csv;
  auto* bench = app.add_subcommand("bench", "Time minimization of generated inputs");
  bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"monoid", "group"}));
  bench->add_option("--coeff", bench_coeff)->check(CLI::IsMember({"int", "rat"}));
  bench->add_option("--n", bench_config.rank)->check(CLI::Range(2, 26));
  bench->add_option("--sizes", bench_sizes, "Comma-separated total sizes, e.g. 2^14,2^15");
  bench->add_option("--trials", bench_config.trials);
  bench->add_option("--seed", bench_config.seed);
  bench->add_option("--depth", bench_config.depth, "Relation word length bound")->check(CLI::Range(1, 64));
  bench->add_option("--csv", csv, "CSV output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*minimize) {
      auto any = load(in);
      std::ostringstream frames;
      std::string result = std::visit(
          [&](const auto& l) {
            using D = typename std::decay_t<decltype(l)>::Domain;
            qm::MinimizeHooks<D> hooks;
            if (!trace.empty())
              hooks.on_frame = [&](const qm::EncodedList<D>& f) { frames << qm::render_dot(f); };
            return qm::serialize_list(qm::find_minimal_list(l, hooks));
          },
          any);
      if (!trace.empty()) write_output(trace, frames.str());
      write_output(out, result);
      return 0;
    }
    if (*equiv) {
      return verdict(with_pair(load(file1), load(file2),
                               [](const auto& a, const auto& b) { return qm::decide_equivalent(a, b); }));
    }
    if (*cohom) {
      return verdict(with_pair(load(file1), load(file2), [](const auto& a, const auto& b) {
        return qm::decide_cohomologous(a, b);
      }));
    }
    if (*eval) {
      auto any = load(in);
      std::cout << std::visit(
                       [&](const auto& l) {
                         return qm::to_rational(qm::evaluate(l, qm::parse_word(word, l.alphabet())))
                             .get_str();
                       },
                       any)
                << '\n';
      return 0;
    }
    if (*render) {
      auto any = load(in);
      write_output(out, std::visit([](const auto& l) { return qm::render_dot(l); }, any));
      return 0;
    }
    if (*oracle_equiv) {
      return verdict(with_pair(load(file1), load(file2),
                               [](const auto& a, const auto& b) { return qm::oracle_equivalent(a, b); }));
    }
    if (*oracle_depth) {
      auto any = load(in);
      std::cout << std::visit([](const auto& l) { return qm::oracle_minimal_depth(l); }, any) << '\n';
      return 0;
    }
    if (*bench) {
      bench_config.mode = bench_mode == "group" ? qm::Mode::group : qm::Mode::monoid;
      bench_config.coeff = bench_coeff == "rat" ? qm::CoeffKind::rational : qm::CoeffKind::integer;
      bench_config.sizes = parse_sizes(bench_sizes);
      std::ofstream file;
      std::ostream* sink = &std::cout;
      if (!csv.empty() && csv != "-") {
        file.open(csv);
        if (!file) throw UsageError("cannot write '" + csv + "'");
        sink = &file;
      }
      qm::write_bench_csv_header(*sink);
      qm::run_bench(bench_config, [&](const qm::BenchRecord& r) {
        qm::write_bench_csv_row(*sink, r);
        sink->flush();
      });
      return 0;
    }
  } catch (const qm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qm::OracleTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qm::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
