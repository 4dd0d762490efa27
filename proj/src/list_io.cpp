#include "qm/list_io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qm/errors.hpp"

namespace qm {

namespace {

struct Header {
  std::optional<Mode> mode;
  std::optional<int> rank;
  std::optional<CoeffKind> coeff;

  bool complete() const { return mode && rank && coeff; }
};

struct EntryLine {
  std::size_t line;
  std::string_view text;
};

std::string_view strip(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto b = s.find_first_not_of(" \t", pos);
    if (b == std::string_view::npos) break;
    auto e = s.find_first_of(" \t", b);
    if (e == std::string_view::npos) e = s.size();
    out.push_back(s.substr(b, e - b));
    pos = e;
  }
  return out;
}

void read_header_token(Header& h, std::string_view token, std::size_t line) {
  auto eq = token.find('=');
  if (eq == std::string_view::npos)
    throw ParseError("expected key=value in header, got '" + std::string(token) + "'", line);
  std::string_view key = token.substr(0, eq), value = token.substr(eq + 1);
  auto duplicate = [&] { throw ParseError("duplicate header key '" + std::string(key) + "'", line); };
  if (key == "mode") {
    if (h.mode) duplicate();
    if (value == "monoid")
      h.mode = Mode::monoid;
    else if (value == "group")
      h.mode = Mode::group;
    else
      throw ParseError("mode must be monoid or group", line);
  } else if (key == "n") {
    if (h.rank) duplicate();
    int n = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
    if (ec != std::errc{} || ptr != value.data() + value.size() || n < 2 || n > 26)
      throw ParseError("n must be an integer in 2..26", line);
    h.rank = n;
  } else if (key == "coeff") {
    if (h.coeff) duplicate();
    if (value == "int")
      h.coeff = CoeffKind::integer;
    else if (value == "rat")
      h.coeff = CoeffKind::rational;
    else
      throw ParseError("coeff must be int or rat", line);
  } else {
    throw ParseError("unknown header key '" + std::string(key) + "'", line);
  }
}

template <CoefficientDomain D>
EncodedList<D> read_entries(const Alphabet& alphabet, const std::vector<EntryLine>& lines) {
  EncodedList<D> out(alphabet);
  for (const auto& [line, text] : lines) {
    auto tokens = split(text);
    if (tokens.size() != 2) throw ParseError("expected '<word> <coeff>'", line);
    try {
      Word w = parse_word(tokens[0], alphabet);
      out.push_back(std::move(w), D::parse(tokens[1]));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }
  return out;
}

}  // namespace

AnyList parse_list(std::string_view text) {
  Header header;
  bool magic = false;
  std::vector<EntryLine> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = strip(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty()) continue;
    if (!magic) {
      if (line != "qmlist v1") throw ParseError("expected 'qmlist v1'", line_no);
      magic = true;
    } else if (!header.complete()) {
      for (auto token : split(line)) read_header_token(header, token, line_no);
    } else {
      entries.push_back({line_no, line});
    }
  }
  if (!magic) throw ParseError("missing 'qmlist v1' header", 1);
  if (!header.complete()) throw ParseError("header needs mode, n and coeff", line_no);

  Alphabet alphabet(*header.mode, *header.rank);
  if (*header.coeff == CoeffKind::integer) return read_entries<IntDomain>(alphabet, entries);
  return read_entries<RatDomain>(alphabet, entries);
}

template <CoefficientDomain D>
EncodedList<D> parse_list_as(std::string_view text) {
  AnyList any = parse_list(text);
  if (auto* l = std::get_if<EncodedList<D>>(&any)) return std::move(*l);
  throw ParseError("list does not use coeff=" + std::string(D::name));
}

template <CoefficientDomain D>
std::string serialize_list(const EncodedList<D>& list) {
  std::ostringstream out;
  out << "qmlist v1\n"
      << "mode=" << mode_name(list.alphabet().mode()) << '\n'
      << "n=" << list.alphabet().rank() << '\n'
      << "coeff=" << D::name << '\n';
  for (const auto& e : list)
    out << format_word(e.word, list.alphabet()) << ' ' << D::format(e.coeff) << '\n';
  return out.str();
}

template <CoefficientDomain D>
std::string render_dot(const EncodedList<D>& list) {
  const Alphabet& alphabet = list.alphabet();
  std::map<Word, typename D::Code, ShortlexLess> weight;
  weight.emplace(Word{}, D::zero());
  for (const auto& e : list) {
    for (std::size_t k = 0; k < e.word.length(); ++k) weight.emplace(e.word.prefix(k), D::zero());
    auto [it, fresh] = weight.emplace(e.word, e.coeff);
    if (!fresh) it->second = D::add(it->second, e.coeff);
  }

  std::map<Word, std::size_t, ShortlexLess> id;
  std::ostringstream out;
  out << "digraph qmlist {\n  node [shape=circle];\n";
  for (const auto& [w, x] : weight) {
    std::size_t k = id.size();
    id.emplace(w, k);
    out << "  v" << k << " [label=\"" << D::format(x) << "\", tooltip=\""
        << format_word(w, alphabet) << "\"];\n";
  }
  for (const auto& [w, k] : id) {
    if (w.empty()) continue;
    out << "  v" << id.at(w.father()) << " -> v" << k << " [label=\""
        << alphabet.letter_name(w.back()) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

#define QM_INSTANTIATE_IO(D)                                               \
  template EncodedList<D> parse_list_as<D>(std::string_view);              \
  template std::string serialize_list<D>(const EncodedList<D>&);           \
  template std::string render_dot<D>(const EncodedList<D>&);

QM_INSTANTIATE_IO(IntDomain)
QM_INSTANTIATE_IO(RatDomain)

}  // namespace qm
