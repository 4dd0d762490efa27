#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "qm/errors.hpp"
#include "qm/group_min.hpp"
#include "qm/list_io.hpp"
#include "qm/oracle.hpp"

namespace py = pybind11;

using qm::AnyList;
using qm::Mode;

namespace {

Mode parse_mode(const std::string& s) {
  if (s == "monoid") return Mode::monoid;
  if (s == "group") return Mode::group;
  throw py::value_error("mode must be 'monoid' or 'group'");
}

py::object fraction(const mpq_class& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  py::int_ num(py::str(q.get_num().get_str()));
  py::int_ den(py::str(q.get_den().get_str()));
  return cls(num, den);
}

class List {
  AnyList list_;

  template <class F>
  auto visit(F&& f) const {
    return std::visit(std::forward<F>(f), list_);
  }

 public:
  explicit List(AnyList l) : list_(std::move(l)) {}

  List(const std::string& mode, int n, const std::string& coeff,
       const std::vector<std::pair<std::string, std::string>>& entries)
      : list_(make(mode, n, coeff, entries)) {}

  static List parse(const std::string& text) { return List(qm::parse_list(text)); }

  std::string mode() const {
    return std::string(qm::mode_name(visit([](const auto& l) { return l.alphabet().mode(); })));
  }
  int rank() const {
    return visit([](const auto& l) { return l.alphabet().rank(); });
  }
  std::string coeff() const {
    return visit([](const auto& l) {
      return std::string(std::decay_t<decltype(l)>::Domain::name);
    });
  }

  std::vector<std::pair<std::string, std::string>> entries() const {
    return visit([](const auto& l) {
      using D = typename std::decay_t<decltype(l)>::Domain;
      std::vector<std::pair<std::string, std::string>> out;
      for (const auto& e : l) out.emplace_back(qm::format_word(e.word, l.alphabet()), D::format(e.coeff));
      return out;
    });
  }

  std::size_t total_size() const {
    return visit([](const auto& l) { return l.total_size(); });
  }
  int max_depth() const {
    return visit([](const auto& l) { return qm::max_depth(l); });
  }
  std::string to_text() const {
    return visit([](const auto& l) { return qm::serialize_list(l); });
  }
  std::string to_dot() const {
    return visit([](const auto& l) { return qm::render_dot(l); });
  }
  List normalized() const {
    return List(visit([](const auto& l) -> AnyList { return qm::normalize_list(l); }));
  }
  List minimize() const {
    return List(visit([](const auto& l) -> AnyList { return qm::find_minimal_list(l); }));
  }
  bool is_antisymmetric() const {
    return visit([](const auto& l) { return qm::is_antisymmetric(l); });
  }
  py::object evaluate(const std::string& word) const {
    return visit([&](const auto& l) {
      return fraction(qm::to_rational(qm::evaluate(l, qm::parse_word(word, l.alphabet()))));
    });
  }

  const AnyList& any() const { return list_; }

 private:
  static AnyList make(const std::string& mode, int n, const std::string& coeff,
                      const std::vector<std::pair<std::string, std::string>>& entries) {
    qm::Alphabet alphabet(parse_mode(mode), n);
    auto fill = [&](auto list) -> AnyList {
      using D = typename decltype(list)::Domain;
      for (const auto& [w, x] : entries) list.push_back(qm::parse_word(w, alphabet), D::parse(x));
      return list;
    };
    if (coeff == "int") return fill(qm::IntList(alphabet));
    if (coeff == "rat") return fill(qm::RatList(alphabet));
    throw py::value_error("coeff must be 'int' or 'rat'");
  }
};

template <class F>
auto visit_pair(const List& a, const List& b, F&& f) {
  return std::visit(
      [&](const auto& l1, const auto& l2) {
        if constexpr (std::is_same_v<std::decay_t<decltype(l1)>, std::decay_t<decltype(l2)>>)
          return f(l1, l2);
        else
          throw qm::PreconditionError("lists use different coefficient domains");
        return decltype(f(l1, l1)){};
      },
      a.any(), b.any());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimization of counting functions on free monoids and free groups";

  py::register_exception<qm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qm::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<qm::OracleTooLarge>(m, "OracleTooLarge", PyExc_RuntimeError);

  py::class_<List>(m, "List")
      .def(py::init<const std::string&, int, const std::string&,
                    const std::vector<std::pair<std::string, std::string>>&>(),
           py::arg("mode"), py::arg("n"), py::arg("coeff"), py::arg("entries"))
      .def_static("parse", &List::parse, py::arg("text"))
      .def_property_readonly("mode", &List::mode)
      .def_property_readonly("n", &List::rank)
      .def_property_readonly("coeff", &List::coeff)
      .def_property_readonly("total_size", &List::total_size)
      .def_property_readonly("max_depth", &List::max_depth)
      .def("entries", &List::entries)
      .def("to_text", &List::to_text)
      .def("to_dot", &List::to_dot)
      .def("normalized", &List::normalized)
      .def("minimize", &List::minimize)
      .def("is_antisymmetric", &List::is_antisymmetric)
      .def("evaluate", &List::evaluate, py::arg("word"))
      .def("__len__", [](const List& l) { return l.entries().size(); })
      .def("__repr__", [](const List& l) {
        return "<qmlist.List mode=" + l.mode() + " n=" + std::to_string(l.rank()) +
               " coeff=" + l.coeff() + " entries=" + std::to_string(l.entries().size()) + ">";
      });

  m.def("equivalent", [](const List& a, const List& b) {
    return visit_pair(a, b, [](const auto& l1, const auto& l2) { return qm::decide_equivalent(l1, l2); });
  });
  m.def("cohomologous", [](const List& a, const List& b) {
    return visit_pair(a, b, [](const auto& l1, const auto& l2) { return qm::decide_cohomologous(l1, l2); });
  });
  m.def("oracle_minimal_depth", [](const List& a) {
    return std::visit([](const auto& l) { return qm::oracle_minimal_depth(l); }, a.any());
  });
  m.def("oracle_equivalent", [](const List& a, const List& b) {
    return visit_pair(a, b, [](const auto& l1, const auto& l2) { return qm::oracle_equivalent(l1, l2); });
  });
}
