#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "qm/lists.hpp"

namespace qm {

using IntList = EncodedList<IntDomain>;
using RatList = EncodedList<RatDomain>;
using AnyList = std::variant<IntList, RatList>;

// qmlist v1 text. Errors carry 1-based line numbers.
AnyList parse_list(std::string_view text);

template <CoefficientDomain D>
EncodedList<D> parse_list_as(std::string_view text);

template <CoefficientDomain D>
std::string serialize_list(const EncodedList<D>& list);

// Graphviz digraph of the weighted tree spanned by the list's words and the root.
template <CoefficientDomain D>
std::string render_dot(const EncodedList<D>& list);

}  // namespace qm
