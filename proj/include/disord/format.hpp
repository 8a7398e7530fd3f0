#pragma once

#include <string>
#include <vector>

#include "disord/disord.hpp"
#include "disord/value.hpp"

namespace disord {

// Console width used for wrapping vector output.
inline constexpr int kConsoleWidth = 70;

// One token per number, all sharing a common layout: fixed notation with the
// fewest decimals that still shows seven significant digits of the worst
// element, or scientific notation when that is narrower.
std::vector<std::string> format_numbers(const std::vector<double>& xs);

// Element-name shown for an empty vector, e.g. "numeric(0)" or, inside a
// list block, "integer(0)".
std::string empty_name_for(Value::Kind kind, Value::ListKind hint, bool in_list);

// "[1] 9 4 7 ..." with right-justified tokens, [k] continuation labels and
// width-70 wrap.  Empty input renders as empty_name alone.
std::string render_vector(const std::vector<Value>& xs, const std::string& empty_name);

// Scalar echo, e.g. "[1] TRUE".
std::string render_value_line(const Value& v);

// "[[i]]" blocks, one per list element, each followed by a blank line.
std::string render_list_blocks(const std::vector<Value>& items);

// Full display: hash header, elements (or list blocks), "(in some order)".
std::string render_disord(const Disord& d);

}  // namespace disord
