#pragma once

#include <string>

#include "json.hpp"
#include "lecell/diagrams.hpp"

namespace lecell {

using json = nlohmann::json;

json poset_to_json(const Poset& p);

// Inline syntax: grid rows top to bottom separated by '/', each row the
// filling of its boxes from the left ('0' or '+'). Rows may be empty.
Diagram parse_inline_diagram(const std::shared_ptr<const Poset>& p, const std::string& text);
std::string to_inline(const Diagram& d);

json diagram_to_json(const Diagram& d);
// Accepts {"poset":{"type","n","j"},"ideal_rows":[...],"filling":[...]}.
Diagram diagram_from_json(const json& doc);

// Box picture: one line per grid row, '.' for boxes of the poset outside
// the shape, blanks elsewhere. `french` flips rows.
std::string render_ascii(const Diagram& d, bool french = false);

std::string word_to_string(const std::vector<int>& word);

}  // namespace lecell
