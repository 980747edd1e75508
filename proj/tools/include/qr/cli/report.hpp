#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qr/lattice.hpp"

namespace qr::cli {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
// Basis rows rendered as E/f combinations, e.g. ["E1 - E2", "2E2"].
Json basis_json(const Lattice& l, std::string_view symbol);

// Indented "key: value" rendering of a report; scalars and arrays of scalars
// print inline, everything else nests.
void render_text(std::ostream& out, const Json& j, int indent = 0);

}  // namespace qr::cli
