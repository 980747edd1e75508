#include "qr/cli/report.hpp"

#include <ostream>

#include "qr/ring.hpp"

namespace qr::cli {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

Json basis_json(const Lattice& l, std::string_view symbol) {
  Json a = Json::array();
  for (const auto& row : l.basis()) a.push_back(format_delta(row, symbol));
  return a;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void inline_value(std::ostream& out, const Json& j) {
  if (!j.is_array()) {
    out << scalar(j);
    return;
  }
  out << '[';
  bool first = true;
  for (const auto& e : j) {
    out << (first ? "" : ", ") << scalar(e);
    first = false;
  }
  out << ']';
}

}  // namespace

void render_text(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << pad << key << ':';
      if (is_flat(value)) {
        out << ' ';
        inline_value(out, value);
        out << '\n';
      } else {
        out << '\n';
        render_text(out, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- ";
        inline_value(out, e);
        out << '\n';
      } else {
        out << pad << "-\n";
        render_text(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace qr::cli
