#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qr/errors.hpp"
#include "qr/quandle.hpp"

namespace qr {

Quandle read_table(std::istream& in, std::string label) {
  std::string line;
  std::ostringstream body;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body << line << '\n';
  }
  std::istringstream tokens(body.str());
  long long n = 0;
  if (!(tokens >> n) || n <= 0) throw Error(Errc::parse_error, "table file: expected positive n");
  const auto size = static_cast<std::size_t>(n);
  std::vector<Elem> table(size * size);
  for (auto& v : table) {
    long long entry = 0;
    if (!(tokens >> entry)) throw Error(Errc::parse_error, "table file: expected n*n entries");
    if (entry < 0 || entry >= n) throw Error(Errc::parse_error, "table file: entry out of range");
    v = static_cast<Elem>(entry);
  }
  std::string extra;
  if (tokens >> extra) throw Error(Errc::parse_error, "table file: trailing data");
  return Quandle::from_table(size, std::move(table), std::move(label));
}

Quandle read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open table file " + path);
  return read_table(in, "file:" + path);
}

void write_table(std::ostream& out, const Quandle& q) {
  if (!q.label().empty()) out << "# " << q.label() << '\n';
  out << q.size() << '\n';
  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      if (y) out << ' ';
      out << q.op(static_cast<Elem>(x), static_cast<Elem>(y));
    }
    out << '\n';
  }
}

}  // namespace qr
