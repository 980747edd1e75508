#include "qr/quandle.hpp"

#include <sstream>
#include <utility>

#include "qr/errors.hpp"

namespace qr {

Quandle::Quandle(std::size_t n, std::vector<Elem> table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)) {}

void validate_table(std::size_t n, const std::vector<Elem>& table) {
  if (n == 0) throw Error(Errc::invalid_param, "quandle must be non-empty");
  if (table.size() != n * n) throw Error(Errc::dimension_mismatch, "table must have n*n entries");
  for (const Elem v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::invalid_param, "table entry out of range");
  }
  auto op = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(table[x * n + y]); };

  for (std::size_t x = 0; x < n; ++x) {
    if (op(x, x) != x) {
      std::ostringstream msg;
      msg << "axiom 1: " << x << "*" << x << " = " << op(x, x);
      throw AxiomViolation(1, {static_cast<int>(x), -1, -1}, msg.str());
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<int> seen(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      const auto v = op(x, y);
      if (seen[v] >= 0) {
        std::ostringstream msg;
        msg << "axiom 2: column " << y << " not a permutation (" << seen[v] << "*" << y << " = " << x << "*" << y
            << " = " << v << ")";
        throw AxiomViolation(2, {seen[v], static_cast<int>(x), static_cast<int>(y)}, msg.str());
      }
      seen[v] = static_cast<int>(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) {
          std::ostringstream msg;
          msg << "axiom 3: (x*y)*z != (x*z)*(y*z) at (" << x << ", " << y << ", " << z << ")";
          throw AxiomViolation(3, {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)}, msg.str());
        }
      }
}

Quandle Quandle::from_table(std::size_t n, std::vector<Elem> table, std::string label) {
  validate_table(n, table);
  return Quandle(n, std::move(table), std::move(label));
}

Quandle Quandle::from_columns(const std::vector<Perm>& columns, std::string label) {
  const std::size_t n = columns.size();
  std::vector<Elem> table(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    if (columns[y].size() != n) throw Error(Errc::dimension_mismatch, "column length must equal n");
    for (std::size_t x = 0; x < n; ++x) table[x * n + y] = columns[y][x];
  }
  return from_table(n, std::move(table), std::move(label));
}

Perm Quandle::right_mult(Elem y) const {
  Perm p(n_);
  for (std::size_t x = 0; x < n_; ++x) p[x] = op(static_cast<Elem>(x), y);
  return p;
}

Perm Quandle::left_mult(Elem a) const {
  Perm p(n_);
  for (std::size_t x = 0; x < n_; ++x) p[x] = op(a, static_cast<Elem>(x));
  return p;
}

Quandle Quandle::relabeled(std::string label) const { return Quandle(n_, table_, std::move(label)); }

}  // namespace qr
