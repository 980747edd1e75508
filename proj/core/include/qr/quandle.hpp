#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qr/group.hpp"
#include "qr/size_caps.hpp"

namespace qr {

// A finite quandle stored as its operation table: table()[x*n + y] = x*y,
// so column y is the right multiplication R_y. Elements are 0-based.
class Quandle {
 public:
  // Validates the three quandle axioms; throws AxiomViolation on failure.
  static Quandle from_table(std::size_t n, std::vector<Elem> table, std::string label = {});
  // Builds from right multiplications: columns[y][x] = x*y.
  static Quandle from_columns(const std::vector<Perm>& columns, std::string label = {});

  std::size_t size() const noexcept { return n_; }
  Elem op(Elem x, Elem y) const {
    return table_[static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(y)];
  }
  const std::vector<Elem>& table() const noexcept { return table_; }
  const std::string& label() const noexcept { return label_; }

  Perm right_mult(Elem y) const;  // R_y : x -> x*y
  Perm left_mult(Elem a) const;   // L_a : x -> a*x

  Quandle relabeled(std::string label) const;

  friend bool operator==(const Quandle& a, const Quandle& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  Quandle(std::size_t n, std::vector<Elem> table, std::string label);

  std::size_t n_;
  std::vector<Elem> table_;
  std::string label_;
};

using QuandlePtr = std::shared_ptr<const Quandle>;

// Throws AxiomViolation for the first failing axiom, checked in order 1, 2, 3.
void validate_table(std::size_t n, const std::vector<Elem>& table);

// --- constructions --------------------------------------------------------

Quandle trivial_quandle(std::size_t m);
Quandle dihedral_quandle(std::size_t n);                     // x*y = 2y - x mod n
Quandle commutative_quandle(std::size_t order);              // order = 2n+1, x*y = (n+1)(x+y)
Quandle core_quandle(const FiniteGroup& g);                  // x*y = y x^-1 y
Quandle conjugation_quandle(const FiniteGroup& g);           // x*y = y x y^-1
Quandle alexander_quandle(const FiniteGroup& g, const Perm& f);  // x*y = f(x y^-1) y
// Affine quandle on Z_n with x*y = u x + (1-u) y; requires gcd(u, n) = 1.
Quandle affine_alexander_quandle(std::size_t n, std::int64_t u);
// Abelian extension X x A with (x,a)*(y,b) = (x*y, a + psi(x,y)); element
// (x, a) has index x*|A| + a, psi is |X|*|X| entries of A.
Quandle extension_quandle(const Quandle& x, const FiniteGroup& a, const std::vector<Elem>& psi);
Quandle product_quandle(const Quandle& x, const Quandle& y);
// The involutory connected 2-almost latin quandle of order 6, from
// R_1=(3 5)(4 6), R_2=(3 6)(4 5), R_3=(1 5)(2 6), R_4=(1 6)(2 5),
// R_5=(1 3)(2 4), R_6=(1 4)(2 3) (1-based names, stored 0-based).
Quandle x6_quandle();

// --- classification -------------------------------------------------------

struct PropertyReport {
  bool latin = false;
  bool semi_latin = false;
  bool commutative = false;
  bool connected = false;
  bool faithful = false;
  bool involutory = false;
  std::optional<std::size_t> almost_latin_degree;
  std::uint64_t inn_order = 1;
};

PropertyReport properties(const Quandle& q, const SizeCaps& caps = SizeCaps::defaults());

struct InnerGroup {
  std::uint64_t order = 1;
  std::vector<Perm> generators;  // distinct columns, sorted
};

InnerGroup inner_group(const Quandle& q, const SizeCaps& caps = SizeCaps::defaults());

// All automorphisms sorted lexicographically (SizeLimit above caps.automorphism_n).
std::vector<Perm> automorphisms(const Quandle& q, const SizeCaps& caps = SizeCaps::defaults());

// All homomorphisms q -> p as maps (index = element of q), sorted lexicographically.
std::vector<Perm> homomorphisms(const Quandle& q, const Quandle& p, const SizeCaps& caps = SizeCaps::defaults());
bool is_homomorphism(const Quandle& q, const Quandle& p, const Perm& f);

// Every quandle table on n <= caps.enumerate_n points, not up to isomorphism,
// sorted by table.
std::vector<Quandle> enumerate_quandles(std::size_t n, const SizeCaps& caps = SizeCaps::defaults());

// --- table file format ------------------------------------------------------
// Optional '#' comment lines, then n, then n rows of n 0-based entries.
Quandle read_table(std::istream& in, std::string label = {});
Quandle read_table_file(const std::string& path);
void write_table(std::ostream& out, const Quandle& q);

}  // namespace qr
