#include "qr/cli/quandle_spec.hpp"

#include <charconv>

#include "qr/errors.hpp"

namespace qr::cli {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& what) {
  throw Error(Errc::parse_error, "quandle spec '" + std::string(text) + "': " + what);
}

std::int64_t parse_int(std::string_view whole, std::string_view digits) {
  std::int64_t v = 0;
  const char* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, v);
  if (digits.empty() || ec != std::errc{} || ptr != end) fail(whole, "expected an integer, got '" + std::string(digits) + "'");
  return v;
}

std::size_t parse_size(std::string_view whole, std::string_view digits) {
  const std::int64_t v = parse_int(whole, digits);
  if (v < 1) fail(whole, "size must be positive");
  return static_cast<std::size_t>(v);
}

std::size_t parse_cyclic(std::string_view whole, std::string_view arg) {
  if (arg.empty() || arg.front() != 'Z') fail(whole, "expected Z<n>");
  return parse_size(whole, arg.substr(1));
}

}  // namespace

std::string QuandleSpec::print() const {
  switch (kind) {
    case Kind::dihedral: return "R:" + std::to_string(n);
    case Kind::commutative: return "C:" + std::to_string(n);
    case Kind::trivial: return "T:" + std::to_string(n);
    case Kind::x6: return "X6";
    case Kind::core: return "core:Z" + std::to_string(n);
    case Kind::conj: return "conj:Z" + std::to_string(n);
    case Kind::alexander: return "alex:Z" + std::to_string(n) + ":" + std::to_string(unit);
    case Kind::product: return "prod:(" + factors[0].print() + "," + factors[1].print() + ")";
    case Kind::file: return "file:" + path;
  }
  return {};
}

QuandleSpec parse_quandle_spec(std::string_view text) {
  QuandleSpec s;
  if (text == "X6") {
    s.kind = QuandleSpec::Kind::x6;
    return s;
  }
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail(text, "missing ':'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);

  if (head == "R" || head == "C" || head == "T") {
    s.kind = head == "R" ? QuandleSpec::Kind::dihedral
             : head == "C" ? QuandleSpec::Kind::commutative
                           : QuandleSpec::Kind::trivial;
    s.n = parse_size(text, arg);
    if (s.kind == QuandleSpec::Kind::commutative && s.n % 2 == 0) fail(text, "C needs an odd order");
  } else if (head == "core" || head == "conj") {
    s.kind = head == "core" ? QuandleSpec::Kind::core : QuandleSpec::Kind::conj;
    s.n = parse_cyclic(text, arg);
  } else if (head == "alex") {
    s.kind = QuandleSpec::Kind::alexander;
    const std::size_t sep = arg.find(':');
    if (sep == std::string_view::npos) fail(text, "expected alex:Z<n>:<u>");
    s.n = parse_cyclic(text, arg.substr(0, sep));
    s.unit = parse_int(text, arg.substr(sep + 1));
  } else if (head == "prod") {
    s.kind = QuandleSpec::Kind::product;
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')') fail(text, "expected prod:(<spec>,<spec>)");
    const std::string_view inner = arg.substr(1, arg.size() - 2);
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) {
        if (split != std::string_view::npos) fail(text, "product takes two factors");
        split = i;
      }
      if (depth < 0) fail(text, "unbalanced parentheses");
    }
    if (depth != 0 || split == std::string_view::npos) fail(text, "expected prod:(<spec>,<spec>)");
    s.factors.push_back(parse_quandle_spec(inner.substr(0, split)));
    s.factors.push_back(parse_quandle_spec(inner.substr(split + 1)));
  } else if (head == "file") {
    s.kind = QuandleSpec::Kind::file;
    if (arg.empty()) fail(text, "empty path");
    s.path = std::string(arg);
  } else {
    fail(text, "unknown kind '" + std::string(head) + "'");
  }
  return s;
}

Quandle build_quandle(const QuandleSpec& spec) {
  switch (spec.kind) {
    case QuandleSpec::Kind::dihedral: return dihedral_quandle(spec.n).relabeled(spec.print());
    case QuandleSpec::Kind::commutative: return commutative_quandle(spec.n).relabeled(spec.print());
    case QuandleSpec::Kind::trivial: return trivial_quandle(spec.n).relabeled(spec.print());
    case QuandleSpec::Kind::x6: return x6_quandle().relabeled(spec.print());
    case QuandleSpec::Kind::core: return core_quandle(FiniteGroup::cyclic(spec.n)).relabeled(spec.print());
    case QuandleSpec::Kind::conj: return conjugation_quandle(FiniteGroup::cyclic(spec.n)).relabeled(spec.print());
    case QuandleSpec::Kind::alexander: return affine_alexander_quandle(spec.n, spec.unit).relabeled(spec.print());
    case QuandleSpec::Kind::product:
      return product_quandle(build_quandle(spec.factors[0]), build_quandle(spec.factors[1])).relabeled(spec.print());
    case QuandleSpec::Kind::file: return read_table_file(spec.path).relabeled(spec.print());
  }
  throw Error(Errc::invalid_param, "unreachable quandle kind");
}

}  // namespace qr::cli
