#include "acs/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "acs/error.hpp"

namespace acs {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorKind::ParseError, "expected a non-negative integer for " + std::string(what) +
                                    ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<SplitGroup> builtin_split(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts[0] == "s3" && parts.size() == 1) return symmetric3();
  if (parts[0] == "d4" && parts.size() == 1) return dihedral4();
  if (parts[0] == "heis" && parts.size() == 3) {
    return heisenberg(parse_uint(parts[1], "d"), parse_uint(parts[2], "n"));
  }
  if (parts[0] == "gl2" && parts.size() == 2) return gl2(parse_uint(parts[1], "q"));
  return std::nullopt;
}

// Header names are single tokens.
std::string header_name(const FiniteGroup& g) {
  std::string name = g.name().empty() ? "G" : g.name();
  for (char& c : name) {
    if (c == ' ' || c == '\t') c = '_';
  }
  return name;
}

}  // namespace

GroupPtr read_group(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) fail(ErrorKind::ParseError, "empty group file");
  std::istringstream header(line);
  std::string keyword, name, order_text;
  if (!(header >> keyword >> name >> order_text) || keyword != "group") {
    fail(ErrorKind::ParseError, "group file must start with 'group <name> <order>'");
  }
  const std::uint64_t order = parse_uint(order_text, "order");
  if (order == 0) fail(ErrorKind::NotAGroup, "group order must be positive");
  if (order > kMaxGroupOrder) {
    fail(ErrorKind::OrderCapExceeded, "group order " + std::to_string(order) + " exceeds " +
                                          std::to_string(kMaxGroupOrder));
  }

  std::vector<Element> table;
  table.reserve(order * order);
  for (std::uint64_t row = 0; row < order; ++row) {
    if (!next_content_line(in, line)) {
      fail(ErrorKind::ParseError, "group file ends after " + std::to_string(row) + " rows");
    }
    std::istringstream entries(line);
    std::string entry;
    std::uint64_t count = 0;
    while (entries >> entry) {
      table.push_back(static_cast<Element>(parse_uint(entry, "table entry")));
      ++count;
    }
    if (count != order) {
      fail(ErrorKind::ParseError, "row " + std::to_string(row) + " has " + std::to_string(count) +
                                      " entries, expected " + std::to_string(order));
    }
  }
  if (next_content_line(in, line)) fail(ErrorKind::ParseError, "trailing data after group table");
  return make_group(order, std::move(table), name);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << header_name(g) << ' ' << g.order() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(static_cast<Element>(a), static_cast<Element>(b));
    }
    out << '\n';
  }
}

GroupPtr resolve_group(std::string_view spec) {
  if (auto s = builtin_split(spec)) return s->group;
  const auto parts = split(spec, ':');
  if (parts[0] == "q8" && parts.size() == 1) return quaternion_group();
  if (parts[0] == "zn" && parts.size() == 2) {
    const std::uint64_t n = parse_uint(parts[1], "n");
    if (n == 0) fail(ErrorKind::InvalidArgument, "zn:<n> needs n >= 1");
    if (n > kMaxGroupOrder) fail(ErrorKind::OrderCapExceeded, "zn order exceeds the group cap");
    return cyclic_group(n);
  }
  std::ifstream file{std::string(spec)};
  if (!file) fail(ErrorKind::InvalidArgument, "unknown group '" + std::string(spec) + "'");
  return read_group(file);
}

std::optional<SplitGroup> resolve_split_group(std::string_view spec) {
  return builtin_split(spec);
}

Cochain read_cochain(std::istream& in, const GroupPtr& g, unsigned degree, Residue modulus) {
  std::string line;
  if (!next_content_line(in, line)) fail(ErrorKind::ParseError, "empty cochain file");
  std::istringstream header(line);
  std::string keyword, name, degree_text, modulus_text;
  if (!(header >> keyword >> name >> degree_text >> modulus_text) || keyword != "cochain") {
    fail(ErrorKind::ParseError, "cochain file must start with 'cochain <group> <degree> <modulus>'");
  }
  if (parse_uint(degree_text, "degree") != degree) {
    fail(ErrorKind::MismatchedContext, "cochain file degree differs from --degree");
  }
  if (parse_uint(modulus_text, "modulus") != modulus) {
    fail(ErrorKind::MismatchedContext, "cochain file modulus differs from --n");
  }
  const std::size_t size = cochain_size(g->order(), degree);
  std::vector<Residue> values;
  values.reserve(size);
  while (next_content_line(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t\r");
    const std::uint64_t v = parse_uint(std::string_view(line).substr(first, last - first + 1), "value");
    if (v >= modulus) fail(ErrorKind::InvalidArgument, "cochain value not reduced mod n");
    values.push_back(static_cast<Residue>(v));
  }
  if (values.size() != size) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(size) + " cochain values, got " +
                                    std::to_string(values.size()));
  }
  return Cochain(g, degree, modulus, std::move(values));
}

void write_cochain(std::ostream& out, const Cochain& c) {
  out << "cochain " << header_name(c.group()) << ' ' << c.degree()
      << ' ' << c.modulus() << '\n';
  for (Residue v : c.values()) out << v << '\n';
}

}  // namespace acs
