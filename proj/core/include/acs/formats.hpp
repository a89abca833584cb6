#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "acs/cochain.hpp"
#include "acs/group.hpp"

namespace acs {

/// Reads the plain-text group format:
///
///   group <name> <order>
///   <row 0 of the multiplication table>
///   ...
///
/// Blank lines and lines starting with '#' are skipped. Throws
/// Error{ParseError} on malformed input and the usual group errors on
/// invalid tables.
GroupPtr read_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroup& g);

/// A builtin group name (`zn:<n>`, `s3`, `d4`, `q8`, `heis:<d>:<n>`,
/// `gl2:<q>`) or, failing that, a path to a group file.
GroupPtr resolve_group(std::string_view spec);

/// Same lookup, but keeps the (φ, ψ) split of the builtin families.
/// Empty for groups without a fixed split (q8, zn, files).
std::optional<SplitGroup> resolve_split_group(std::string_view spec);

/// Reads the cochain dump format:
///
///   cochain <group> <degree> <modulus>
///   <value>
///   ...
///
/// The group named in the header is informational; values are checked
/// against `g`, `degree` and `modulus` supplied by the caller.
Cochain read_cochain(std::istream& in, const GroupPtr& g, unsigned degree, Residue modulus);
void write_cochain(std::ostream& out, const Cochain& c);

}  // namespace acs
