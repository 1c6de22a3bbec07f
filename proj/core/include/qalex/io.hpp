#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalex/alexander_pair.hpp"
#include "qalex/cocycle.hpp"
#include "qalex/quandle.hpp"

namespace qalex {

/// `quandle n` then n rows of n entries (0-based); `#` comments.
OpTable parse_quandle(std::string_view text);
std::string format_quandle(const OpTable& t);

/// `pair n over <group>` then an n-row f1 block and an n-row f2 block, each row
/// holding n comma-separated ring elements. An optional third block gives
/// the inverses of f1; otherwise signed monomials are inverted automatically.
AlexanderPairTable parse_pair(std::string_view text);
std::string format_pair(const AlexanderPairTable& p);

/// `cocycle n over Z<m>` then n rows of n exponents, optionally followed by a
/// `quandle n` section carrying the quandle the table lives on.
struct CocycleFile {
  int n = 0;
  AbelianGroup group;
  std::vector<std::int64_t> exponents;
  std::optional<OpTable> quandle;
};
CocycleFile parse_cocycle_file(std::string_view text);
std::string format_cocycle_file(const CocycleFile& f);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace qalex
