#pragma once

// Line-based DGA text format:
//
//   modulus 0
//   gen a1 1
//   gen b1 0
//   d a1 = 1 + b1 + b1 b2 b3
//
// '#' starts a comment; a missing `d` line means a zero differential.

#include <string>
#include <string_view>
#include <vector>

#include "lch/algebra.hpp"

namespace lch {

struct ParseResult {
  Dga dga;
  std::vector<std::string> warnings;  // e.g. terms cancelled mod 2
};

/// Throws ContractError with a "line N: " prefix on malformed input.
ParseResult parse_dga(std::string_view text);

/// Canonical text: modulus, generators in order, nonzero differentials in order.
std::string serialize_dga(const Dga& d);

std::string read_file(const std::string& path);

}  // namespace lch
