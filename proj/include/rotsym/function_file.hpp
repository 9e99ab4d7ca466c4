#pragma once

// Function file: a JSON object with "n" and exactly one of
//   "anf":       list of monomials, each a sorted list of variable indices
//   "table_hex": truth table as hex, little-endian nibbles (character k holds
//                table bits 4k..4k+3, bit 4k in the nibble's lowest bit)

#include <stdexcept>
#include <string>
#include <string_view>

#include "rotsym/boolfn.hpp"

namespace rotsym {

class FunctionFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string table_to_hex(const BooleanFunction& f);
BooleanFunction table_from_hex(int n, std::string_view hex);

/// Realizes the function described by `text` (anf or table form).
BooleanFunction parse_function_file(std::string_view text, int cap = kDefaultMaxTableVars);

std::string format_function_file(const BooleanFunction& f);
std::string format_function_file(const AnfForm& anf);

}  // namespace rotsym
