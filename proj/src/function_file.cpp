#include "rotsym/function_file.hpp"

#include <json.hpp>

namespace rotsym {

namespace {

using nlohmann::json;

std::size_t hex_length(int n) { return n <= 2 ? 1 : std::size_t{1} << (n - 2); }

int nibble_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

std::string table_to_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(hex_length(f.num_vars()), '0');
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::uint64_t word = f.words()[k / 16];
    out[k] = kDigits[(word >> (4 * (k % 16))) & 0xF];
  }
  return out;
}

BooleanFunction table_from_hex(int n, std::string_view hex) {
  BooleanFunction f(n);
  if (hex.size() != hex_length(n)) {
    throw FunctionFileError("table_hex for n=" + std::to_string(n) + " must have " + std::to_string(hex_length(n)) +
                            " characters, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(f.words().size(), 0);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const int v = nibble_value(hex[k]);
    if (v < 0) throw FunctionFileError("table_hex contains a non-hex character");
    words[k / 16] |= static_cast<std::uint64_t>(v) << (4 * (k % 16));
  }
  if (n < 2 && (words[0] >> f.size()) != 0) throw FunctionFileError("table_hex sets bits beyond 2^n");
  return BooleanFunction::from_words(n, std::move(words));
}

BooleanFunction parse_function_file(std::string_view text, int cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FunctionFileError(std::string("function file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw FunctionFileError("function file needs an integer field \"n\"");
  }
  const int n = doc["n"].get<int>();
  check_table_vars(n, cap);
  const bool has_anf = doc.contains("anf");
  const bool has_table = doc.contains("table_hex");
  if (has_anf == has_table) throw FunctionFileError("function file needs exactly one of \"anf\" or \"table_hex\"");

  if (has_table) {
    if (!doc["table_hex"].is_string()) throw FunctionFileError("\"table_hex\" must be a string");
    return table_from_hex(n, doc["table_hex"].get<std::string>());
  }
  if (!doc["anf"].is_array()) throw FunctionFileError("\"anf\" must be a list of monomials");
  AnfForm anf(n);
  for (const auto& m : doc["anf"]) {
    if (!m.is_array()) throw FunctionFileError("each monomial must be a list of variable indices");
    Monomial mono;
    for (const auto& v : m) {
      if (!v.is_number_integer()) throw FunctionFileError("variable indices must be integers");
      mono.push_back(v.get<int>());
    }
    try {
      anf.toggle(std::move(mono));
    } catch (const std::out_of_range& e) {
      throw FunctionFileError(e.what());
    }
  }
  return anf_to_table(anf, cap);
}

std::string format_function_file(const BooleanFunction& f) {
  json doc;
  doc["n"] = f.num_vars();
  doc["table_hex"] = table_to_hex(f);
  return doc.dump() + "\n";
}

std::string format_function_file(const AnfForm& anf) {
  json doc;
  doc["n"] = anf.num_vars();
  doc["anf"] = json::array();
  for (const auto& m : anf.monomials()) doc["anf"].push_back(m);
  return doc.dump() + "\n";
}

}  // namespace rotsym
