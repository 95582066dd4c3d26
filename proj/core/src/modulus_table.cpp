#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepsym/gf.hpp"

namespace sepsym {
namespace detail {

namespace {

// Conway polynomials for every extension field within the default size grid
// that the search code reaches. Coefficients low-to-high, monic. The file
// named by SEPSYM_MODULUS_TABLE takes precedence when set.
struct TableEntry {
  std::uint32_t q;
  std::vector<unsigned> coeffs;
};

const std::vector<TableEntry>& builtin_table() {
  static const std::vector<TableEntry> table = {
      {4, {1, 1, 1}},           // t^2 + t + 1
      {8, {1, 1, 0, 1}},        // t^3 + t + 1
      {9, {2, 2, 1}},           // t^2 + 2t + 2
      {16, {1, 1, 0, 0, 1}},    // t^4 + t + 1
      {25, {2, 4, 1}},          // t^2 + 4t + 2
      {27, {1, 2, 0, 1}},       // t^3 + 2t + 1
      {32, {1, 0, 1, 0, 0, 1}}, // t^5 + t^2 + 1
      {49, {3, 6, 1}},          // t^2 + 6t + 3
      {64, {1, 1, 0, 1, 1, 0, 1}},  // t^6 + t^4 + t^3 + t + 1
      {81, {2, 0, 0, 2, 1}},    // t^4 + 2t^3 + 2
      {121, {2, 7, 1}},         // t^2 + 7t + 2
      {125, {3, 3, 0, 1}},      // t^3 + 3t + 3
  };
  return table;
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> parse_modulus_table(
    const std::string& text) {
  std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::uint64_t q;
    if (!(ls >> q)) continue;  // blank line
    std::vector<unsigned> coeffs;
    std::uint64_t c;
    while (ls >> c) coeffs.push_back(static_cast<unsigned>(c));
    if (!ls.eof() || coeffs.size() < 2)
      throw Error(ErrorKind::BadModulusTable,
                  "malformed modulus table line " + std::to_string(lineno));
    entries.emplace_back(static_cast<std::uint32_t>(q), std::move(coeffs));
  }
  return entries;
}

std::optional<std::vector<unsigned>> lookup_modulus(std::uint32_t q) {
  if (const char* path = std::getenv("SEPSYM_MODULUS_TABLE")) {
    std::ifstream file(path);
    if (!file)
      throw Error(ErrorKind::BadModulusTable, std::string("cannot open modulus table ") + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    for (auto& [eq, coeffs] : parse_modulus_table(buf.str()))
      if (eq == q) return coeffs;
    return std::nullopt;
  }
  for (const auto& entry : builtin_table())
    if (entry.q == q) return entry.coeffs;
  return std::nullopt;
}

}  // namespace detail
}  // namespace sepsym
