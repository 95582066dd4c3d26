#include "sepsym/io.hpp"

#include <charconv>
#include <nlohmann/json.hpp>

namespace sepsym {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t parse_number(std::string_view text, std::size_t& pos) {
  std::uint64_t value = 0;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [next, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || next == begin)
    throw Error(ErrorKind::BadLiteral, "expected a number in '" + std::string(text) + "'");
  pos += static_cast<std::size_t>(next - begin);
  return value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw Error(ErrorKind::BadLiteral,
                std::string("expected '") + c + "' in '" + std::string(text) + "'");
  ++pos;
}

}  // namespace

std::string format_orbit(const OrbitMultiplicity& orbit) {
  std::string out;
  const auto& counts = orbit.counts();
  bool first = true;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1) + ":" + std::to_string(counts[i]);
    first = false;
  }
  out += "/" + std::to_string(orbit.ambient());
  return out;
}

OrbitMultiplicity parse_orbit(const Field& field, std::string_view literal) {
  std::vector<std::uint32_t> counts(field.q() - 1, 0);
  std::size_t pos = 0;
  while (pos < literal.size() && literal[pos] != '/') {
    std::uint64_t a = parse_number(literal, pos);
    expect_char(literal, pos, ':');
    std::uint64_t c = parse_number(literal, pos);
    if (a < 1 || a >= field.q())
      throw Error(ErrorKind::BadLiteral, "element index out of range in orbit literal");
    if (counts[a - 1] != 0)
      throw Error(ErrorKind::BadLiteral, "duplicate element in orbit literal");
    counts[a - 1] = static_cast<std::uint32_t>(c);
    if (pos < literal.size() && literal[pos] == ',') ++pos;
  }
  expect_char(literal, pos, '/');
  std::uint64_t n = parse_number(literal, pos);
  if (pos != literal.size()) throw Error(ErrorKind::BadLiteral, "trailing data in orbit literal");
  return OrbitMultiplicity(field, static_cast<unsigned>(n), std::move(counts));
}

std::string format_multi_orbit(const MultiOrbit& orbit) {
  std::string out;
  bool first = true;
  for (std::uint64_t idx = 0; idx < orbit.point_count(); ++idx) {
    std::uint32_t c = orbit.counts()[static_cast<std::size_t>(idx)];
    if (c == 0) continue;
    if (!first) out += ';';
    out += '(';
    auto point = orbit.decode_point(idx);
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(point[j].v);
    }
    out += "):" + std::to_string(c);
    first = false;
  }
  out += "/" + std::to_string(orbit.ambient());
  return out;
}

MultiOrbit parse_multi_orbit(const Field& field, unsigned m, std::string_view literal) {
  std::uint64_t points = 1;
  for (unsigned i = 0; i < m; ++i) points *= field.q();
  std::vector<std::uint32_t> counts(points, 0);

  std::size_t pos = 0;
  while (pos < literal.size() && literal[pos] != '/') {
    expect_char(literal, pos, '(');
    std::uint64_t index = 0;
    for (unsigned j = 0; j < m; ++j) {
      if (j) expect_char(literal, pos, ',');
      std::uint64_t coord = parse_number(literal, pos);
      if (coord >= field.q())
        throw Error(ErrorKind::BadLiteral, "coordinate out of range in multi-orbit literal");
      index = index * field.q() + coord;
    }
    expect_char(literal, pos, ')');
    expect_char(literal, pos, ':');
    std::uint64_t c = parse_number(literal, pos);
    if (counts[index] != 0)
      throw Error(ErrorKind::BadLiteral, "duplicate point in multi-orbit literal");
    counts[index] = static_cast<std::uint32_t>(c);
    if (pos < literal.size() && literal[pos] == ';') ++pos;
  }
  expect_char(literal, pos, '/');
  std::uint64_t n = parse_number(literal, pos);
  if (pos != literal.size())
    throw Error(ErrorKind::BadLiteral, "trailing data in multi-orbit literal");
  return MultiOrbit(field, m, static_cast<unsigned>(n), std::move(counts));
}

std::string witness_json(const WitnessPair& witness) {
  ordered_json j;
  j["q"] = witness.v.field().q();
  j["n"] = witness.v.ambient();
  j["k"] = witness.k;
  j["kind"] = witness.kind == WitnessPair::Kind::Collision ? "collision" : "irreplaceable";
  j["v"] = format_orbit(witness.v);
  j["w"] = format_orbit(witness.w);
  return j.dump();
}

std::string multi_witness_json(const Field& field, const MultiWitness& witness) {
  ordered_json j;
  j["q"] = field.q();
  j["m"] = witness.v.copies();
  j["n"] = witness.v.ambient();
  j["kind"] = "collision";
  j["v"] = format_multi_orbit(witness.v);
  j["w"] = format_multi_orbit(witness.w);
  return j.dump();
}

std::string bounds_json(const BoundsReport& report) {
  ordered_json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["setSize"] = report.set_size;
  j["orbitCount"] = report.orbit_count.str();
  j["klrBound"] = report.klr_bound;
  if (report.defect) j["defect"] = *report.defect;
  return j.dump();
}

}  // namespace sepsym
