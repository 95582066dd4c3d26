// sepsym: batch verification, search, and reports for separating sets of
// elementary symmetric and multisymmetric polynomials over finite fields.
//
// Exit codes: 0 success; 2 a verified statement failed (or the input set does
// not separate); 3 negative result (no witness / no preimage / not equal);
// 64 usage or input errors; 65 enumeration or recovery scale exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <sepsym/io.hpp>
#include <sepsym/multisym.hpp>
#include <sepsym/separating.hpp>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace sepsym;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitUsage = 64;
constexpr int kExitScale = 65;

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

class RecordSink {
 public:
  explicit RecordSink(const OutputOptions& opts) : opts_(opts) {}

  void add(ordered_json record) { records_.push_back(std::move(record)); }
  void add_line(std::string line) { records_.push_back(std::move(line)); }

  void flush() {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts_.out_path.empty()) {
      file.open(opts_.out_path);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + opts_.out_path);
      out = &file;
    }
    if (opts_.format == "json")
      write_json(*out);
    else if (opts_.format == "csv")
      write_csv(*out);
    else
      write_table(*out);
  }

 private:
  static std::string cell(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  void write_json(std::ostream& out) {
    for (const auto& r : records_) {
      if (std::holds_alternative<std::string>(r))
        out << std::get<std::string>(r) << "\n";
      else
        out << std::get<ordered_json>(r).dump() << "\n";
    }
  }

  void write_csv(std::ostream& out) {
    std::vector<std::string> header;
    for (const auto& r : records_) {
      if (std::holds_alternative<std::string>(r)) {
        out << std::get<std::string>(r) << "\n";
        header.clear();
        continue;
      }
      const auto& j = std::get<ordered_json>(r);
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
      if (keys != header) {
        header = keys;
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
        out << "\n";
      }
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        std::string c = cell(it.value());
        bool quote = c.find_first_of(",\"\n") != std::string::npos;
        out << (first ? "" : ",");
        if (quote) {
          out << '"';
          for (char ch : c) out << (ch == '"' ? "\"\"" : std::string(1, ch));
          out << '"';
        } else {
          out << c;
        }
        first = false;
      }
      out << "\n";
    }
  }

  void write_table(std::ostream& out) {
    // group consecutive records sharing a schema, align columns
    std::size_t i = 0;
    while (i < records_.size()) {
      if (std::holds_alternative<std::string>(records_[i])) {
        out << std::get<std::string>(records_[i]) << "\n";
        ++i;
        continue;
      }
      std::vector<std::string> keys;
      const auto& j0 = std::get<ordered_json>(records_[i]);
      for (auto it = j0.begin(); it != j0.end(); ++it) keys.push_back(it.key());
      std::size_t end = i;
      while (end < records_.size() && std::holds_alternative<ordered_json>(records_[end])) {
        std::vector<std::string> k2;
        const auto& j = std::get<ordered_json>(records_[end]);
        for (auto it = j.begin(); it != j.end(); ++it) k2.push_back(it.key());
        if (k2 != keys) break;
        ++end;
      }
      std::vector<std::size_t> width(keys.size());
      for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
      for (std::size_t r = i; r < end; ++r)
        for (std::size_t c = 0; c < keys.size(); ++c)
          width[c] = std::max(width[c], cell(std::get<ordered_json>(records_[r])[keys[c]]).size());
      for (std::size_t c = 0; c < keys.size(); ++c)
        out << (c ? "  " : "") << keys[c] << std::string(width[c] - keys[c].size(), ' ');
      out << "\n";
      for (std::size_t r = i; r < end; ++r) {
        for (std::size_t c = 0; c < keys.size(); ++c) {
          std::string s = cell(std::get<ordered_json>(records_[r])[keys[c]]);
          out << (c ? "  " : "") << s << std::string(width[c] - s.size(), ' ');
        }
        out << "\n";
      }
      i = end;
    }
  }

  OutputOptions opts_;
  std::vector<std::variant<ordered_json, std::string>> records_;
};

struct CommonOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned workers = 1;
  OutputOptions output;

  EnumOptions enum_options() const { return EnumOptions{cap, workers}; }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--cap", common.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", common.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", common.output.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", common.output.out_path, "Write output to a file");
}

ordered_json witness_record(const WitnessPair& witness) {
  return ordered_json::parse(witness_json(witness));
}

std::vector<unsigned> parse_degree_list(const std::string& text) {
  std::vector<unsigned> degrees;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw Error(ErrorKind::InvalidArgument, "empty degree in list");
    degrees.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  return degrees;
}

std::vector<Fe> parse_coeff_list(const Field& field, const std::string& text) {
  std::vector<Fe> coeffs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    unsigned long v = std::stoul(part);
    if (v >= field.q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of field");
    coeffs.push_back(Fe{static_cast<std::uint32_t>(v)});
  }
  return coeffs;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned n = static_cast<unsigned>(std::stoul(text));
    return {n, n};
  }
  unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
  unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty range");
  return {lo, hi};
}

int cmd_verify_main(unsigned q, unsigned n, const CommonOptions& common) {
  Field field = Field::make_q(q);
  IndexSet A = index_set(q, n);
  SeparatingOutcome outcome = is_separating(field, n, A, common.enum_options());

  RecordSink sink(common.output);
  ordered_json rec;
  rec["cmd"] = "verify-main";
  rec["q"] = q;
  rec["n"] = n;
  rec["set"] = A.degrees();
  rec["setSize"] = A.size();
  rec["orbitCount"] = orbit_count(field, n).str();
  rec["separating"] = outcome.separating();
  if (outcome.witness) rec.update(witness_record(*outcome.witness));
  sink.add(std::move(rec));
  sink.flush();
  return outcome.separating() ? kExitOk : kExitFalsified;
}

int cmd_reconstruct(unsigned q, unsigned n, const std::string& values_path, bool allow_q9,
                    const CommonOptions& common) {
  Field field = Field::make_q(q);
  std::ifstream file(values_path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + values_path);
  ordered_json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed values file: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidArgument, "values file must be an object");

  std::map<unsigned, Fe> values;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    unsigned degree = static_cast<unsigned>(std::stoul(it.key()));
    std::uint64_t v = it.value().get<std::uint64_t>();
    if (v >= field.q()) throw Error(ErrorKind::InvalidArgument, "value out of field");
    values[degree] = Fe{static_cast<std::uint32_t>(v)};
  }

  auto orbit = reconstruct(field, n, values, RecoverOptions{allow_q9});
  RecordSink sink(common.output);
  sink.add_line(orbit ? format_orbit(*orbit) : "NO_PREIMAGE");
  sink.flush();
  return orbit ? kExitOk : kExitNotFound;
}

int cmd_search(unsigned q, unsigned n, std::optional<unsigned> k, bool all_k,
               const CommonOptions& common) {
  Field field = Field::make_q(q);
  std::vector<unsigned> ks;
  if (all_k)
    for (unsigned d = 1; d <= n; ++d) ks.push_back(d);
  else
    ks.push_back(*k);

  RecordSink sink(common.output);
  bool any_found = false;
  for (unsigned degree : ks) {
    auto witness = irreplaceable_witness(field, n, degree, common.enum_options());
    ordered_json rec;
    rec["cmd"] = "search";
    rec["q"] = q;
    rec["n"] = n;
    rec["k"] = degree;
    rec["found"] = witness.has_value();
    if (witness) {
      any_found = true;
      rec.update(witness_record(*witness));
    }
    sink.add(std::move(rec));
  }
  sink.flush();
  return any_found ? kExitOk : kExitNotFound;
}

int cmd_minimal(unsigned q, unsigned n, const std::string& set_text, bool all_mode,
                const CommonOptions& common) {
  Field field = Field::make_q(q);
  IndexSet A = set_text.empty() ? index_set(q, n) : IndexSet(q, n, parse_degree_list(set_text));
  auto subsets = minimal_subsets(field, n, A, all_mode ? MinimalMode::All : MinimalMode::OneGreedy,
                                 common.enum_options());

  RecordSink sink(common.output);
  for (const auto& subset : subsets) {
    ordered_json rec;
    rec["cmd"] = "minimal";
    rec["q"] = q;
    rec["n"] = n;
    rec["mode"] = all_mode ? "all" : "one_greedy";
    rec["set"] = subset.degrees();
    sink.add(std::move(rec));
  }
  sink.flush();
  return kExitOk;
}

int cmd_bounds(unsigned q, const std::string& range_text, const CommonOptions& common) {
  auto [lo, hi] = parse_range(range_text);
  RecordSink sink(common.output);
  for (unsigned n = lo; n <= hi; ++n)
    sink.add(ordered_json::parse(bounds_json(bounds_report(q, n))));
  sink.flush();
  return kExitOk;
}

int cmd_multisym(unsigned q, unsigned m, unsigned n, const std::string& family_name, bool verify,
                 const CommonOptions& common) {
  Field field = Field::make_q(q);
  MultiBounds bounds = multi_bounds(field, m, n);

  RecordSink sink(common.output);
  ordered_json rec;
  rec["cmd"] = "multisym";
  rec["q"] = q;
  rec["m"] = m;
  rec["n"] = n;
  rec["orbitCount"] = bounds.orbit_count.str();
  rec["klrBound"] = bounds.klr_bound;
  rec["mainSize"] = bounds.main_size;
  rec["amitsurSize"] = bounds.amitsur_size;
  rec["cheapSize"] = bounds.cheap_size;
  sink.add(std::move(rec));

  int exit_code = kExitOk;
  if (verify) {
    std::vector<std::string> names;
    if (family_name == "all")
      names = {"main", "amitsur", "cheap"};
    else
      names = {family_name};
    for (const auto& name : names) {
      std::vector<FamilyMember> family;
      if (name == "main")
        family = family_main(field, m, n);
      else if (name == "amitsur")
        family = family_amitsur(m, n);
      else
        family = family_cheap(m, n);
      auto outcome = is_separating_multi(field, m, n, family, common.enum_options());
      ordered_json vrec;
      vrec["cmd"] = "multisym-verify";
      vrec["q"] = q;
      vrec["m"] = m;
      vrec["n"] = n;
      vrec["family"] = name;
      vrec["familySize"] = family.size();
      vrec["separating"] = outcome.separating();
      if (outcome.witness) {
        vrec.update(ordered_json::parse(multi_witness_json(field, *outcome.witness)));
        exit_code = kExitFalsified;
      }
      sink.add(std::move(vrec));
    }
  }
  sink.flush();
  return exit_code;
}

int cmd_lacunary(unsigned q, const std::string& f_text, const std::string& g_text,
                 const CommonOptions& common) {
  Field field = Field::make_q(q);
  std::vector<Fe> f = parse_coeff_list(field, f_text);
  std::vector<Fe> g = parse_coeff_list(field, g_text);
  LacunaryResult result = lacunary_check(field, f, g);

  RecordSink sink(common.output);
  ordered_json rec;
  rec["cmd"] = "lacunary";
  rec["q"] = q;
  rec["n"] = f.size() - 1;
  switch (result.status) {
    case LacunaryResult::Status::Equal:
      rec["result"] = "equal";
      break;
    case LacunaryResult::Status::DifferAt:
      rec["result"] = "differ_at";
      rec["degree"] = result.degree;
      break;
    case LacunaryResult::Status::NotSplit:
      rec["result"] = "not_split";
      rec["which"] = result.which == 0 ? "f" : "g";
      break;
  }
  sink.add(std::move(rec));
  sink.flush();
  return result.status == LacunaryResult::Status::Equal ? kExitOk : kExitNotFound;
}

int cmd_witness_table(const std::string& fixtures_path, const CommonOptions& common) {
  std::ifstream file(fixtures_path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + fixtures_path);
  ordered_json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed fixture file: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::InvalidArgument, "fixture file must be an array");

  RecordSink sink(common.output);
  bool all_ok = true;
  for (const auto& row : doc) {
    unsigned q = row.at("q").get<unsigned>();
    unsigned n = row.at("n").get<unsigned>();
    unsigned k = row.at("k").get<unsigned>();
    Field field = Field::make_q(q);
    auto load = [&](const char* key) {
      std::vector<Fe> v;
      for (const auto& x : row.at(key)) v.push_back(field.element(x.get<std::uint32_t>()));
      return orbit_from_vector(field, v);
    };
    WitnessPair witness{load("v"), load("w"), k, WitnessPair::Kind::Irreplaceable};
    bool ok = witness_valid(witness);
    all_ok = all_ok && ok;

    ordered_json rec;
    rec["cmd"] = "witness-table";
    rec["q"] = q;
    rec["n"] = n;
    rec["k"] = k;
    rec["ok"] = ok;
    rec["v"] = format_orbit(witness.v);
    rec["w"] = format_orbit(witness.w);
    sink.add(std::move(rec));
  }
  sink.flush();
  return all_ok ? kExitOk : kExitFalsified;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::TooMany:
    case ErrorKind::UnsupportedScale:
      return kExitScale;
    case ErrorKind::Falsified:
    case ErrorKind::NotSeparating:
      return kExitFalsified;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating sets of (multi)symmetric polynomials over finite fields"};
  app.require_subcommand(1);

  unsigned q = 0, n = 0, m = 1;
  std::optional<unsigned> k;
  bool all_k = false, all_mode = false, verify = false, allow_q9 = false;
  std::string values_path, set_text, range_text, family_name = "all", f_text, g_text;
  std::string fixtures_path;
  if (const char* env = std::getenv("SEPSYM_FIXTURES")) fixtures_path = env;
  if (fixtures_path.empty()) fixtures_path = "data/witness_table.json";
  CommonOptions common;

  auto* verify_main = app.add_subcommand("verify-main", "Verify the [n]_q separating set");
  verify_main->add_option("--q", q, "Field size (prime power)")->required();
  verify_main->add_option("--n", n, "Number of variables")->required();
  add_common(verify_main, common);

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Rebuild an orbit from its s-values on [n]_q");
  reconstruct_cmd->add_option("--q", q)->required();
  reconstruct_cmd->add_option("--n", n)->required();
  reconstruct_cmd->add_option("--values", values_path, "JSON object degree -> element index")
      ->required();
  reconstruct_cmd->add_flag("--allow-q9", allow_q9, "Permit the q = 9 recovery search");
  add_common(reconstruct_cmd, common);

  auto* search = app.add_subcommand("search", "Search for an irreplaceability witness");
  search->add_option("--q", q)->required();
  search->add_option("--n", n)->required();
  auto* k_opt = search->add_option("--k", k, "Degree to test");
  search->add_flag("--all-k", all_k, "Test every degree 1..n");
  add_common(search, common);

  auto* minimal = app.add_subcommand("minimal", "Minimal separating subsets");
  minimal->add_option("--q", q)->required();
  minimal->add_option("--n", n)->required();
  minimal->add_option("--set", set_text, "Comma-separated degrees (default [n]_q)");
  minimal->add_flag("--all", all_mode, "List every inclusion-minimal subset");
  add_common(minimal, common);

  auto* bounds = app.add_subcommand("bounds", "Set size vs the log_q orbit-count bound");
  bounds->add_option("--q", q)->required();
  bounds->add_option("--n", range_text, "n or a range lo..hi")->required();
  add_common(bounds, common);

  auto* multisym = app.add_subcommand("multisym", "Multisymmetric families and verification");
  multisym->add_option("--q", q)->required();
  multisym->add_option("--m", m, "Number of vector copies")->required();
  multisym->add_option("--n", n)->required();
  multisym->add_option("--family", family_name, "main, amitsur, cheap, or all")
      ->check(CLI::IsMember({"main", "amitsur", "cheap", "all"}));
  multisym->add_flag("--verify", verify, "Run the separating verification");
  add_common(multisym, common);

  auto* lacunary = app.add_subcommand("lacunary", "Compare split polynomials at [n]_q positions");
  lacunary->add_option("--q", q)->required();
  lacunary->add_option("--f", f_text, "Monic coefficients low-to-high")->required();
  lacunary->add_option("--g", g_text, "Monic coefficients low-to-high")->required();
  add_common(lacunary, common);

  auto* witness_table = app.add_subcommand("witness-table", "Replay the shipped witness fixtures");
  witness_table->add_option("--fixtures", fixtures_path, "Fixture file path");
  add_common(witness_table, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_main) return cmd_verify_main(q, n, common);
    if (*reconstruct_cmd) return cmd_reconstruct(q, n, values_path, allow_q9, common);
    if (*search) {
      if (all_k == (k_opt->count() > 0))
        throw Error(ErrorKind::InvalidArgument, "pass exactly one of --k or --all-k");
      return cmd_search(q, n, k, all_k, common);
    }
    if (*minimal) return cmd_minimal(q, n, set_text, all_mode, common);
    if (*bounds) return cmd_bounds(q, range_text, common);
    if (*multisym) return cmd_multisym(q, m, n, family_name, verify, common);
    if (*lacunary) return cmd_lacunary(q, f_text, g_text, common);
    if (*witness_table) return cmd_witness_table(fixtures_path, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
