// neighborly: construct / verify / solve / bounds / convert front door.
// Exit codes: 0 success, 1 domain violation found, 2 usage or parse error,
// 3 resource limit (timeout, dimension/materialization caps).
// Grammar and output formats are frozen in docs/cli.md.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "neighborly/bounds.hpp"
#include "neighborly/boxes.hpp"
#include "neighborly/construction.hpp"
#include "neighborly/errors.hpp"
#include "neighborly/family_io.hpp"
#include "neighborly/jokerstring.hpp"
#include "neighborly/solver.hpp"

namespace {

using nlohmann::json;
namespace nb = neighborly;
namespace mp = boost::multiprecision;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr const char* kSchemaVersion = "1";

// "A..B" or a single "A".
std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw nb::InvalidParams("cannot parse range '" + text +
                            "' (expected A or A..B)");
  }
}

// Output sink: "-" or empty means stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw nb::Error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

nb::Family read_family_arg(const std::string& path) {
  if (path.empty() || path == "-") return nb::read_family(std::cin);
  return nb::read_family_file(path);
}

std::string rational_str(const nb::Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string source_str(nb::SolveSource s) {
  return s == nb::SolveSource::ClosedForm ? "closed-form" : "clique-search";
}

int cmd_construct(int d, int s, const std::string& out, bool as_json) {
  nb::ConstructionParams params(d, s);
  nb::Family family = nb::build_family(params);
  nb::ConstructionReport rep = nb::construction_report(params, family);
  Sink sink(out);
  if (as_json) {
    json cells = json::array();
    for (const auto& cell : rep.cells)
      cells.push_back({{"epsilon", cell.eps.str()}, {"size", cell.size}});
    json doc = {{"schema_version", kSchemaVersion},
                {"command", "construct"},
                {"d", d},
                {"s", s},
                {"k", rep.k},
                {"size", rep.size},
                {"formula", rep.formula},
                {"match", rep.match},
                {"cells", cells}};
    sink.stream() << doc.dump(2) << '\n';
  } else {
    nb::write_family(sink.stream(), family);
    std::cerr << "size=" << rep.size << " formula=" << rep.formula
              << " match=" << (rep.match ? "true" : "false") << '\n';
  }
  return rep.match ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& path, int k) {
  nb::Family family = [&] {
    try {
      return read_family_arg(path);
    } catch (const nb::EmptyFamily&) {
      // An empty file denotes the empty family, k-neighborly by convention.
      std::cout << "k-neighborly: yes, min_dist=-, max_dist=- (empty family)"
                << '\n';
      std::exit(kExitOk);
    }
  }();
  nb::NeighborlyCheck check = nb::is_k_neighborly(family, k);
  if (check.ok) {
    if (family.size() < 2) {
      std::cout << "k-neighborly: yes, min_dist=-, max_dist=- "
                   "(fewer than 2 members)"
                << '\n';
    } else {
      nb::DistanceStats st = nb::distance_stats(family);
      std::cout << "k-neighborly: yes, min_dist=" << st.min
                << ", max_dist=" << st.max << '\n';
    }
    return kExitOk;
  }
  const auto& v = *check.violation;
  std::cout << "k-neighborly: no, violation: " << family[v.i].str() << ' '
            << family[v.j].str() << " dist=" << v.distance << '\n';
  return kExitViolation;
}

int cmd_solve(int k, int d, std::optional<double> budget,
              const std::string& witness_path, bool seed_from_construction,
              bool cross_validate) {
  nb::SearchConfig cfg;
  cfg.time_budget_seconds = budget;
  cfg.report_witness = !witness_path.empty();
  if (seed_from_construction) {
    int s = d - k;
    if (d % 2 != 0 || s < 1 || s > d / 2)
      throw nb::InvalidParams(
          "--seed-from-construction needs even d and 1 <= d-k <= d/2");
    cfg.seed_lower_bound =
        nb::lower_bound_formula(nb::ConstructionParams(d, s));
  }
  nb::SolveResult res = nb::exact_n(k, d, cfg, cross_validate);
  json doc = {{"schema_version", kSchemaVersion},
              {"command", "solve"},
              {"k", k},
              {"d", d},
              {"value", res.value},
              {"status", res.status == nb::SolveStatus::Exact
                             ? "exact"
                             : "lower-bound-only"},
              {"source", source_str(res.source)},
              {"elapsed_ms", res.elapsed_seconds * 1000.0},
              {"nodes", res.nodes}};
  if (!witness_path.empty()) {
    if (res.witness) {
      nb::write_family_file(witness_path, *res.witness);
      doc["witness_file"] = witness_path;
    } else {
      doc["witness_file"] = nullptr;
      std::cerr << "no witness materialized for this instance\n";
    }
  }
  std::cout << doc.dump(2) << '\n';
  return res.status == nb::SolveStatus::Exact ? kExitOk : kExitResource;
}

void bounds_csv(std::ostream& os, const std::vector<nb::BoundReport>& rows) {
  os << "k,d,construction_lower,two_cell_lower,alon_lower,cwxy_upper,"
        "simplified_upper,exact,exact_source\n";
  for (const auto& r : rows) {
    os << r.k << ',' << r.d << ',';
    if (r.construction_lower) os << *r.construction_lower;
    os << ',';
    if (r.two_cell_lower) os << *r.two_cell_lower;
    os << ',';
    os << nb::to_decimal(r.alon_lower, 6, nb::RoundDirection::Down) << ',';
    if (r.cwxy_upper)
      os << nb::to_decimal(*r.cwxy_upper, 6, nb::RoundDirection::Up);
    os << ',';
    if (r.simplified_upper)
      os << nb::to_decimal(*r.simplified_upper, 6, nb::RoundDirection::Up);
    os << ',';
    if (r.exact) os << *r.exact;
    os << ',';
    if (r.exact_source) os << source_str(*r.exact_source);
    os << '\n';
  }
}

json bounds_json(const std::vector<nb::BoundReport>& rows) {
  json out = {{"schema_version", kSchemaVersion},
              {"command", "bounds"},
              {"rows", json::array()}};
  for (const auto& r : rows) {
    json row = {{"k", r.k},
                {"d", r.d},
                {"s", r.s},
                {"alon_lower", rational_str(r.alon_lower)},
                {"alon_upper", rational_str(r.alon_upper)},
                {"gkp_reference", rational_str(nb::gkp_reference(r.k, r.d))}};
    row["construction_lower"] =
        r.construction_lower ? json(*r.construction_lower) : json(nullptr);
    row["two_cell_lower"] =
        r.two_cell_lower ? json(*r.two_cell_lower) : json(nullptr);
    row["cwxy_upper"] =
        r.cwxy_upper ? json(rational_str(*r.cwxy_upper)) : json(nullptr);
    row["simplified_upper"] = r.simplified_upper
                                  ? json(rational_str(*r.simplified_upper))
                                  : json(nullptr);
    row["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    row["exact_source"] =
        r.exact_source ? json(source_str(*r.exact_source)) : json(nullptr);
    out["rows"].push_back(std::move(row));
  }
  out["notes"] = json::array(
      {"gkp_reference is the d^k/k! reference curve of Eq. (2); its (1-o(1)) "
       "factor is unquantified, so it never enters the consistency audit"});
  return out;
}

int cmd_bounds(const std::string& d_range, const std::string& s_range,
               bool as_csv, bool as_json, bool no_exact, double budget,
               const std::string& out) {
  auto [d_lo, d_hi] = parse_range(d_range);
  auto [s_lo, s_hi] = parse_range(s_range);
  nb::ReportOptions opts;
  opts.attach_exact = !no_exact;
  opts.time_budget_seconds = budget;
  std::vector<nb::BoundReport> rows = nb::report(d_lo, d_hi, s_lo, s_hi, opts);
  Sink sink(out);
  if (as_json && !as_csv)
    sink.stream() << bounds_json(rows).dump(2) << '\n';
  else
    bounds_csv(sink.stream(), rows);
  return kExitOk;
}

int cmd_convert(const std::string& path, const std::string& out) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw nb::Error("cannot open " + path);
    in = &file;
  }
  Sink sink(out);
  std::string line;
  std::size_t lineno = 0;
  int dimension = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    std::string text = line;
    while (!text.empty() &&
           (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
      text.pop_back();
    std::size_t begin = text.find_first_not_of(" \t");
    text = begin == std::string::npos ? "" : text.substr(begin);
    if (text.empty() || text[0] == '#') continue;
    try {
      if (text[0] == '[') {
        nb::NormalizedBox box = nb::parse_box(text);
        if (dimension == 0) dimension = box.dimension();
        if (box.dimension() != dimension)
          throw nb::LengthMismatch(static_cast<std::size_t>(dimension),
                                   static_cast<std::size_t>(box.dimension()));
        sink.stream() << nb::to_string(box).str() << '\n';
      } else {
        nb::JokerString s = nb::JokerString::parse(text);
        if (dimension == 0) dimension = s.length();
        if (s.length() != dimension)
          throw nb::LengthMismatch(static_cast<std::size_t>(dimension),
                                   static_cast<std::size_t>(s.length()));
        sink.stream() << nb::render_box(nb::from_string(s)) << '\n';
      }
    } catch (const nb::Error& e) {
      throw nb::ParseError(e.what(), lineno);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwise k-neighborly joker-string families: construction, "
               "verification, exact solving and bound tables"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand(
      "construct", "build the Theorem 1 family for (d, s)");
  int c_d = 0, c_s = 0;
  std::string c_out;
  bool c_json = false;
  construct->add_option("--d", c_d, "even dimension")->required();
  construct->add_option("--s", c_s, "parameter 1 <= s <= d/2")->required();
  construct->add_option("--out", c_out, "output file (default stdout)");
  construct->add_flag("--json", c_json, "JSON report instead of family text");

  auto* verify = app.add_subcommand(
      "verify", "check a family file for pairwise k-neighborliness");
  int v_k = 0;
  std::string v_file = "-";
  verify->add_option("--k", v_k, "neighborliness parameter")->required();
  verify->add_option("file", v_file, "family file ('-' for stdin)");

  auto* solve =
      app.add_subcommand("solve", "exact n(k,d) via closed form or search");
  int s_k = 0, s_d = 0;
  double s_budget = 0;
  std::string s_witness;
  bool s_seed = false, s_cross = false;
  solve->add_option("--k", s_k, "neighborliness parameter")->required();
  solve->add_option("--d", s_d, "dimension")->required();
  auto* budget_opt = solve->add_option("--time-budget", s_budget,
                                       "search budget in seconds");
  solve->add_option("--witness", s_witness, "write a witness family here");
  solve->add_flag("--seed-from-construction", s_seed,
                  "seed the search with lower_bound_formula(d, d-k)");
  solve->add_flag("--cross-validate", s_cross,
                  "also search when a closed form applies (d <= 8)");

  auto* bounds = app.add_subcommand(
      "bounds", "lower/upper bound table over (d, s) ranges");
  std::string b_d, b_s, b_out;
  bool b_csv = false, b_json = false, b_no_exact = false;
  double b_budget = 5.0;
  bounds->add_option("--d", b_d, "d range: A or A..B")->required();
  bounds->add_option("--s", b_s, "s range: A or A..B")->required();
  bounds->add_flag("--csv", b_csv, "CSV output (default)");
  bounds->add_flag("--json", b_json, "JSON output");
  bounds->add_flag("--no-exact", b_no_exact, "skip exact-value attachment");
  bounds->add_option("--time-budget", b_budget,
                     "per-row clique-search budget in seconds (default 5)");
  bounds->add_option("--out", b_out, "output file (default stdout)");

  auto* convert = app.add_subcommand(
      "convert", "strings <-> normalized-box interval products");
  std::string x_file = "-", x_out;
  convert->add_option("file", x_file, "input file ('-' for stdin)");
  convert->add_option("--out", x_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(c_d, c_s, c_out, c_json);
    if (*verify) return cmd_verify(v_file, v_k);
    if (*solve)
      return cmd_solve(s_k, s_d,
                       budget_opt->count() ? std::optional<double>(s_budget)
                                           : std::nullopt,
                       s_witness, s_seed, s_cross);
    if (*bounds)
      return cmd_bounds(b_d, b_s, b_csv, b_json, b_no_exact, b_budget, b_out);
    if (*convert) return cmd_convert(x_file, x_out);
  } catch (const nb::DuplicateMember& e) {
    // A duplicated line is a distance-0 pair: a domain violation, not a
    // parse failure.
    std::cout << "k-neighborly: no, violation: " << e.member << ' '
              << e.member << " dist=0 (duplicate member, " << e.what() << ")"
              << '\n';
    return kExitViolation;
  } catch (const nb::DimensionTooLarge& e) {
    std::cerr << "error: no closed form; " << e.what() << '\n';
    return kExitResource;
  } catch (const nb::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const nb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "consistency violation: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
