// Python bindings for the neighborly core library.
//
// Exposed surface: joker string ops, box conversions, the explicit
// construction, the exact solver and the bound computations.  Exact
// rationals cross the boundary as fractions.Fraction, big integers as
// python ints, so nothing is silently rounded.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "neighborly/bounds.hpp"
#include "neighborly/boxes.hpp"
#include "neighborly/construction.hpp"
#include "neighborly/errors.hpp"
#include "neighborly/jokerstring.hpp"
#include "neighborly/solver.hpp"

namespace py = pybind11;
namespace nb = neighborly;
namespace mp = boost::multiprecision;

namespace {

py::object to_fraction(const nb::Rational& r) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  std::ostringstream os;
  os << mp::numerator(r) << "/" << mp::denominator(r);
  return fraction_type(os.str());
}

py::object to_pyint(const nb::BigInt& v) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(v.str());
}

std::vector<std::string> family_strings(const nb::Family& fam) {
  std::vector<std::string> out;
  out.reserve(fam.size());
  for (const auto& m : fam.members()) out.push_back(m.str());
  return out;
}

nb::Family family_from_strings(const std::vector<std::string>& members) {
  if (members.empty()) throw nb::EmptyFamily("family");
  nb::Family fam(nb::JokerString::parse(members.front()).length());
  for (const auto& s : members) {
    if (!fam.add(nb::JokerString::parse(s)))
      throw nb::DuplicateMember(s, 0);
  }
  return fam;
}

py::dict solve_result_dict(const nb::SolveResult& res) {
  py::dict d;
  d["value"] = res.value;
  d["status"] =
      res.status == nb::SolveStatus::Exact ? "exact" : "lower-bound-only";
  d["source"] = res.source == nb::SolveSource::ClosedForm ? "closed-form"
                                                          : "clique-search";
  if (res.witness) {
    d["witness"] = family_strings(*res.witness);
  } else {
    d["witness"] = py::none();
  }
  d["nodes"] = res.nodes;
  d["elapsed_seconds"] = res.elapsed_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pairwise k-neighborly joker string families: construction, "
            "verification, exact solver and bounds";

  py::register_exception<nb::Error>(m, "NeighborlyError", PyExc_ValueError);

  // joker strings ---------------------------------------------------------
  m.def("dist",
        [](const std::string& x, const std::string& y) {
          return nb::dist(nb::JokerString::parse(x),
                          nb::JokerString::parse(y));
        },
        py::arg("x"), py::arg("y"),
        "number of joker-free positions where the strings differ");

  m.def("weight",
        [](const std::string& x) {
          return nb::weight(nb::JokerString::parse(x));
        },
        py::arg("x"), "number of ones of a joker-free string");

  m.def("inner",
        [](const std::string& x, const std::string& y) {
          return nb::inner(nb::JokerString::parse(x),
                           nb::JokerString::parse(y));
        },
        py::arg("x"), py::arg("y"),
        "inner product over GF(2)^d patterns: positions where both are 1");

  m.def("antipode",
        [](const std::string& x) {
          return nb::antipode(nb::JokerString::parse(x)).str();
        },
        py::arg("x"), "bitwise complement of a joker-free string");

  m.def("concat",
        [](const std::string& x, const std::string& y) {
          return nb::concat(nb::JokerString::parse(x),
                            nb::JokerString::parse(y))
              .str();
        },
        py::arg("x"), py::arg("y"));

  m.def("diam",
        [](const std::vector<std::string>& a,
           const std::vector<std::string>& b) {
          return nb::diam(family_from_strings(a), family_from_strings(b));
        },
        py::arg("a"), py::arg("b"),
        "maximum distance between a member of a and a member of b");

  m.def("is_k_neighborly",
        [](const std::vector<std::string>& members, int k) {
          auto fam = family_from_strings(members);
          auto chk = nb::is_k_neighborly(fam, k);
          py::dict out;
          out["ok"] = chk.ok;
          if (chk.violation) {
            out["violation"] =
                py::make_tuple(fam[chk.violation->i].str(),
                               fam[chk.violation->j].str(),
                               chk.violation->distance);
          } else {
            out["violation"] = py::none();
          }
          return out;
        },
        py::arg("members"), py::arg("k"),
        "check 1 <= dist(u, v) <= k for all member pairs");

  m.def("distance_stats",
        [](const std::vector<std::string>& members) {
          auto st = nb::distance_stats(family_from_strings(members));
          return py::make_tuple(st.min, st.max, st.pairs);
        },
        py::arg("members"), "returns (min_dist, max_dist, pair_count)");

  // boxes ------------------------------------------------------------------
  m.def("string_to_box",
        [](const std::string& x) {
          return nb::render_box(nb::from_string(nb::JokerString::parse(x)));
        },
        py::arg("x"), "joker string to normalized box notation");

  m.def("box_to_string",
        [](const std::string& box) {
          return nb::to_string(nb::parse_box(box)).str();
        },
        py::arg("box"), "normalized box notation back to a joker string");

  m.def("intersection_dimension",
        [](const std::string& a, const std::string& b) {
          return nb::intersection_dimension(
              nb::from_string(nb::JokerString::parse(a)),
              nb::from_string(nb::JokerString::parse(b)));
        },
        py::arg("a"), py::arg("b"),
        "dimension of the intersection of two normalized boxes");

  // construction -----------------------------------------------------------
  m.def("build_family",
        [](int d, int s) {
          return family_strings(
              nb::build_family(nb::ConstructionParams(d, s)));
        },
        py::arg("d"), py::arg("s"),
        "explicit pairwise (d-s)-neighborly family in dimension d");

  m.def("lower_bound_formula",
        [](int d, int s) {
          return nb::lower_bound_formula(nb::ConstructionParams(d, s));
        },
        py::arg("d"), py::arg("s"),
        "closed-form size of the constructed family");

  m.def("construction_report",
        [](int d, int s) {
          nb::ConstructionParams p(d, s);
          auto fam = nb::build_family(p);
          auto rep = nb::construction_report(p, fam);
          py::dict out;
          out["d"] = p.d;
          out["s"] = p.s;
          out["k"] = rep.k;
          out["size"] = rep.size;
          out["formula"] = rep.formula;
          out["match"] = rep.match;
          py::list cells;
          for (const auto& c : rep.cells)
            cells.append(py::make_tuple(c.eps.str(), c.size));
          out["cells"] = cells;
          return out;
        },
        py::arg("d"), py::arg("s"));

  // solver -------------------------------------------------------------
  m.def("exact_n",
        [](int k, int d, std::optional<double> time_budget, bool witness,
           std::optional<std::uint64_t> seed, bool cross_validate) {
          nb::SearchConfig cfg;
          cfg.time_budget_seconds = time_budget;
          cfg.report_witness = witness;
          cfg.seed_lower_bound = seed;
          return solve_result_dict(nb::exact_n(k, d, cfg, cross_validate));
        },
        py::arg("k"), py::arg("d"), py::arg("time_budget") = py::none(),
        py::arg("witness") = false, py::arg("seed") = py::none(),
        py::arg("cross_validate") = false,
        "exact n(k, d) via closed form or branch and bound clique search");

  // bounds -------------------------------------------------------------
  m.def("alon_bounds",
        [](int k, int d) {
          auto b = nb::alon_bounds(k, d);
          return py::make_tuple(to_fraction(b.lower), to_fraction(b.upper));
        },
        py::arg("k"), py::arg("d"),
        "(d/k)^k lower bound and 2(2e)^k (d/k)^k upper bound");

  m.def("gkp_reference",
        [](int k, int d) { return to_fraction(nb::gkp_reference(k, d)); },
        py::arg("k"), py::arg("d"), "d^k / k! reference curve");

  m.def("cwxy_upper",
        [](int k, int d) { return to_fraction(nb::cwxy_upper(k, d)); },
        py::arg("k"), py::arg("d"), "binomial-sum upper bound, 1 <= k <= d-2");

  m.def("simplified_upper",
        [](int k, int d) { return to_fraction(nb::simplified_upper(k, d)); },
        py::arg("k"), py::arg("d"), "(2^d + 2^k) / 2, same range as cwxy");

  m.def("two_cell_lower",
        [](int d, int s) {
          return nb::two_cell_lower(nb::ConstructionParams(d, s));
        },
        py::arg("d"), py::arg("s"),
        "size of the two extreme cells of the construction");

  m.def("asymptotic_ratio",
        [](int s) { return to_fraction(nb::asymptotic_ratio(s)); },
        py::arg("s"), "limit of the construction size over 2^d");

  m.def("ratio_floor",
        [](int d, int s) {
          auto r = nb::ratio_floor(d, s);
          py::dict out;
          out["value"] = to_fraction(r.value);
          out["factor"] = to_fraction(r.factor);
          out["heuristic"] = r.heuristic;
          return out;
        },
        py::arg("d"), py::arg("s"),
        "certified finite-d floor on the construction size");

  m.def("to_decimal",
        [](const std::string& num, const std::string& den, int digits,
           const std::string& direction) {
          nb::Rational r{nb::BigInt(num), nb::BigInt(den)};
          auto dir = direction == "up" ? nb::RoundDirection::Up
                                       : nb::RoundDirection::Down;
          return nb::to_decimal(r, digits, dir);
        },
        py::arg("num"), py::arg("den"), py::arg("digits") = 6,
        py::arg("direction") = "down");

  m.attr("__version__") = VERSION_INFO;
  m.attr("MAX_LENGTH") = nb::kMaxLength;
  m.attr("SOLVER_MAX_D") = nb::kSolverMaxD;
}
