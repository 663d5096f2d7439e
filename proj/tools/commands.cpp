#include "commands.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "tempered/discretize.hpp"
#include "tempered/fractal.hpp"
#include "tempered/mold_builders.hpp"
#include "tempered/mold_properties.hpp"
#include "tempered/period_scan.hpp"
#include "tempered/render.hpp"
#include "tempered/semigroups.hpp"
#include "tempered/theorems.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace tempered::cli {

namespace {

using Json = nlohmann::ordered_json;
using Rows = std::vector<std::vector<std::string>>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a command needs; display precision never feeds computation.
struct RunConfig {
  std::string mold = "F";
  std::size_t granularity = 2;
  std::string period;
  unsigned long m = 12;
  std::string alpha;
  std::size_t count = 12;
  bool exact = false;
  std::string property = "axioms";
  std::size_t bound = 100;
  int which = 4;
  unsigned long m_max = 34;
  unsigned long tail = 200;
  std::string p = "golden";
  unsigned depth = 2;
  std::string step = "1/1000";
  std::size_t prefix = 64;
  std::string name = "all";
  std::string format = "text";
  std::string out;
  unsigned places = 4;
  unsigned threads = 1;
};

// A command's result in all three renderings.
struct Report {
  Json json = Json::object();
  std::string text;
  Rows table;  // CSV rows, header first
  int code = exit_ok;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? sep : "") + xs[i];
  }
  return out;
}

template <class Range>
std::string join_numbers(const Range& xs, const std::string& sep = ", ") {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    parts.push_back(std::to_string(x));
  }
  return join(parts, sep);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return q + "\"";
}

std::string render_csv(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    for (const auto& f : row) {
      fields.push_back(csv_field(f));
    }
    out += join(fields, ",") + "\n";
  }
  return out;
}

// Display width in code points, so that "∪" and "∞" align.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    n += (c & 0xC0) != 0x80;
  }
  return n;
}

std::string render_columns(const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], display_width(row[c]));
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(width[c] - display_width(row[c]) + 2, ' ');
      }
    }
    out += line + "\n";
  }
  return out;
}

ExactRational parse_rational(const std::string& text, const std::string& what) {
  try {
    return ExactRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": '" + text + "'");
  }
}

// ---- domain objects to JSON ------------------------------------------------

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["small_elements"] = s.small_elements();
  j["conductor"] = s.conductor();
  j["str"] = s.str();
  return j;
}

Json verdict_json(const SemigroupVerdict& v) {
  Json j;
  j["is_semigroup"] = v.is_semigroup;
  j["witness"] = v.witness ? Json{{"a", v.witness->a}, {"b", v.witness->b}, {"sum", v.witness->sum()}}
                           : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

Json even_sum_json(const EvenSum& e) {
  return Json{{"i", e.i}, {"j", e.j}, {"k", e.k}, {"sum", e.sum}};
}

std::string even_sum_str(const EvenSum& e) {
  return "s_" + std::to_string(e.i) + " + s_" + std::to_string(e.j) + " = " + std::to_string(e.sum) +
         " = s_" + std::to_string(e.k);
}

Json even_json(const EvenFilterVerdict& v) {
  Json j;
  j["even_filterable"] = v.even_filterable;
  j["kappa"] = v.kappa;
  j["witness"] = v.witness ? even_sum_json(*v.witness) : Json(nullptr);
  Json sums = Json::array();
  for (const auto& e : v.nontrivial) {
    sums.push_back(even_sum_json(e));
  }
  j["nontrivial"] = sums;
  return j;
}

std::string even_str(const EvenFilterVerdict& v) {
  if (v.even_filterable) {
    return "even-filterable";
  }
  if (v.witness) {
    return "not even-filterable: " + even_sum_str(*v.witness);
  }
  return "not even-filterable";
}

Json certificate_json(const TruncationCertificate& c) {
  return Json{{"spacing_start", c.spacing_start},
              {"prefix_end", c.prefix_end},
              {"conductor", c.conductor},
              {"spacing_witness", c.spacing_witness}};
}

Json property_json(const PropertyReport& r) {
  Json j;
  j["property"] = to_string(r.property);
  j["verdict"] = to_string(r.verdict);
  j["prefix_bound"] = r.prefix_bound;
  if (r.witness) {
    j["witness"] = Json{{"indices", r.witness->indices},
                        {"values", r.witness->values},
                        {"detail", r.witness->detail}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

template <ExactValue T>
Json interval_json(const AlphaInterval<T>& iv, unsigned places) {
  Json j;
  j["position"] = iv.position;
  j["interval"] = iv.str(places);
  j["exact"] = iv.exact_str();
  j["representative"] = render_natural(iv.representative, places + 2);
  j["collapse"] = Json{{"kappa", iv.collapse.kappa}, {"witness_index", iv.collapse.witness_index}};
  j["semigroup"] = semigroup_json(iv.set());
  return j;
}

std::string property_str(const PropertyReport& r) {
  std::string s = to_string(r.property) + ": " + to_string(r.verdict) + " (prefix bound " +
                  std::to_string(r.prefix_bound) + ")";
  if (r.witness) {
    s += "\n  witness: " + r.witness->detail;
  }
  return s;
}

// ---- mold selection ----------------------------------------------------------

using AnyMold = std::variant<Mold<LogValue>, Mold<GoldenNumber>, Mold<ExactRational>>;

AnyMold select_mold(const RunConfig& c) {
  try {
    if (c.mold == "L") {
      return metric_mold();
    }
    if (c.mold == "F") {
      return golden_fractal_mold();
    }
    if (c.mold == "perfect") {
      if (c.granularity < 2) {
        throw UsageError("--granularity must be at least 2");
      }
      return perfect_fractal_mold(c.granularity);
    }
    if (c.mold == "Q") {
      return quarters_mold();
    }
    if (c.mold == "D") {
      return decimal_mold();
    }
    if (c.mold == "fractal") {
      if (c.period.empty()) {
        throw UsageError("--mold fractal needs --period");
      }
      if (is_golden_period_literal(c.period)) {
        return fractal_mold_from_period(
            PeriodSpec<GoldenNumber>{{GoldenNumber(1), GoldenNumber::phi()}}, "fractal");
      }
      return fractal_mold_from_period(parse_rational_period(c.period), "fractal");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown mold '" + c.mold + "' (expected L, F, perfect, Q, D or fractal)");
}

// ---- commands ----------------------------------------------------------------

Report cmd_mold_show(const RunConfig& c) {
  Report r;
  std::visit(
      [&](const auto& mold) {
        Rows rows{{"i", "value"}};
        if (c.exact) {
          rows[0].push_back("exact");
        }
        Json elements = Json::array();
        const auto values = mold.prefix(c.count);
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::vector<std::string> row{std::to_string(i), render_natural(values[i], c.places)};
          Json e{{"i", i}, {"value", row[1]}};
          if (c.exact) {
            row.push_back(exact_form(values[i]));
            e["exact"] = row.back();
          }
          rows.push_back(row);
          elements.push_back(e);
        }
        r.json["mold"] = mold.id();
        r.json["kind"] = to_string(mold.kind());
        r.json["granularity"] = mold.granularity();
        r.json["description"] = mold.description();
        r.json["elements"] = elements;
        r.text = mold.id() + ": " + mold.description() + "\n" + render_columns(rows);
        r.table = rows;
      },
      select_mold(c));
  return r;
}

Report cmd_mold_check(const RunConfig& c) {
  Report r;
  std::visit(
      [&](const auto& mold) {
        PropertyReport p;
        if (c.property == "axioms") {
          p = check_mold_axioms(mold, c.bound);
        } else if (c.property == "metric") {
          p = check_metric(mold, c.bound);
        } else if (c.property == "closure") {
          p = check_closure(mold, c.bound);
        } else if (c.property == "even-filterable") {
          p = check_even_filterable_mold(mold, c.bound);
        } else {
          throw UsageError("unknown property '" + c.property +
                           "' (expected axioms, metric, closure or even-filterable)");
        }
        r.json["mold"] = mold.id();
        r.json["report"] = property_json(p);
        r.text = mold.id() + " " + property_str(p) + "\n";
        r.table = {{"mold", "property", "verdict", "prefix_bound", "witness"},
                   {mold.id(), to_string(p.property), to_string(p.verdict),
                    std::to_string(p.prefix_bound), p.witness ? p.witness->detail : ""}};
      },
      select_mold(c));
  return r;
}

Report cmd_table(const RunConfig& c, std::ostream& err) {
  static const std::set<unsigned long> tabulated{9, 11, 12, 13, 18};
  if (c.m == 0) {
    throw UsageError("--m must be positive");
  }
  if (!tabulated.count(c.m)) {
    err << "warning: m = " << c.m << " is not one of the tabulated multiplicities 9, 11, 12, 13, 18\n";
  }
  const auto L = metric_mold();
  const auto F = golden_fractal_mold();
  Report r;
  Rows rows{{"i", "m_lambda_i", "m_phi_i"}};
  Json js = Json::array();
  for (std::size_t i = 0; i < c.count; ++i) {
    std::string l = render_fixed(scale(L.element(i), c.m), c.places);
    std::string f = render_fixed(scale(F.element(i), c.m), c.places);
    rows.push_back({std::to_string(i), l, f});
    js.push_back(Json{{"i", i}, {"m_lambda_i", l}, {"m_phi_i", f}});
  }
  r.json["m"] = c.m;
  r.json["rows"] = js;
  r.text = render_columns(rows);
  r.table = rows;
  return r;
}

template <ExactValue T>
Report discretize_report(const Mold<T>& mold, const RunConfig& c) {
  if (c.alpha.empty()) {
    throw UsageError("discretize needs --alpha");
  }
  const ExactRational alpha = parse_rational(c.alpha, "--alpha");
  if (alpha.sign() < 0 || ExactRational(1) < alpha) {
    throw UsageError("--alpha must lie in [0, 1]");
  }
  const DiscretizedSemigroup d = discretize(mold, c.m, alpha);
  const SemigroupVerdict v = verify_semigroup(d);
  const auto gm = genus_multiplicity(d.set);
  const auto collapse = collapse_of_rounded(d.rounded);
  Report r;
  r.json["mold"] = mold.id();
  r.json["m"] = c.m;
  r.json["alpha"] = d.alpha;
  r.json["semigroup"] = semigroup_json(d.set);
  r.json["verdict"] = verdict_json(v);
  r.json["genus"] = gm.genus;
  r.json["multiplicity"] = gm.multiplicity;
  r.json["gaps"] = gm.gaps;
  r.json["certificate"] = certificate_json(d.certificate);
  r.json["rounded"] = d.rounded;
  std::string text = "discretization of " + std::to_string(c.m) + mold.id() + " at alpha = " +
                     d.alpha + "\n";
  text += "  set:          " + d.set.str() + "\n";
  text += "  semigroup:    " + std::string(v.is_semigroup ? "yes" : "no") + " (" + v.reason + ")\n";
  text += "  multiplicity: " + std::to_string(gm.multiplicity) + "\n";
  text += "  genus:        " + std::to_string(gm.genus) + "\n";
  text += "  gaps:         " + join_numbers(gm.gaps) + "\n";
  Rows rows{{"field", "value"},
            {"set", d.set.str()},
            {"semigroup", v.is_semigroup ? "yes" : "no"},
            {"reason", v.reason},
            {"multiplicity", std::to_string(gm.multiplicity)},
            {"genus", std::to_string(gm.genus)}};
  if (collapse) {
    r.json["collapse"] = Json{{"kappa", collapse->kappa}, {"witness_index", collapse->witness_index}};
    text += "  collapse:     " + std::to_string(collapse->kappa) + " (indices " +
            std::to_string(collapse->witness_index) + ", " + std::to_string(collapse->witness_index + 1) +
            ")\n";
    rows.push_back({"collapse", std::to_string(collapse->kappa)});
    if (v.is_semigroup) {
      const auto e = even_filterable_semigroup(d.set, collapse->kappa);
      r.json["even_filterable"] = even_json(e);
      text += "  even filter:  " + even_str(e) + "\n";
      for (const auto& s : e.nontrivial) {
        text += "                " + even_sum_str(s) + "\n";
      }
      rows.push_back({"even_filterable", e.even_filterable ? "yes" : "no"});
    }
  } else {
    r.json["collapse"] = nullptr;
  }
  text += "  certificate:  m (mu_{i+1} - mu_i) < 1 from i = " +
          std::to_string(d.certificate.spacing_start) + "; explicit up to i = " +
          std::to_string(d.certificate.prefix_end) + "\n";
  r.text = text;
  r.table = rows;
  return r;
}

Report cmd_discretize(const RunConfig& c) {
  return std::visit([&](const auto& mold) { return discretize_report(mold, c); }, select_mold(c));
}

Report cmd_sweep(const RunConfig& c) {
  return std::visit(
      [&](const auto& mold) {
        const auto sweep = alpha_sweep(mold, c.m);
        Report r;
        Rows rows{{"position", "alpha", "representative", "semigroup", "collapse", "set"}};
        Json ivs = Json::array();
        std::map<NumericalSemigroup, bool> closed;
        for (const auto& iv : sweep.intervals) {
          auto [it, inserted] = closed.try_emplace(iv.set(), false);
          if (inserted) {
            it->second = verify_semigroup(iv.set()).is_semigroup;
          }
          Json j = interval_json(iv, c.places);
          j["is_semigroup"] = it->second;
          ivs.push_back(j);
          rows.push_back({std::to_string(iv.position), iv.str(c.places),
                          render_natural(iv.representative, c.places + 2), it->second ? "yes" : "no",
                          std::to_string(iv.collapse.kappa), iv.set().str()});
        }
        r.json["mold"] = mold.id();
        r.json["m"] = c.m;
        r.json["certificate"] = certificate_json(sweep.certificate);
        r.json["intervals"] = ivs;
        r.text = std::to_string(sweep.intervals.size()) + " alpha-intervals for " +
                 std::to_string(c.m) + mold.id() + " (explicit prefix up to index " +
                 std::to_string(sweep.certificate.prefix_end) + ")\n" + render_columns(rows);
        r.table = rows;
        return r;
      },
      select_mold(c));
}

Report cmd_search(const RunConfig& c) {
  if (c.m == 0) {
    throw UsageError("--m must be positive");
  }
  const SearchResult s = simultaneous_search(c.m);
  Report r;
  Rows rows{{"alpha_L", "alpha_F", "kappa_L", "kappa_F", "even_L", "even_F", "set"}};
  Json matches = Json::array();
  for (const auto& x : s.matches) {
    Json j;
    j["interval_L"] = interval_json(x.interval_L, c.places);
    j["interval_F"] = interval_json(x.interval_F, c.places);
    j["semigroup"] = semigroup_json(x.semigroup);
    j["even_L"] = even_json(x.even_L);
    j["even_F"] = even_json(x.even_F);
    matches.push_back(j);
    rows.push_back({x.interval_L.str(c.places), x.interval_F.str(c.places),
                    std::to_string(x.even_L.kappa), std::to_string(x.even_F.kappa),
                    x.even_L.even_filterable ? "yes" : "no", x.even_F.even_filterable ? "yes" : "no",
                    x.semigroup.str()});
  }
  Json distinct = Json::array();
  for (const auto& g : s.semigroups) {
    distinct.push_back(semigroup_json(g));
  }
  r.json["m"] = c.m;
  r.json["intervals_L"] = s.intervals_L;
  r.json["intervals_F"] = s.intervals_F;
  r.json["matches"] = matches;
  r.json["semigroups"] = distinct;
  std::string text = "m = " + std::to_string(c.m) + ": " + std::to_string(s.matches.size()) +
                     " interval pair(s), " + std::to_string(s.semigroups.size()) +
                     " distinct semigroup(s) (" + std::to_string(s.intervals_L) + " L-intervals x " +
                     std::to_string(s.intervals_F) + " F-intervals)\n";
  for (const auto& g : s.semigroups) {
    text += "  " + g.str() + "\n";
  }
  if (!s.matches.empty()) {
    text += "\n" + render_columns(rows);
  }
  r.text = text;
  r.table = rows;
  return r;
}

Json census_entries_json(const CensusResult& census) {
  Json per_m = Json::array();
  for (const auto& e : census.entries) {
    per_m.push_back(Json{{"m", e.m},
                         {"matches", e.matches},
                         {"semigroups", e.semigroups},
                         {"even_filterable", e.even_filterable}});
  }
  return per_m;
}

std::string braces(const std::set<unsigned long>& xs) { return "{" + join_numbers(xs) + "}"; }

Report cmd_theorem(const RunConfig& c) {
  Report r;
  r.json["theorem"] = c.which;
  if (c.which == 4 || c.which == 5) {
    if (c.m_max == 0) {
      throw UsageError("--m-max must be positive");
    }
    const CensusResult census = multiplicity_census(c.m_max, c.threads, c.which == 4 ? c.tail : 0);
    std::set<unsigned long> expected;
    for (auto m : c.which == 4 ? expected_multiplicities() : expected_even_filterable_multiplicities()) {
      if (m <= c.m_max) {
        expected.insert(m);
      }
    }
    const auto& found = c.which == 4 ? census.feasible : census.even_filterable;
    bool pass = found == expected;
    Rows rows{{"m", "matches", "semigroups", "even_filterable"}};
    for (const auto& e : census.entries) {
      rows.push_back({std::to_string(e.m), std::to_string(e.matches), std::to_string(e.semigroups),
                      e.even_filterable ? "yes" : "no"});
    }
    std::string text;
    text += c.which == 4 ? "multiplicities m <= " + std::to_string(c.m_max) +
                               " with a simultaneous discretization of L and F that is a semigroup\n"
                         : "multiplicities m <= " + std::to_string(c.m_max) +
                               " with an even-filterable simultaneous discretization\n";
    text += "  found:    " + braces(found) + "\n";
    text += "  expected: " + braces(expected) + "\n";
    r.json["searched_up_to"] = c.m_max;
    r.json["found"] = found;
    r.json["expected"] = expected;
    if (c.which == 4 && census.tail_up_to > 0) {
      const bool ok = census.tail_certified();
      pass = pass && ok;
      Json failures = Json::array();
      for (const auto& t : census.tail) {
        if (!t.infeasible) {
          failures.push_back(Json{{"m", t.m}, {"detail", t.detail}});
        }
      }
      r.json["tail"] = Json{{"from", c.m_max + 1},
                            {"to", census.tail_up_to},
                            {"certified", ok},
                            {"failures", failures}};
      text += "  tail:     " + std::to_string(c.m_max + 1) + " <= m <= " +
              std::to_string(census.tail_up_to) +
              (ok ? " certified infeasible (m phi_4 > m lambda_4 + 2)\n" : " NOT certified\n");
    }
    r.json["per_m"] = census_entries_json(census);
    r.json["pass"] = pass;
    text += std::string(pass ? "PASS" : "FAIL") + "\n\n" + render_columns(rows);
    r.text = text;
    r.table = rows;
    r.code = pass ? exit_ok : exit_fail;
    return r;
  }
  if (c.which == 6) {
    const UniquenessResult u = h_uniqueness();
    const NumericalSemigroup H = harmonic_semigroup();
    const EvenFilterVerdict even = even_filterable_semigroup(u.semigroup, u.kappa_F);
    const bool pass = u.holds() && even.even_filterable;
    Rows rows{{"step", "constraint", "bound", "holds"}};
    Json trace = Json::array();
    std::string text = "simultaneous discretizations of 12L and 12F that are semigroups\n";
    for (const auto& s : u.trace) {
      rows.push_back({s.id, s.constraint, s.bound, s.holds ? "yes" : "no"});
      trace.push_back(Json{{"id", s.id}, {"constraint", s.constraint}, {"bound", s.bound},
                           {"holds", s.holds}});
      text += "  [" + std::string(s.holds ? "ok" : "FAILED") + "] " + s.constraint + "  =>  " +
              s.bound + "\n";
    }
    text += "  alpha_L in " + u.alpha_L + ", alpha_F in " + u.alpha_F + "\n";
    text += "  semigroup: " + u.semigroup.str() + "\n";
    text += "  collapse w.r.t. F: " + std::to_string(u.kappa_F) + "\n";
    text += "  " + even_str(even) + "\n";
    for (const auto& s : even.nontrivial) {
      text += "    " + even_sum_str(s) + "\n";
    }
    r.json["semigroup"] = semigroup_json(u.semigroup);
    r.json["expected"] = semigroup_json(H);
    r.json["matches"] = u.matches;
    r.json["alpha_L"] = u.alpha_L;
    r.json["alpha_F"] = u.alpha_F;
    r.json["kappa_F"] = u.kappa_F;
    r.json["even_filterable"] = even_json(even);
    r.json["trace"] = trace;
    r.json["pass"] = pass;
    r.text = text + (pass ? "PASS\n" : "FAIL\n");
    r.table = rows;
    r.code = pass ? exit_ok : exit_fail;
    return r;
  }
  throw UsageError("--which must be 4, 5 or 6");
}

template <ExactValue T>
Report division_report(const T& p, const RunConfig& c) {
  Report r;
  Rows rows{{"round", "k", "value", "exact"}};
  Json rounds = Json::array();
  const std::vector<T> first{from_integer<T>(0), p};
  std::vector<T> cuts{from_integer<T>(0)};
  std::string text;
  for (unsigned round = 0; round <= c.depth; ++round) {
    if (round > 0) {
      cuts = subdivide_offsets(cuts, first);
    }
    std::vector<std::string> shown;
    Json points = Json::array();
    auto all = cuts;
    all.push_back(from_integer<T>(1));
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::string v = render_natural(all[k], c.places);
      shown.push_back(v);
      rows.push_back({std::to_string(round), std::to_string(k), v, exact_form(all[k])});
      points.push_back(Json{{"value", v}, {"exact", exact_form(all[k])}});
    }
    rounds.push_back(Json{{"round", round}, {"cuts", points}});
    text += "round " + std::to_string(round) + ": " + join(shown, ", ") + "\n";
  }
  r.json["p"] = exact_form(p);
  r.json["depth"] = c.depth;
  r.json["rounds"] = rounds;
  r.text = text;
  r.table = rows;
  return r;
}

Report cmd_fractal_division(const RunConfig& c) {
  if (c.depth > 12) {
    throw UsageError("--depth must be at most 12");
  }
  if (c.p == "golden" || c.p == "tau") {
    return division_report(GoldenNumber::tau(), c);
  }
  const ExactRational p = parse_rational(c.p, "--p");
  if (p.sign() <= 0 || !(p < ExactRational(1))) {
    throw UsageError("--p must lie strictly between 0 and 1");
  }
  return division_report(p, c);
}

Report cmd_period_scan(const RunConfig& c) {
  const ExactRational step = parse_rational(c.step, "--step");
  PeriodScanResult s;
  try {
    s = period_uniqueness_scan(step, c.prefix, c.threads);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto names = [&](const std::vector<ExactRational>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) {
      out.push_back(render_natural(x, 6));
    }
    return out;
  };
  Report r;
  Rows rows{{"kind", "item", "holds"}};
  Json checks = Json::array();
  std::string text = "grid step " + render_natural(step, 6) + ", prefix " + std::to_string(s.prefix) +
                     " (" + std::to_string(s.generated_elements) + " generated elements), " +
                     std::to_string(s.points.size()) + " grid points\n";
  text += "  survivors near tau:        " + join(names(s.golden_survivors), ", ") + "\n";
  text += "  survivors adjacent to 1/2: " + join(names(s.bisectional_survivors), ", ") + "\n";
  for (const auto& x : names(s.golden_survivors)) {
    rows.push_back({"golden_survivor", x, ""});
  }
  for (const auto& x : names(s.bisectional_survivors)) {
    rows.push_back({"bisectional_survivor", x, ""});
  }
  text += "  exact certificate:\n";
  for (const auto& ch : s.certificate) {
    checks.push_back(Json{{"claim", ch.claim}, {"holds", ch.holds}});
    rows.push_back({"certificate", ch.claim, ch.holds ? "yes" : "no"});
    text += "    [" + std::string(ch.holds ? "ok" : "FAILED") + "] " + ch.claim + "\n";
  }
  const bool pass = s.certified();
  r.json["grid_step"] = s.grid_step.str();
  r.json["prefix"] = s.prefix;
  r.json["generated_elements"] = s.generated_elements;
  r.json["grid_points"] = s.points.size();
  r.json["survivors"] = names(s.survivors);
  r.json["golden_survivors"] = names(s.golden_survivors);
  r.json["bisectional_survivors"] = names(s.bisectional_survivors);
  r.json["certificate"] = checks;
  r.json["pass"] = pass;
  r.text = text + (pass ? "PASS\n" : "FAIL\n");
  r.table = rows;
  r.code = pass ? exit_ok : exit_fail;
  return r;
}

// Worked examples: each one is a named semigroup computation.
struct Example {
  std::string name;
  std::string title;
  NumericalSemigroup set;
};

std::vector<Example> build_examples(const std::string& which) {
  std::vector<Example> out;
  auto want = [&](const char* n) { return which == "all" || which == n; };
  bool matched = false;
  if (want("hermite")) {
    matched = true;
    out.push_back({"hermite", "semigroup generated by 4 and 5",
                   NumericalSemigroup({0, 4, 5, 8, 9, 10}, 12)});
  }
  const auto Q = quarters_mold();
  for (unsigned long m : {16ul, 19ul}) {
    const std::string tag = "q" + std::to_string(m);
    if (!want(tag.c_str())) {
      continue;
    }
    matched = true;
    // Nearest rounding is the parameter 1/2 (halves round up).
    for (const char* alpha : {"1/2", "1"}) {
      const bool nearest = alpha[0] == '1' && alpha[1] == '/';
      const auto d = discretize(Q, m, ExactRational::parse(alpha));
      std::string title = std::string(nearest ? "nearest-integer rounding" : "flooring") + " of " +
                          std::to_string(m) + "Q";
      out.push_back({tag + (nearest ? "-round" : "-floor"), title, d.set});
    }
  }
  if (want("h")) {
    matched = true;
    const auto d = discretize(golden_fractal_mold(), 12, ExactRational(1));
    out.push_back({"h", "flooring discretization of 12F", d.set});
  }
  if (!matched) {
    throw UsageError("unknown example '" + which + "' (expected hermite, q16, q19, h or all)");
  }
  return out;
}

Report cmd_example(const RunConfig& c) {
  Report r;
  Rows rows{{"name", "set", "semigroup", "witness", "multiplicity", "genus", "gaps"}};
  Json js = Json::array();
  std::string text;
  for (const auto& ex : build_examples(c.name)) {
    const auto v = verify_semigroup(ex.set);
    const auto gm = genus_multiplicity(ex.set);
    Json j;
    j["name"] = ex.name;
    j["title"] = ex.title;
    j["semigroup"] = semigroup_json(ex.set);
    j["verdict"] = verdict_json(v);
    j["multiplicity"] = gm.multiplicity;
    j["genus"] = gm.genus;
    j["gaps"] = gm.gaps;
    std::vector<std::string> pairs;
    Json vs = Json::array();
    for (const auto& w : closure_violations(ex.set)) {
      pairs.push_back("(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")");
      vs.push_back(Json{{"a", w.a}, {"b", w.b}, {"sum", w.sum()}});
    }
    j["violations"] = vs;
    js.push_back(j);
    text += ex.name + ": " + ex.title + "\n";
    text += "  set:       " + ex.set.str() + "\n";
    text += "  semigroup: " + std::string(v.is_semigroup ? "yes" : "no") + " (" + v.reason + ")\n";
    if (!pairs.empty()) {
      text += "  violating pairs: " + join(pairs, " ") + "\n";
    }
    text += "  multiplicity " + std::to_string(gm.multiplicity) + ", genus " +
            std::to_string(gm.genus) + ", gaps {" + join_numbers(gm.gaps) + "}\n";
    rows.push_back({ex.name, ex.set.str(), v.is_semigroup ? "yes" : "no",
                    v.witness ? std::to_string(v.witness->a) + "+" + std::to_string(v.witness->b) : "",
                    std::to_string(gm.multiplicity), std::to_string(gm.genus),
                    join_numbers(gm.gaps, " ")});
  }
  r.json["examples"] = js;
  r.text = text;
  r.table = rows;
  return r;
}

void emit(const Report& r, const RunConfig& c, std::ostream& out) {
  std::string body;
  if (c.format == "json") {
    body = r.json.dump(2) + "\n";
  } else if (c.format == "csv") {
    body = render_csv(r.table);
  } else {
    body = r.text;
  }
  if (c.out.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open output file '" + c.out + "'");
  }
  file << body;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("TEMPERED_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 1024) {
      return static_cast<unsigned>(n);
    }
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.threads = default_threads();

  CLI::App app{"Numerical semigroups from real molds: discretizations, sweeps and certificates",
               "tempered"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", c.out, "Write the report to this file instead of stdout");
  app.add_option("--threads", c.threads, "Worker threads for searches (default $TEMPERED_THREADS or 1)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--places", c.places, "Decimal places for display")->check(CLI::Range(0, 30));

  auto mold_options = [&](CLI::App* sub) {
    sub->add_option("--mold", c.mold, "L, F, perfect, Q, D or fractal");
    sub->add_option("--granularity", c.granularity, "Granularity of the perfect fractal mold");
    sub->add_option("--period", c.period, "First period of a fractal mold, e.g. 1,1.5,1.75 or 1,phi");
  };

  auto* mold = app.add_subcommand("mold", "Inspect molds");
  mold->require_subcommand(1);
  auto* show = mold->add_subcommand("show", "List the first elements of a mold");
  mold_options(show);
  show->add_option("--count", c.count, "Number of elements");
  show->add_flag("--exact", c.exact, "Also print exact forms");
  auto* check = mold->add_subcommand("check", "Check a mold property on a prefix");
  mold_options(check);
  check->add_option("--property", c.property, "axioms, metric, closure or even-filterable");
  check->add_option("--bound", c.bound, "Prefix bound");

  auto* table = app.add_subcommand("table", "Scaled elements m*lambda_i and m*phi_i");
  table->add_option("--m", c.m, "Multiplicity")->required();
  table->add_option("--count", c.count, "Rows")->default_val(51);

  auto* disc = app.add_subcommand("discretize", "Round a scaled mold and analyse the result");
  mold_options(disc);
  disc->add_option("--m", c.m, "Multiplicity")->required();
  disc->add_option("--alpha", c.alpha, "Rounding parameter in [0, 1] (exact decimal)")->required();

  auto* sweep = app.add_subcommand("sweep", "All alpha-intervals of a scaled mold");
  mold_options(sweep);
  sweep->add_option("--m", c.m, "Multiplicity")->required();

  auto* search = app.add_subcommand("search", "Simultaneous discretizations of mL and mF");
  search->add_option("--m", c.m, "Multiplicity")->required();

  auto* theorem = app.add_subcommand("theorem", "Reproduce a census or the uniqueness result");
  theorem->add_option("--which", c.which, "4, 5 or 6")->required();
  theorem->add_option("--m-max", c.m_max, "Largest multiplicity searched exhaustively");
  theorem->add_option("--tail", c.tail, "Certify infeasibility up to this multiplicity");

  auto* division = app.add_subcommand("fractal-division", "Cut points of repeated proportional division");
  division->add_option("--p", c.p, "Cut proportion in (0, 1), or 'golden'");
  division->add_option("--depth", c.depth, "Subdivision rounds (at most 12)");

  auto* scan = app.add_subcommand("period-scan", "Closure scan over two-cut periods {1, 1+p}");
  scan->add_option("--step", c.step, "Grid step");
  scan->add_option("--prefix", c.prefix, "Number of periods' worth of elements to generate");

  auto* example = app.add_subcommand("example", "Worked semigroup examples");
  example->add_option("--name", c.name, "hermite, q16, q19, h or all");

  for (auto* sub : {mold, show, check, table, disc, sweep, search, theorem, division, scan, example}) {
    sub->fallthrough();
  }

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    Report r;
    if (show->parsed()) {
      r = cmd_mold_show(c);
    } else if (check->parsed()) {
      r = cmd_mold_check(c);
    } else if (table->parsed()) {
      r = cmd_table(c, err);
    } else if (disc->parsed()) {
      r = cmd_discretize(c);
    } else if (sweep->parsed()) {
      r = cmd_sweep(c);
    } else if (search->parsed()) {
      r = cmd_search(c);
    } else if (theorem->parsed()) {
      r = cmd_theorem(c);
    } else if (division->parsed()) {
      r = cmd_fractal_division(c);
    } else if (scan->parsed()) {
      r = cmd_period_scan(c);
    } else {
      r = cmd_example(c);
    }
    emit(r, c, out);
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  }
}

}  // namespace tempered::cli
