// Command-line front end: enumeration, orbits, censuses, verification
// suites, homomesy reports, and conjecture exploration.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icsrow/anchors.hpp"
#include "icsrow/census_tables.hpp"
#include "icsrow/convex.hpp"
#include "icsrow/dynamics.hpp"
#include "icsrow/io.hpp"
#include "icsrow/two_by_n.hpp"
#include "icsrow/verify.hpp"

namespace {

using namespace icsrow;

struct PosetSpec {
  int m = 0, n = 0;
  std::vector<int> dims;

  std::vector<int> resolved() const {
    if (!dims.empty()) return dims;
    return {m, n};
  }
  bool is_two_by_n() const {
    auto d = resolved();
    return d.size() == 2 && d[0] == 2;
  }
  int chain_length() const { return resolved().back(); }
};

std::ostream& sink(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output path " + path);
  return file;
}

// Tuple literal "b1,i1,a1:b2,i2,a2", with "E" for an empty chain side.
ChainTuple parse_tuple(int n, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("tuple literal needs a ':' separator");
  auto side = [&](std::string part, bool lower) -> std::array<int, 3> {
    if (part == "E") return lower ? std::array<int, 3>{n, 0, 0} : std::array<int, 3>{0, 0, n};
    std::array<int, 3> v{};
    char c1 = 0, c2 = 0;
    std::istringstream in(part);
    if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',')
      throw std::invalid_argument("bad tuple side '" + part + "'");
    return v;
  };
  const auto lo = side(text.substr(0, colon), true);
  const auto hi = side(text.substr(colon + 1), false);
  return ChainTuple::of(n, lo[0], lo[1], lo[2], hi[0], hi[1], hi[2]);
}

// Coordinate list "i,j;i,j;..." (or empty string for the empty set).
Bits parse_coords(const Poset& p, const std::string& text) {
  Bits s;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    std::vector<int> coord;
    std::istringstream ci(item);
    std::string num;
    while (std::getline(ci, num, ',')) coord.push_back(std::stoi(num));
    s.set(p.index_of(coord));
  }
  return s;
}

int run_enumerate(const PosetSpec& spec, const std::string& format,
                  const std::string& output, int cap) {
  const Poset p = Poset::product(spec.resolved());
  const auto sets = enumerate_ics(p, cap);
  std::ofstream file;
  std::ostream& out = sink(file, output);
  if (format == "json") {
    Json arr = Json::array();
    for (const Bits& s : sets) arr.push_back(set_to_json(p, s));
    out << Json{{"poset", spec.resolved()}, {"count", sets.size()}, {"sets", arr}}.dump()
        << "\n";
  } else if (format == "csv") {
    out << "index,set\n";
    for (size_t i = 0; i < sets.size(); ++i)
      out << i << "," << set_to_string(p, sets[i]) << "\n";
  } else {
    for (size_t i = 0; i < sets.size(); ++i)
      out << std::setw(8) << i << "  " << set_to_string(p, sets[i]) << "\n";
    out << sets.size() << " interval-closed sets\n";
  }
  return 0;
}

int run_orbit(const PosetSpec& spec, const std::string& engine,
              const std::string& impl_name, const std::string& start_tuple,
              const std::string& start_coords, const std::string& trace,
              const std::string& format, const std::string& output) {
  const Poset p = Poset::product(spec.resolved());
  const bool tuple_engine =
      engine == "tuple" || (engine == "auto" && spec.is_two_by_n() && impl_name.empty());
  if (engine == "tuple" && !spec.is_two_by_n())
    throw std::invalid_argument("the tuple engine requires --m 2");

  Bits start;
  if (!start_tuple.empty()) {
    if (!spec.is_two_by_n())
      throw std::invalid_argument("--start tuple literals require --m 2");
    start = embed(parse_tuple(spec.chain_length(), start_tuple));
  } else if (!start_coords.empty()) {
    start = parse_coords(p, start_coords);
    if (!is_interval_closed(p, start))
      throw std::invalid_argument("--start-coords is not an interval-closed set");
  }

  RowImpl impl = RowImpl::simplified;
  if (impl_name == "local") impl = RowImpl::local;
  else if (impl_name == "threeset") impl = RowImpl::threeset;

  // states in orbit order beginning at the given start
  std::vector<Bits> states{start};
  if (tuple_engine) {
    const int n = spec.chain_length();
    const ChainTuple t0 = project(n, start);
    for (ChainTuple t = row_step(t0); !(t == t0); t = row_step(t))
      states.push_back(embed(t));
  } else {
    const Family fam = ics_family(p);
    for (Bits s = rowmotion_step(fam, start, impl); !(s == start);
         s = rowmotion_step(fam, s, impl))
      states.push_back(s);
  }

  const bool with_sc = trace == "sc";
  std::ofstream file;
  std::ostream& out = sink(file, output);
  auto tuple_str = [&](const Bits& s) {
    return spec.is_two_by_n() ? project(spec.chain_length(), s).str()
                              : set_to_string(p, s);
  };
  if (format == "json") {
    Json arr = Json::array();
    for (const Bits& s : states) {
      Json row{{"state", set_to_json(p, s)}};
      if (with_sc) row["sc"] = signed_cardinality(p, s);
      arr.push_back(row);
    }
    out << Json{{"poset", spec.resolved()}, {"size", states.size()}, {"orbit", arr}}.dump()
        << "\n";
  } else if (format == "csv") {
    out << "step,state" << (with_sc ? ",sc" : "") << "\n";
    for (size_t i = 0; i < states.size(); ++i) {
      out << i << "," << tuple_str(states[i]);
      if (with_sc) out << "," << signed_cardinality(p, states[i]);
      out << "\n";
    }
  } else {
    for (size_t i = 0; i < states.size(); ++i) {
      out << std::setw(6) << i << "  " << std::left << std::setw(28)
          << tuple_str(states[i]) << std::right;
      if (with_sc) out << "  sc=" << std::showpos << signed_cardinality(p, states[i])
                       << std::noshowpos;
      out << "\n";
    }
    out << "orbit size " << states.size() << "\n";
  }
  return 0;
}

int run_census(const PosetSpec& spec, const std::string& engine,
               const std::string& format, const std::string& output,
               unsigned workers, int cap) {
  const auto dims = spec.resolved();
  const bool tuple_engine =
      engine == "tuple" || (engine == "auto" && spec.is_two_by_n());
  if (engine == "tuple" && !spec.is_two_by_n())
    throw std::invalid_argument("the tuple engine requires --m 2");

  Census c;
  std::string engine_name;
  if (tuple_engine) {
    c = census(spec.chain_length(), workers);
    engine_name = "tuple";
  } else {
    const Poset p = Poset::product(dims);
    const Family fam = ics_family(p);
    engine_name = "generic";
    c.n = dims.back();
    c.total = 0;
    for (const Orbit& o : orbit_decomposition(fam, RowImpl::simplified, cap)) {
      c.total += o.size();
      auto it = std::find_if(c.rows.begin(), c.rows.end(),
                             [&](const CensusRow& r) { return r.size == o.size(); });
      if (it == c.rows.end())
        c.rows.push_back({o.size(), 1, {}});
      else
        ++it->count;
    }
    std::sort(c.rows.begin(), c.rows.end(),
              [](const CensusRow& a, const CensusRow& b) { return a.size < b.size; });
  }

  std::ofstream file;
  std::ostream& out = sink(file, output);
  if (format == "json") {
    Json j;
    if (spec.is_two_by_n()) {
      j = census_to_json(c, engine_name);
    } else {
      j["dims"] = dims;
      j["engine"] = engine_name;
      j["total"] = c.total;
      Json orbits = Json::array();
      for (const auto& r : c.rows)
        orbits.push_back(Json{{"size", r.size}, {"count", r.count}});
      j["orbits"] = orbits;
    }
    out << j.dump() << "\n";
  } else if (format == "csv") {
    if (tuple_engine) {
      out << census_to_csv(c);
    } else {
      out << "size,count,example_representative\n";
      for (const auto& r : c.rows) out << r.size << "," << r.count << ",-\n";
    }
  } else {
    out << std::setw(10) << "size" << std::setw(10) << "count" << "  example\n";
    for (const auto& r : c.rows)
      out << std::setw(10) << r.size << std::setw(10) << r.count << "  "
          << (tuple_engine ? r.representative.str() : std::string("-")) << "\n";
    out << "total " << c.total << " sets in "
        << std::accumulate(c.rows.begin(), c.rows.end(), uint64_t{0},
                           [](uint64_t a, const CensusRow& r) { return a + r.count; })
        << " orbits\n";
  }
  return 0;
}

int report_cases(const std::vector<VerificationCase>& cases,
                 const std::string& suite, const std::string& format,
                 const std::string& output) {
  if (const char* dir = std::getenv("ICSROW_RESULTS_DIR"))
    append_results_jsonl(dir, suite, cases);
  std::ofstream file;
  std::ostream& out = sink(file, output);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& c : cases) arr.push_back(case_to_json(c));
    out << arr.dump() << "\n";
  } else {
    for (const auto& c : cases) {
      out << (c.pass ? "PASS  " : "FAIL  ") << c.id;
      if (!c.pass) out << "  expected=" << c.expected << "  computed=" << c.computed;
      out << "\n";
    }
    size_t passed = 0;
    for (const auto& c : cases) passed += c.pass;
    out << passed << "/" << cases.size() << " cases pass\n";
  }
  return all_pass(cases) ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& format,
               const std::string& output, unsigned workers) {
  std::vector<VerificationCase> cases;
  if (suite == "table4" || suite == "all") {
    auto t = run_table4_suite(workers);
    cases.insert(cases.end(), t.begin(), t.end());
  }
  if (suite == "homomesy" || suite == "all") {
    auto t = run_homomesy_suite(workers);
    cases.insert(cases.end(), t.begin(), t.end());
  }
  if (suite == "singletons" || suite == "all") {
    for (int n : {10, 11, 12, 13}) {
      auto t = verify_singleton_dynamics(n);
      cases.insert(cases.end(), t.begin(), t.end());
    }
  }
  if (cases.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return report_cases(cases, suite, format, output);
}

int run_homomesy(const PosetSpec& spec, const std::string& family,
                 const std::string& stat_name, const std::string& impl_name,
                 const std::string& format, const std::string& output, int cap) {
  const Poset p = Poset::product(spec.resolved());
  const Family fam = family == "ideals" ? ideal_family(p) : ics_family(p);
  Statistic stat = stat_signed_cardinality();
  if (stat_name == "cardinality") stat = stat_cardinality();
  else if (stat_name == "max-minus-min" || stat_name == "maxmin")
    stat = stat_max_minus_min();
  else if (stat_name != "sc" && stat_name != "signed-cardinality")
    throw std::invalid_argument("unknown statistic '" + stat_name + "'");
  RowImpl impl = RowImpl::simplified;
  if (impl_name == "local") impl = RowImpl::local;
  else if (impl_name == "threeset") impl = RowImpl::threeset;

  const HomomesyReport rep = homomesy_check(fam, stat, impl, cap);
  std::ofstream file;
  std::ostream& out = sink(file, output);
  if (format == "json") {
    Json j = homomesy_to_json(rep);
    j["poset"] = spec.resolved();
    j["family"] = family;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "orbit,size,average\n";
    for (size_t i = 0; i < rep.per_orbit.size(); ++i)
      out << i << "," << rep.per_orbit[i].first << ","
          << rational_string(rep.per_orbit[i].second) << "\n";
  } else {
    out << "statistic " << rep.statistic << " on " << family << " of [";
    const auto dims = spec.resolved();
    for (size_t i = 0; i < dims.size(); ++i) out << (i ? "]x[" : "") << dims[i];
    out << "]\n";
    for (size_t i = 0; i < rep.per_orbit.size(); ++i)
      out << std::setw(6) << i << "  size " << std::setw(6) << rep.per_orbit[i].first
          << "  average " << rational_string(rep.per_orbit[i].second) << "\n";
    out << "global average " << rational_string(rep.global_average) << "; "
        << (rep.homomesic
                ? "homomesic (" + rational_string(rep.global_average) + "-mesic)"
                : "not homomesic (orbit " + std::to_string(rep.counterexample_orbit) +
                      " differs)")
        << "\n";
  }
  return 0;
}

int run_explore(const std::string& mode, int m, int n_min, int n_max,
                const std::string& format, const std::string& output, int cap) {
  std::vector<int> n_range;
  for (int n = n_min; n <= n_max; ++n) n_range.push_back(n);
  std::ofstream file;
  if (mode == "fraction") {
    const auto samples = explore_orbit_fraction(m, n_range, cap);
    std::ostream& out = sink(file, output);
    if (format == "json") {
      Json arr = Json::array();
      for (const auto& s : samples)
        arr.push_back(Json{{"m", s.m},
                           {"n", s.n},
                           {"total_ics", s.total_ics},
                           {"in_target_orbits", s.in_target_orbits},
                           {"ratio", rational_string(s.ratio)},
                           {"good_ics_count", s.good_ics_count}});
      out << arr.dump() << "\n";
    } else if (format == "csv") {
      out << "m,n,total_ics,in_target_orbits,ratio,good_ics_count\n";
      for (const auto& s : samples)
        out << s.m << "," << s.n << "," << s.total_ics << "," << s.in_target_orbits
            << "," << rational_string(s.ratio) << "," << s.good_ics_count << "\n";
    } else {
      out << std::setw(4) << "n" << std::setw(12) << "total" << std::setw(12)
          << "in-target" << std::setw(14) << "fraction" << std::setw(10) << "good\n";
      for (const auto& s : samples)
        out << std::setw(4) << s.n << std::setw(12) << s.total_ics << std::setw(12)
            << s.in_target_orbits << std::setw(14) << std::fixed
            << std::setprecision(6) << s.ratio.get_d() << std::setw(9)
            << s.good_ics_count << "\n";
    }
    return 0;
  }
  if (mode == "maxmin")
    return report_cases(explore_max_minus_min(m, n_range, cap), "explore-maxmin",
                        format, output);
  throw std::invalid_argument("unknown explore mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rowmotion dynamics on interval-closed sets of finite posets"};
  app.require_subcommand(1);

  PosetSpec spec;
  std::string engine = "auto", impl, format = "table", output, suite = "all";
  std::string start_tuple, start_coords, trace, family = "ics", stat = "sc";
  std::string mode = "fraction";
  unsigned workers = 1;
  int cap = kDefaultEnumerationCap;
  int n_min = 2, n_max = 12;

  auto add_poset_flags = [&](CLI::App* cmd) {
    cmd->add_option("--m", spec.m, "first chain length");
    cmd->add_option("--n", spec.n, "second chain length");
    cmd->add_option("--dims", spec.dims, "explicit chain lengths (overrides --m/--n)");
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--output", output, "write the report here instead of stdout");
  };

  auto* c_enum = app.add_subcommand("enumerate", "list all interval-closed sets");
  add_poset_flags(c_enum);
  add_common(c_enum);
  c_enum->add_option("--cap", cap, "enumeration cap (elements)");

  auto* c_orbit = app.add_subcommand("orbit", "trace one rowmotion orbit");
  add_poset_flags(c_orbit);
  add_common(c_orbit);
  c_orbit->add_option("--engine", engine, "generic|tuple|auto")
      ->check(CLI::IsMember({"generic", "tuple", "auto"}));
  c_orbit->add_option("--impl", impl, "local|threeset|simplified")
      ->check(CLI::IsMember({"local", "threeset", "simplified"}));
  c_orbit->add_option("--start", start_tuple,
                      "tuple literal b1,i1,a1:b2,i2,a2 ('E' for an empty side)");
  c_orbit->add_option("--start-coords", start_coords, "coordinate list i,j;i,j;...");
  c_orbit->add_option("--trace", trace, "extra column: sc");

  auto* c_census = app.add_subcommand("census", "orbit census of a poset");
  add_poset_flags(c_census);
  add_common(c_census);
  c_census->add_option("--engine", engine, "generic|tuple|auto")
      ->check(CLI::IsMember({"generic", "tuple", "auto"}));
  c_census->add_option("--workers", workers, "worker threads");
  c_census->add_option("--cap", cap, "enumeration cap (generic engine)");

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  add_common(c_verify);
  c_verify->add_option("--suite", suite, "table4|homomesy|singletons|all");
  c_verify->add_option("--workers", workers, "worker threads");

  auto* c_hom = app.add_subcommand("homomesy", "per-orbit statistic averages");
  add_poset_flags(c_hom);
  add_common(c_hom);
  c_hom->add_option("--family", family, "ics|ideals")
      ->check(CLI::IsMember({"ics", "ideals"}));
  c_hom->add_option("--stat", stat, "cardinality|sc|max-minus-min");
  c_hom->add_option("--impl", impl, "local|threeset|simplified")
      ->check(CLI::IsMember({"local", "threeset", "simplified"}));
  c_hom->add_option("--cap", cap, "enumeration cap");

  auto* c_explore = app.add_subcommand("explore", "conjecture exploration");
  add_common(c_explore);
  c_explore->add_option("--mode", mode, "fraction|maxmin");
  c_explore->add_option("--m", spec.m, "first chain length")->required();
  c_explore->add_option("--n-min", n_min, "smallest n");
  c_explore->add_option("--n-max", n_max, "largest n");
  c_explore->add_option("--cap", cap, "enumeration cap (generic engine)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spec.m == 0 && spec.dims.empty()) spec.m = 2;
    if (spec.n == 0 && spec.dims.empty()) spec.n = 4;
    if (c_enum->parsed()) return run_enumerate(spec, format, output, cap);
    if (c_orbit->parsed())
      return run_orbit(spec, engine, impl, start_tuple, start_coords, trace, format,
                       output);
    if (c_census->parsed())
      return run_census(spec, engine, format, output, workers, cap);
    if (c_verify->parsed()) return run_verify(suite, format, output, workers);
    if (c_hom->parsed())
      return run_homomesy(spec, family, stat, impl, format, output, cap);
    if (c_explore->parsed())
      return run_explore(mode, spec.m, n_min, n_max, format, output, cap);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    if (msg.find("enumeration cap") != std::string::npos)
      msg += " (raise it with --cap)";
    std::cerr << "error: " << msg << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
