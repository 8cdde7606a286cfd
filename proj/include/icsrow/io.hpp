#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "icsrow/census_tables.hpp"
#include "icsrow/dynamics.hpp"
#include "icsrow/two_by_n.hpp"
#include "icsrow/verification.hpp"

namespace icsrow {

// Insertion-ordered JSON so emitted documents are stable byte-for-byte.
using Json = nlohmann::ordered_json;

// An element set as a sorted list of coordinates, e.g. [[1,1],[2,3]].
inline Json set_to_json(const Poset& p, const Bits& s) {
  Json arr = Json::array();
  s.for_each([&](int e) { arr.push_back(p.coords_of(e)); });
  return arr;
}

inline std::string set_to_string(const Poset& p, const Bits& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](int e) {
    os << (first ? "" : ",") << "(";
    const auto c = p.coords_of(e);
    for (size_t a = 0; a < c.size(); ++a) os << (a ? "," : "") << c[a];
    os << ")";
    first = false;
  });
  os << "}";
  return os.str();
}

inline Json orbit_to_json(const Poset& p, const Orbit& o) {
  Json arr = Json::array();
  for (const Bits& s : o.states) arr.push_back(set_to_json(p, s));
  return arr;
}

inline Json census_to_json(const Census& c, const std::string& engine) {
  Json j;
  j["n"] = c.n;
  j["engine"] = engine;
  j["total"] = c.total;
  Json orbits = Json::array();
  for (const auto& r : c.rows) orbits.push_back(Json{{"size", r.size}, {"count", r.count}});
  j["orbits"] = orbits;
  j["matches_prediction"] = c.size_multiset() == predicted_census(c.n);
  return j;
}

inline std::string census_to_csv(const Census& c) {
  std::ostringstream os;
  os << "size,count,example_representative\n";
  for (const auto& r : c.rows)
    os << r.size << "," << r.count << "," << r.representative.str() << "\n";
  return os.str();
}

inline Json homomesy_to_json(const HomomesyReport& rep) {
  Json j;
  j["statistic"] = rep.statistic;
  Json per = Json::array();
  for (const auto& [size, avg] : rep.per_orbit)
    per.push_back(Json{{"size", size}, {"average", rational_string(avg)}});
  j["per_orbit"] = per;
  j["global_average"] = rational_string(rep.global_average);
  j["homomesic"] = rep.homomesic;
  if (!rep.homomesic) j["counterexample_orbit"] = rep.counterexample_orbit;
  return j;
}

inline Json case_to_json(const VerificationCase& c) {
  return Json{{"id", c.id},
              {"description", c.description},
              {"expected", c.expected},
              {"computed", c.computed},
              {"pass", c.pass}};
}

// Appends one JSON line per case; re-runs accumulate with timestamps.
inline void append_results_jsonl(const std::filesystem::path& dir,
                                 const std::string& suite,
                                 const std::vector<VerificationCase>& cases) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / (suite + ".jsonl"), std::ios::app);
  const auto now = std::chrono::system_clock::now();
  const auto stamp =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  for (const auto& c : cases) {
    Json j = case_to_json(c);
    j["suite"] = suite;
    j["timestamp"] = stamp;
    out << j.dump() << "\n";
  }
}

}  // namespace icsrow
