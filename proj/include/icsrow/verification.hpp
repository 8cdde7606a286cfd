#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace icsrow {

// One checked expectation. pass is exact string equality of expected and
// computed, so every comparison that feeds a case must already be exact.
struct VerificationCase {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

inline VerificationCase make_case(std::string id, std::string description,
                                  std::string expected, std::string computed) {
  VerificationCase c{std::move(id), std::move(description), std::move(expected),
                     std::move(computed)};
  c.pass = c.expected == c.computed;
  return c;
}

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

template <typename T>
std::string show_vec(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

template <typename A, typename B>
std::string show_pairs(const std::vector<std::pair<A, B>>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i].first << ":" << v[i].second;
  os << "}";
  return os.str();
}

inline bool all_pass(const std::vector<VerificationCase>& cases) {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

}  // namespace icsrow
