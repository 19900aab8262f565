#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bernstein/multi_index.hpp"
#include "bernstein/simplex_point.hpp"

namespace bernstein {

/// One failed identity instance with everything needed to replay it.
/// lhs/rhs are exact rationals for the exact passes and doubles for the
/// float passes.
struct Counterexample {
  int k = 0;
  int n = 0;
  std::optional<int> m;                    // decomposition split
  std::optional<int> j;                    // axis of T_{j,.}
  std::optional<std::vector<int>> sigma;   // permutation image
  std::optional<double> q;                 // deformation parameter
  std::vector<int> v;
  std::vector<Rational> x;
  std::variant<Rational, double> lhs;
  std::variant<Rational, double> rhs;
};

/// Result of one identity suite. Failures beyond `entries` are only
/// counted, not stored, so a badly broken build cannot balloon the report.
struct Report {
  std::string suite;
  std::vector<Counterexample> entries;
  std::size_t total_failures = 0;

  bool passed() const { return total_failures == 0; }

  void record(Counterexample ce, std::size_t max_records) {
    ++total_failures;
    if (entries.size() < max_records) entries.push_back(std::move(ce));
  }
};

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Counterexample& ce);
nlohmann::json to_json(const Report& report);  // the entries array

}  // namespace bernstein
