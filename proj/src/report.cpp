#include "bernstein/report.hpp"

#include <cstdint>

namespace bernstein {

namespace {

// Emit a bignum as a JSON integer when it fits in 64 bits, as a decimal
// string otherwise.
nlohmann::json to_json(const BigInt& b) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (b >= lo && b <= hi) return b.convert_to<std::int64_t>();
  return b.str();
}

nlohmann::json to_json(const std::variant<Rational, double>& value) {
  if (std::holds_alternative<double>(value)) return std::get<double>(value);
  return bernstein::to_json(std::get<Rational>(value));
}

}  // namespace

nlohmann::json to_json(const Rational& r) {
  return {{"num", to_json(numerator(r))}, {"den", to_json(denominator(r))}};
}

nlohmann::json to_json(const Counterexample& ce) {
  nlohmann::json out;
  out["k"] = ce.k;
  out["n"] = ce.n;
  if (ce.m) out["m"] = *ce.m;
  if (ce.j) out["j"] = *ce.j;
  if (ce.sigma) out["sigma"] = *ce.sigma;
  if (ce.q) out["q"] = *ce.q;
  out["v"] = ce.v;
  nlohmann::json coords = nlohmann::json::array();
  for (const Rational& c : ce.x) coords.push_back(to_json(c));
  out["x"] = coords;
  out["lhs"] = to_json(ce.lhs);
  out["rhs"] = to_json(ce.rhs);
  return out;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Counterexample& ce : report.entries) arr.push_back(to_json(ce));
  return arr;
}

}  // namespace bernstein
