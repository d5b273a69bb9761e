#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kanenobu/algebra/laurent.hpp"
#include "kanenobu/family/crossing_number.hpp"
#include "kanenobu/khovanov/bigraded.hpp"

namespace kanenobu {

inline constexpr const char* kEngineVersion = "kanenobu-engine 1";

struct InvariantReport {
  std::string input;
  std::string engine_version = kEngineVersion;
  int crossings = 0;
  int components = 1;
  std::optional<LaurentPoly1> jones;
  std::optional<LaurentPoly1> q_poly;
  std::optional<Rational> breadth;
  std::optional<int> deg_q;
  std::optional<BigradedDims> khovanov;
  std::optional<std::vector<int>> lee_degrees;
  std::optional<CrossingNumberResult> crossing_number;
  std::map<std::string, bool> checks;
  std::vector<std::string> notes;
  std::optional<double> wall_time;
};

// Polynomials as lists of [exponent, coefficient]; Jones exponents count
// half-units of t, q_poly exponents whole units of x.
nlohmann::json poly_to_json(const LaurentPoly1& p, bool half_units);
LaurentPoly1 poly_from_json(const nlohmann::json& j, Var v, bool half_units);
nlohmann::json dims_to_json(const BigradedDims& d);
BigradedDims dims_from_json(const nlohmann::json& j);
nlohmann::json crossing_to_json(const CrossingNumberResult& c);
CrossingNumberResult crossing_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

// Rows i ascending, columns j ascending, blank cells for 0.
std::string format_khovanov_table(const BigradedDims& d);
std::string format_crossing(const CrossingNumberResult& c);
std::string format_report_table(const InvariantReport& r);

}  // namespace kanenobu
