#include "kanenobu/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kanenobu {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return integer_to_json(numerator(r));
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  }
  return Rational(j.get<std::int64_t>());
}

template <class T, class F>
json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}

}  // namespace

json poly_to_json(const LaurentPoly1& p, bool half_units) {
  json out = json::array();
  for (const auto& [h, c] : p.terms()) out.push_back({half_units ? h : h / 2, integer_to_json(c)});
  return out;
}

LaurentPoly1 poly_from_json(const json& j, Var v, bool half_units) {
  LaurentPoly1 p(v);
  for (const auto& term : j) p.add_term_half(half_units ? term.at(0).get<int>() : 2 * term.at(0).get<int>(), integer_from_json(term.at(1)));
  return p;
}

json dims_to_json(const BigradedDims& d) {
  json out = json::array();
  for (const auto& [ij, dim] : d.cells) out.push_back({ij.first, ij.second, dim});
  return out;
}

BigradedDims dims_from_json(const json& j) {
  BigradedDims d;
  for (const auto& c : j) d.add(c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<long long>());
  return d;
}

json crossing_to_json(const CrossingNumberResult& c) {
  json out;
  if (c.is_exact()) {
    out["exact"] = c.exact;
  } else {
    out["lo"] = c.lo;
    out["hi"] = c.hi;
    out["conjectured"] = c.conjectured ? json(*c.conjectured) : json(nullptr);
  }
  out["note"] = c.note;
  return out;
}

CrossingNumberResult crossing_from_json(const json& j) {
  const std::string note = j.value("note", "");
  if (j.contains("exact")) return CrossingNumberResult::make_exact(j.at("exact").get<int>(), note);
  std::optional<int> conj;
  if (j.contains("conjectured") && !j.at("conjectured").is_null()) conj = j.at("conjectured").get<int>();
  return CrossingNumberResult::make_bounds(j.at("lo").get<int>(), j.at("hi").get<int>(), conj, note);
}

json to_json(const InvariantReport& r) {
  json out;
  out["input"] = r.input;
  out["engine_version"] = r.engine_version;
  out["crossings"] = r.crossings;
  out["components"] = r.components;
  out["jones"] = optional_json(r.jones, [](const auto& p) { return poly_to_json(p, true); });
  out["q_poly"] = optional_json(r.q_poly, [](const auto& p) { return poly_to_json(p, false); });
  out["breadth"] = optional_json(r.breadth, rational_to_json);
  out["deg_q"] = optional_json(r.deg_q, [](int v) { return json(v); });
  out["khovanov"] = optional_json(r.khovanov, dims_to_json);
  out["lee_degrees"] = optional_json(r.lee_degrees, [](const auto& v) { return json(v); });
  out["crossing_number"] = optional_json(r.crossing_number, crossing_to_json);
  out["checks"] = json::object();
  for (const auto& [name, ok] : r.checks) out["checks"][name] = ok;
  out["notes"] = r.notes;
  if (r.wall_time) out["wall_time"] = *r.wall_time;
  return out;
}

InvariantReport report_from_json(const json& j) {
  InvariantReport r;
  r.input = j.at("input").get<std::string>();
  r.engine_version = j.at("engine_version").get<std::string>();
  r.crossings = j.at("crossings").get<int>();
  r.components = j.at("components").get<int>();
  if (!j.at("jones").is_null()) r.jones = poly_from_json(j.at("jones"), Var::t, true);
  if (!j.at("q_poly").is_null()) r.q_poly = poly_from_json(j.at("q_poly"), Var::x, false);
  if (!j.at("breadth").is_null()) r.breadth = rational_from_json(j.at("breadth"));
  if (!j.at("deg_q").is_null()) r.deg_q = j.at("deg_q").get<int>();
  if (!j.at("khovanov").is_null()) {
    r.khovanov = dims_from_json(j.at("khovanov"));
    r.khovanov->components = r.components;
  }
  if (!j.at("lee_degrees").is_null()) r.lee_degrees = j.at("lee_degrees").get<std::vector<int>>();
  if (!j.at("crossing_number").is_null()) r.crossing_number = crossing_from_json(j.at("crossing_number"));
  for (const auto& [name, ok] : j.at("checks").items()) r.checks[name] = ok.get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
  return r;
}

std::string format_khovanov_table(const BigradedDims& d) {
  if (d.cells.empty()) return "(empty)\n";
  int imin = d.cells.begin()->first.first, imax = d.cells.rbegin()->first.first;
  std::set<int> parity;
  int jmin = d.cells.begin()->first.second, jmax = jmin;
  for (const auto& [ij, _] : d.cells) {
    jmin = std::min(jmin, ij.second);
    jmax = std::max(jmax, ij.second);
    parity.insert(((ij.second % 2) + 2) % 2);
  }
  const int step = parity.size() == 1 ? 2 : 1;
  std::vector<int> js;
  for (int j = jmin; j <= jmax; j += step) js.push_back(j);

  std::size_t w = 3;
  for (int j : js) w = std::max(w, std::to_string(j).size());
  for (const auto& [_, dim] : d.cells) w = std::max(w, std::to_string(dim).size());
  std::ostringstream os;
  os << std::setw(static_cast<int>(w)) << "i\\j";
  for (int j : js) os << ' ' << std::setw(static_cast<int>(w)) << j;
  os << '\n';
  for (int i = imin; i <= imax; ++i) {
    std::string line;
    std::ostringstream row;
    row << std::setw(static_cast<int>(w)) << i;
    for (int j : js) {
      const long long v = d.at(i, j);
      row << ' ' << std::setw(static_cast<int>(w)) << (v == 0 ? std::string() : std::to_string(v));
    }
    line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

std::string format_crossing(const CrossingNumberResult& c) {
  std::ostringstream os;
  if (c.is_exact())
    os << "exact " << c.exact;
  else
    os << c.lo << ".." << c.hi << (c.conjectured ? ", conjectured " + std::to_string(*c.conjectured) : "");
  os << " (" << c.note << ")";
  return os.str();
}

std::string format_report_table(const InvariantReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << '\n';
  os << "engine: " << r.engine_version << '\n';
  os << "crossings: " << r.crossings << '\n';
  os << "components: " << r.components << '\n';
  if (r.jones) os << "jones: " << r.jones->to_string() << '\n';
  if (r.breadth) os << "breadth: " << *r.breadth << '\n';
  if (r.q_poly) os << "q_poly: " << r.q_poly->to_string() << '\n';
  if (r.deg_q) os << "deg_q: " << *r.deg_q << '\n';
  if (r.khovanov) os << "khovanov (total " << r.khovanov->total() << "):\n" << format_khovanov_table(*r.khovanov);
  if (r.lee_degrees) {
    os << "lee_degrees:";
    for (int i : *r.lee_degrees) os << ' ' << i;
    os << '\n';
  }
  if (r.crossing_number) os << "crossing_number: " << format_crossing(*r.crossing_number) << '\n';
  if (!r.checks.empty()) {
    os << "checks:\n";
    for (const auto& [name, ok] : r.checks) os << "  " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.wall_time) os << "wall_time: " << *r.wall_time << '\n';
  return os.str();
}

}  // namespace kanenobu
