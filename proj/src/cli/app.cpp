#include "kanenobu/cli/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kanenobu/cli/cache.hpp"
#include "kanenobu/cli/report.hpp"
#include "kanenobu/cli/verify.hpp"
#include "kanenobu/diagram/kanenobu_diagram.hpp"
#include "kanenobu/diagram/limits.hpp"
#include "kanenobu/diagram/operations.hpp"
#include "kanenobu/diagram/pd_io.hpp"
#include "kanenobu/family/audit.hpp"
#include "kanenobu/family/closed_forms.hpp"
#include "kanenobu/family/crossing_number.hpp"
#include "kanenobu/family/khovanov_table.hpp"
#include "kanenobu/khovanov/lee.hpp"
#include "kanenobu/khovanov/structure.hpp"
#include "kanenobu/polyinv/jones.hpp"
#include "kanenobu/polyinv/kauffman.hpp"

namespace kanenobu {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::vector<int> kanenobu;
  std::string pd;
  std::string format = "table";
  int max_crossings = -1;
  bool no_cache = false;
  bool timing = false;
};

struct Input {
  PlanarDiagram d;
  std::string descriptor;
  std::optional<std::pair<int, int>> pq;
};

struct Caps {
  int cube = 14;
  int kauffman = 12;
};

void add_input_flags(CLI::App* cmd, InputFlags& f, bool with_format) {
  cmd->add_option("--kanenobu", f.kanenobu, "K(P,Q) from the generated diagram")->expected(2)->allow_extra_args(false);
  cmd->add_option("--pd", f.pd, "pdcode v1 file");
  if (with_format) cmd->add_option("--format", f.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--max-crossings", f.max_crossings, "override every crossing cap");
  cmd->add_flag("--no-cache", f.no_cache, "ignore KANENOBU_CACHE");
}

Input load(const InputFlags& f) {
  if (f.kanenobu.empty() == f.pd.empty()) throw InputError("give exactly one of --kanenobu P Q or --pd FILE");
  Input in;
  if (!f.kanenobu.empty()) {
    const int p = f.kanenobu[0], q = f.kanenobu[1];
    in.d = kanenobu_diagram(p, q);
    in.descriptor = "kanenobu " + std::to_string(p) + " " + std::to_string(q);
    in.pq = {p, q};
    return in;
  }
  in.d = read_pd_file(f.pd);
  if (auto err = validate(in.d)) throw InputError(std::string(defect_name(err->defect)) + ": " + err->message);
  in.descriptor = "pd " + std::filesystem::path(f.pd).filename().string();
  return in;
}

Caps caps_of(const InputFlags& f) {
  Caps c;
  if (f.max_crossings >= 0) c.cube = c.kauffman = f.max_crossings;
  return c;
}

// Cached invariant values.
class Engine {
 public:
  Engine(const PlanarDiagram& d, Caps caps, bool no_cache)
      : d_(d), caps_(caps), cache_(ResultCache::from_env(no_cache)), key_(canonical_encoding(d)) {}

  LaurentPoly1 jones_poly() {
    return poly_from_json(cached("jones", [&] { return poly_to_json(jones(d_, {caps_.cube}), true); }), Var::t, true);
  }
  LaurentPoly1 q_poly() {
    return poly_from_json(cached("q_poly", [&] { return poly_to_json(q_polynomial(d_, {caps_.kauffman}), false); }),
                          Var::x, false);
  }
  BigradedDims khovanov() {
    BigradedDims h = dims_from_json(cached("khovanov", [&] { return dims_to_json(homology_dims(d_, {caps_.cube})); }));
    h.components = d_.components();
    return h;
  }
  std::vector<int> lee() {
    return cached("lee_degrees", [&] { return json(lee_degrees(d_, caps_.cube)); }).get<std::vector<int>>();
  }
  const Caps& caps() const { return caps_; }

 private:
  template <class F>
  json cached(const char* name, F compute) {
    if (auto hit = cache_.get(key_, name)) return *hit;
    json v = compute();
    cache_.put(key_, name, v);
    return v;
  }

  const PlanarDiagram& d_;
  Caps caps_;
  ResultCache cache_;
  std::string key_;
};

InvariantReport build_report(const Input& in, Engine& e) {
  const PlanarDiagram& d = in.d;
  const int n = static_cast<int>(d.size());
  check_cap("cube", n, e.caps().cube);

  InvariantReport r;
  r.input = in.descriptor;
  r.crossings = n;
  r.components = d.components();
  r.jones = e.jones_poly();
  if (!r.jones->is_zero()) r.breadth = breadth(*r.jones);
  if (n <= e.caps().kauffman) {
    r.q_poly = e.q_poly();
    r.deg_q = r.q_poly->max_half() / 2;
  } else {
    r.notes.push_back("q_poly skipped: " + std::to_string(n) + " crossings exceeds Kauffman cap " +
                      std::to_string(e.caps().kauffman));
  }
  r.khovanov = e.khovanov();
  r.lee_degrees = e.lee();

  const BigradedDims& h = *r.khovanov;
  r.checks["euler"] = euler_check(h, *r.jones);
  r.checks["lee_total"] = r.lee_degrees->size() == (std::size_t{1} << r.components);
  if (r.breadth) r.checks["breadth_le_crossings"] = *r.breadth <= n;
  if (r.deg_q) r.checks["kidwell"] = *r.deg_q + bridge_length(d) <= n;
  if (r.components == 1) {
    const auto s = thinness_s(h);
    r.checks["thin"] = s.has_value();
    if (s) r.checks["knight_move"] = knight_move_check(h, *s);
  }
  if (in.pq) {
    const auto [p, q] = *in.pq;
    r.crossing_number = crossing_number(p, q);
    r.checks["jones_closed_form"] = *r.jones == jones_closed_form(p, q);
    r.checks["breadth_closed_form"] = r.breadth && *r.breadth == breadth_closed_form(p, q);
    r.checks["khovanov_closed_form"] = h == khovanov_closed_form(p, q);
    r.checks["s_zero"] = thinness_s(h) == std::optional<int>(0);
    if (r.q_poly) {
      r.checks["q_closed_form"] = *r.q_poly == q_closed_form(p, q);
      r.checks["q_degree_closed_form"] = *r.deg_q == q_degree_closed_form(p, q);
    }
    if (!alternating_exceptions().count({p, q}) && r.breadth) r.checks["breadth_lt_crossings"] = *r.breadth < n;
  }
  return r;
}

void emit(std::ostream& out, const InputFlags& f, const json& j, const std::string& table) {
  if (f.format == "json")
    out << j.dump(2) << '\n';
  else
    out << table;
}

}  // namespace

int run_app(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kanenobu knot invariants"};
  app.require_subcommand(1);

  int gp = 0, gq = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write the K(P,Q) diagram");
  gen->add_option("P", gp)->required();
  gen->add_option("Q", gq)->required();
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  InputFlags f;
  auto* inv = app.add_subcommand("invariants", "full invariant report");
  add_input_flags(inv, f, true);
  inv->add_flag("--timing", f.timing, "include wall time");
  auto* kh = app.add_subcommand("khovanov", "Khovanov homology table");
  add_input_flags(kh, f, true);
  auto* qp = app.add_subcommand("qpoly", "Q polynomial");
  add_input_flags(qp, f, true);
  auto* jo = app.add_subcommand("jones", "Jones polynomial");
  add_input_flags(jo, f, true);
  auto* cr = app.add_subcommand("crossing", "crossing number of K(P,Q)");
  add_input_flags(cr, f, true);

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "check closed forms against computations");
  ver->add_option("--suite", vo.suite)->check(CLI::IsMember({"jones", "qpoly", "khovanov", "crossing", "closed", "all"}));
  ver->add_option("--max", vo.max, "grid |p|,|q| <= N")->check(CLI::NonNegativeNumber);
  ver->add_option("--sum-max", vo.sum_max, "khovanov grid |p+q| <= N")->check(CLI::NonNegativeNumber);
  ver->add_option("--max-crossings", f.max_crossings, "override every crossing cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      const PlanarDiagram d = kanenobu_diagram(gp, gq);
      const std::string comment = "K(" + std::to_string(gp) + "," + std::to_string(gq) + ")";
      if (gen_out.empty())
        out << format_pd(d, comment);
      else
        write_pd_file(gen_out, d, comment);
      return 0;
    }
    if (*ver) {
      if (f.max_crossings >= 0) vo.cube_cap = vo.kauffman_cap = f.max_crossings;
      return print_checks(run_verify(vo), out) ? 0 : 1;
    }

    if (*cr) {
      if (f.kanenobu.size() != 2) throw InputError("crossing needs --kanenobu P Q");
      const CrossingNumberResult c = crossing_number(f.kanenobu[0], f.kanenobu[1]);
      emit(out, f, crossing_to_json(c), format_crossing(c) + "\n");
      return 0;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const Input in = load(f);
    Engine e(in.d, caps_of(f), f.no_cache);
    const int n = static_cast<int>(in.d.size());
    if (*inv) {
      InvariantReport r = build_report(in, e);
      if (f.timing) r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      emit(out, f, to_json(r), format_report_table(r));
    } else if (*jo) {
      check_cap("bracket", n, e.caps().cube);
      const LaurentPoly1 v = e.jones_poly();
      emit(out, f, {{"input", in.descriptor}, {"jones", poly_to_json(v, true)}}, v.to_string() + "\n");
    } else if (*qp) {
      check_cap("kauffman", n, e.caps().kauffman);
      const LaurentPoly1 q = e.q_poly();
      emit(out, f, {{"input", in.descriptor}, {"q_poly", poly_to_json(q, false)}}, q.to_string() + "\n");
    } else if (*kh) {
      check_cap("cube", n, e.caps().cube);
      const BigradedDims h = e.khovanov();
      emit(out, f, {{"input", in.descriptor}, {"khovanov", dims_to_json(h)}}, format_khovanov_table(h));
    }
    return 0;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PdParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace kanenobu
