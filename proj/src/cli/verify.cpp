#include "kanenobu/cli/verify.hpp"

#include <cstdlib>
#include <functional>

#include "kanenobu/diagram/kanenobu_diagram.hpp"
#include "kanenobu/diagram/limits.hpp"
#include "kanenobu/family/audit.hpp"
#include "kanenobu/family/closed_forms.hpp"
#include "kanenobu/family/crossing_number.hpp"
#include "kanenobu/family/khovanov_table.hpp"
#include "kanenobu/khovanov/structure.hpp"
#include "kanenobu/polyinv/jones.hpp"
#include "kanenobu/polyinv/kauffman.hpp"

namespace kanenobu {

namespace {

using Task = std::function<CheckResult()>;

std::string pq_name(const char* what, int p, int q) {
  return std::string(what) + " K(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

CheckResult outcome(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, false, ok ? std::string() : std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), true, true, std::move(why)}; }

bool wants(const VerifyOptions& opt, const char* suite) { return opt.suite == "all" || opt.suite == suite; }

void add_tasks(const VerifyOptions& opt, std::vector<Task>& tasks) {
  const int m = opt.max;
  for (int p = -m; p <= m; ++p) {
    for (int q = -m; q <= m; ++q) {
      const int n = std::abs(p) + std::abs(q) + 8;
      if (wants(opt, "jones"))
        tasks.push_back([=] {
          const std::string name = pq_name("jones", p, q);
          if (n > opt.cube_cap) return skipped(name, "over bracket cap");
          const LaurentPoly1 v = jones(kanenobu_diagram(p, q), {opt.cube_cap});
          const LaurentPoly1 want = jones_closed_form(p, q);
          return outcome(name, v == want, v.to_string() + " != " + want.to_string());
        });
      if (wants(opt, "qpoly"))
        tasks.push_back([=] {
          const std::string name = pq_name("qpoly", p, q);
          if (n > opt.kauffman_cap) return skipped(name, "over Kauffman cap");
          const LaurentPoly1 got = q_polynomial(kanenobu_diagram(p, q), {opt.kauffman_cap});
          const LaurentPoly1 want = q_closed_form(p, q);
          const bool deg_ok = got.max_half() / 2 == q_degree_closed_form(p, q);
          return outcome(name, got == want && deg_ok, got.to_string() + " vs " + want.to_string());
        });
      if (wants(opt, "khovanov") && std::abs(p + q) <= opt.sum_max)
        tasks.push_back([=] {
          const std::string name = pq_name("khovanov", p, q);
          if (n > opt.cube_cap) return skipped(name, "over cube cap");
          const PlanarDiagram d = kanenobu_diagram(p, q);
          const BigradedDims h = homology_dims(d, {opt.cube_cap});
          const auto s = thinness_s(h);
          const bool ok = h == khovanov_closed_form(p, q) && euler_check(h, jones(d, {opt.cube_cap})) && s &&
                          *s == 0 && knight_move_check(h, 0);
          return outcome(name, ok, h.to_string());
        });
      if (wants(opt, "crossing")) {
        tasks.push_back([=] {
          const CrossingNumberResult c = crossing_number(p, q);
          const bool sym = c == crossing_number(q, p) && c == crossing_number(-p, -q);
          const bool above = !c.is_exact() || c.exact >= breadth_closed_form(p, q);
          return outcome(pq_name("crossing", p, q), sym && above, "asymmetric or below breadth bound");
        });
        tasks.push_back([=] {
          const std::string name = pq_name("kidwell", p, q);
          if (n > opt.kauffman_cap) return skipped(name, "over Kauffman cap");
          const KidwellReport r = kidwell_audit(p, q, opt.kauffman_cap);
          return outcome(name, r.inequality_holds && r.crossings == n,
                         std::to_string(r.deg_q) + " + " + std::to_string(r.bridge) + " > " + std::to_string(r.crossings));
        });
      }
      if (wants(opt, "closed"))
        tasks.push_back([=] {
          const BigradedDims h = khovanov_closed_form(p, q);
          const LaurentPoly1 v = jones_closed_form(p, q);
          const LaurentPoly1 qp = q_closed_form(p, q);
          const auto s = thinness_s(h);
          const bool ok = euler_check(h, v) && breadth(v) == breadth_closed_form(p, q) && s && *s == 0 &&
                          knight_move_check(h, 0) && qp.min_half() >= 0 && qp.max_half() / 2 == q_degree_closed_form(p, q);
          return outcome(pq_name("closed", p, q), ok, "closed forms disagree");
        });
    }
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  std::vector<Task> tasks;
  add_tasks(opt, tasks);
  std::vector<CheckResult> out(tasks.size());
  const long nt = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < nt; ++k) {
    try {
      out[k] = tasks[k]();
    } catch (const std::exception& e) {
      out[k] = {"task " + std::to_string(k), false, false, e.what()};
    }
  }
  return out;
}

bool print_checks(const std::vector<CheckResult>& checks, std::ostream& os) {
  bool ok = true;
  std::size_t pass = 0, skip = 0;
  for (const auto& c : checks) {
    if (c.skipped) {
      ++skip;
      os << "SKIP " << c.name << ": " << c.detail << '\n';
    } else if (c.pass) {
      ++pass;
      os << "PASS " << c.name << '\n';
    } else {
      ok = false;
      os << "FAIL " << c.name << ": " << c.detail << '\n';
    }
  }
  os << pass << " passed, " << (checks.size() - pass - skip) << " failed, " << skip << " skipped\n";
  return ok;
}

}  // namespace kanenobu
