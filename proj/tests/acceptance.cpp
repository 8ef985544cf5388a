// Acceptance run: prints one PASS/FAIL line per criterion.
// Exits 0 once every criterion has been evaluated; --strict turns any FAIL into exit 1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plategoal/adaptivity.hpp"
#include "plategoal/benchmarks.hpp"
#include "plategoal/hct.hpp"
#include "plategoal/hhj.hpp"
#include "plategoal/jet.hpp"
#include "plategoal/p2.hpp"
#include "plategoal/polynomial.hpp"
#include "plategoal/quadrature.hpp"
#include "plategoal/report.hpp"

namespace pg = plategoal;

namespace {

int g_failed = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Study {
  std::vector<pg::LevelRecord> records;
  double seconds = 0.0;
};

Study run(const std::string& id, pg::RefinementMode mode, int levels) {
  const pg::Problem p = pg::make_problem(id);
  pg::AdaptiveConfig cfg;
  cfg.mode = mode;
  cfg.levels = levels;
  cfg.theta = 0.25;
  const auto start = std::chrono::steady_clock::now();
  Study s;
  s.records = pg::run_adaptive(p, cfg, {});
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

std::optional<double> slope(const Study& s) {
  std::vector<double> n, e;
  for (const auto& r : s.records) {
    n.push_back(r.ndof);
    e.push_back(r.report.e_goal.value_or(0.0));
  }
  return pg::fit_slope(n, e, 3);
}

// Oracle suites for the discrete spaces, the jets and the singular solution.
struct OracleResult {
  double p2 = 0.0, hct = 0.0, hhj = 0.0, jet = 0.0, biharmonic = 0.0;
};

OracleResult oracles() {
  OracleResult o;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    pg::TriangleGeometry g;
    do {
      g = pg::TriangleGeometry({u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)});
    } while (g.area < 0.1);
    // Random quadratic q = c0 + c1 x + c2 y + c3 x^2 + c4 xy + c5 y^2.
    double c[6];
    for (double& v : c) v = u(rng);
    auto q = [&](pg::Point p) { return c[0] + c[1] * p.x + c[2] * p.y + c[3] * p.x * p.x + c[4] * p.x * p.y + c[5] * p.y * p.y; };
    auto gq = [&](pg::Point p) { return pg::Vec2{c[1] + 2 * c[3] * p.x + c[4] * p.y, c[2] + c[4] * p.x + 2 * c[5] * p.y}; };
    const pg::Sym2 hq{2 * c[3], c[4], 2 * c[5]};

    pg::P2Local pd{};
    pg::HctLocal hd{};
    for (int i = 0; i < 3; ++i) {
      const pg::Point a = g.p[(i + 1) % 3], b = g.p[(i + 2) % 3];
      pd[i] = q(g.p[i]);
      pd[3 + i] = q((a + b) * 0.5);
      hd[i] = q(g.p[i]);
      hd[3 + 2 * i] = gq(g.p[i]).x;
      hd[4 + 2 * i] = gq(g.p[i]).y;
      const pg::Vec2 e = b - a;
      hd[9 + i] = pg::dot(gq((a + b) * 0.5), pg::Vec2{e.y, -e.x} / pg::norm(e));
    }
    for (const pg::Bary& l : pg::triangle_rule(6).points) {
      const pg::Point x = g.map(l);
      const pg::P2Eval pe = pg::eval_p2(g, pd, l, 2);
      o.p2 = std::max({o.p2, std::abs(pe.value - q(x)), pg::norm(pe.gradient - gq(x)), pg::frobenius(pe.hessian - hq)});
      const pg::HctEval he = pg::eval_hct(g, hd, x, 2);
      o.hct = std::max({o.hct, std::abs(he.value - q(x)), pg::norm(he.gradient - gq(x)), pg::frobenius(he.hessian - hq)});
    }
    const pg::HhjElement el(g);
    std::array<pg::Sym2, 3> v;
    for (pg::Sym2& s : v) s = {u(rng), u(rng), u(rng)};
    const auto back = el.vertex_values(el.dofs_of(v));
    for (int i = 0; i < 3; ++i) o.hhj = std::max(o.hhj, pg::frobenius(back[i] - v[i]));
    if (!std::isfinite(el.condition_number())) o.hhj = INFINITY;

    // Jet of a random quartic against exact polynomial derivatives.
    const pg::Point ctr{0.5, 0.5};
    pg::BivariatePolynomial P(4, ctr);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) P.set_coeff(i, j, u(rng));
    }
    const pg::Point at{u(rng), u(rng)};
    const pg::Jet4 x = pg::Jet4::variable_x(at) + (-ctr.x), y = pg::Jet4::variable_y(at) + (-ctr.y);
    pg::Jet4 J(0.0);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        pg::Jet4 term(P.coeff(i, j));
        for (int k = 0; k < i; ++k) term = term * x;
        for (int k = 0; k < j; ++k) term = term * y;
        J = J + term;
      }
    }
    const pg::Jet4 J2 = J * J;
    const pg::BivariatePolynomial P2 = P * P;
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; i + j <= 4; ++j) {
        pg::BivariatePolynomial d = P, d2 = P2;
        for (int k = 0; k < i; ++k) {
          d = d.dx();
          d2 = d2.dx();
        }
        for (int k = 0; k < j; ++k) {
          d = d.dy();
          d2 = d2.dy();
        }
        o.jet = std::max(o.jet, std::abs(J.derivative(i, j) - d(at)) / (1.0 + std::abs(d(at))));
        o.jet = std::max(o.jet, std::abs(J2.derivative(i, j) - d2(at)) / (1.0 + std::abs(d2(at))));
      }
    }
  }
  for (pg::Point p : {pg::Point{0.3, 0.4}, pg::Point{-0.5, 0.2}, pg::Point{-0.3, -0.6}, pg::Point{0.7, 0.05}}) {
    const pg::Jet4 s = pg::example2::u_jet(p, false);
    const double scale = std::abs(24 * s.coeff(4, 0)) + std::abs(8 * s.coeff(2, 2)) + std::abs(24 * s.coeff(0, 4));
    o.biharmonic = std::max(o.biharmonic, std::abs(pg::bilaplacian(s)) / scale);
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

int run_cli(const std::string& cli, const std::filesystem::path& out) {
  const std::string cmd = "\"" + cli + "\" --problem example_2 --mode adaptive --theta 0.25 --levels 6 -q --out \"" +
                          out.string() + "\"";
  return std::system(cmd.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, work = "acceptance_work";
  bool strict = false;
  for (int k = 1; k < argc; ++k) {
    const std::string a = argv[k];
    if (a == "--cli" && k + 1 < argc) {
      cli = argv[++k];
    } else if (a == "--work" && k + 1 < argc) {
      work = argv[++k];
    } else if (a == "--strict") {
      strict = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--cli PATH] [--work DIR] [--strict]\n");
      return 2;
    }
  }

  try {
    const Study ex1 = run("example_1", pg::RefinementMode::uniform, 5);
    const Study ex2 = run("example_2", pg::RefinementMode::adaptive, 13);
    const Study ex2u = run("example_2", pg::RefinementMode::uniform, 5);

    // 1. guaranteed bound
    {
      bool ok = true;
      double worst = 0.0;
      for (const Study* s : {&ex1, &ex2}) {
        for (const auto& r : s->records) {
          const double ratio = *r.report.e_goal / r.report.eta_abs;
          worst = std::max(worst, ratio);
          ok &= *r.report.e_goal <= r.report.eta_abs;
        }
      }
      const double t = ex1.seconds + ex2.seconds;
      verdict(1, ok && t < 120.0,
              "max e_goal/eta_abs = " + fmt("%.4g", worst) + ", runtime " + fmt("%.1f s", t));
    }

    // 2. first benchmark reference values
    {
      const double qh = ex1.records.back().report.q_h;
      const double qex = pg::example1::goal_exact();
      const bool ok_qh = std::abs(qh - 0.06046477792) <= 2e-4;
      const bool ok_q = std::abs(qex - 0.06044290015) <= 5e-8;
      verdict(2, ok_qh && ok_q,
              "Q_h(level 5) = " + fmt("%.10g", qh) + " (|diff| " + fmt("%.3g", std::abs(qh - 0.06046477792)) +
                  ", tol 2e-4), Q(u) = " + fmt("%.11g", qex) + " (|diff| " +
                  fmt("%.3g", std::abs(qex - 0.06044290015)) + ", tol 5e-8)");
    }

    // 3. effectivities, first benchmark, finest level
    {
      const auto& r = ex1.records.back().report;
      const double ea = r.eff_abs.value_or(NAN), er = r.eff_res.value_or(NAN);
      verdict(3, ea >= 5 && ea <= 15 && er >= 1.2 && er <= 5,
              "eta_abs/e_goal = " + fmt("%.3f", ea) + " in [5,15], |eta_res|/e_goal = " + fmt("%.3f", er) +
                  " in [1.2,5]");
    }

    // 4. rate, first benchmark
    {
      const auto s = slope(ex1);
      verdict(4, s && *s >= -1.3 && *s <= -0.7, "slope e_goal vs ndof (last 3 levels) = " + fmt("%.3f", s.value_or(NAN)) + " in [-1.3,-0.7]");
    }

    // 5. adaptive vs uniform, second benchmark
    {
      const auto sa = slope(ex2), su = slope(ex2u);
      const auto& r = ex2.records.back().report;
      const double ea = r.eff_abs.value_or(NAN), er = r.eff_res.value_or(NAN);
      const bool ok_rate = sa && su && std::abs(*sa) >= 1.5 * std::abs(*su);
      verdict(5, ok_rate && ea >= 2 && ea <= 10 && er >= 1.2 && er <= 6,
              "adaptive slope " + fmt("%.3f", sa.value_or(NAN)) + " vs uniform " + fmt("%.3f", su.value_or(NAN)) +
                  ", eff_abs " + fmt("%.3f", ea) + " in [2,10], eff_res " + fmt("%.3f", er) + " in [1.2,6]");
    }

    // 6. discrete equilibrium, 7. C1 conformity
    {
      double eq = 0.0, c1 = 0.0;
      for (const Study* s : {&ex1, &ex2, &ex2u}) {
        for (const auto& r : s->records) {
          eq = std::max({eq, r.diag.equilibrium_primal, r.diag.equilibrium_dual});
          c1 = std::max({c1, r.diag.c1_value, r.diag.c1_gradient});
        }
      }
      verdict(6, eq < 1e-9, "max equilibrium residual = " + fmt("%.3g", eq) + " (< 1e-9)");
      verdict(7, c1 < 1e-10, "max two-sided value/gradient mismatch = " + fmt("%.3g", c1) + " (< 1e-10)");
    }

    // 8. Doerfler minimality
    {
      std::mt19937 rng(8);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      std::uniform_int_distribution<int> len(1, 200);
      bool ok = true;
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(len(rng));
        for (double& x : v) x = std::pow(u(rng), 3);
        const double theta = 0.05 + 0.9 * u(rng);
        std::vector<int> m = pg::dorfler_mark(v, theta);
        ok &= pg::dorfler_satisfied(v, m, theta);
        auto smallest = std::min_element(m.begin(), m.end(), [&](int a, int b) { return v[a] < v[b]; });
        m.erase(smallest);
        ok &= !pg::dorfler_satisfied(v, m, theta);
      }
      verdict(8, ok, "100 random indicator vectors");
    }

    // 9. oracle suites
    {
      const OracleResult o = oracles();
      const bool ok = o.p2 < 1e-10 && o.hct < 1e-10 && o.hhj < 1e-10 && o.jet < 1e-12 && o.biharmonic < 1e-6;
      verdict(9, ok,
              "P2 " + fmt("%.2g", o.p2) + ", HCT " + fmt("%.2g", o.hct) + ", HHJ " + fmt("%.2g", o.hhj) + ", jet " +
                  fmt("%.2g", o.jet) + ", biharmonic " + fmt("%.2g", o.biharmonic));
    }

    // 10. determinism of the command-line output
    {
      if (cli.empty()) {
        verdict(10, false, "no --cli given");
      } else {
        const std::filesystem::path base(work);
        std::filesystem::remove_all(base);
        const int a = run_cli(cli, base / "run_a");
        const int b = run_cli(cli, base / "run_b");
        const std::string ca = slurp(base / "run_a" / "convergence.csv");
        const std::string cb = slurp(base / "run_b" / "convergence.csv");
        verdict(10, a == 0 && b == 0 && !ca.empty() && ca == cb,
                "two runs, convergence.csv " + std::string(ca == cb ? "identical" : "differs") + " (" +
                    std::to_string(ca.size()) + " bytes)");
      }
    }

    const double q2 = pg::example2::goal_polar();
    std::printf("info: second benchmark Q(u) by polar quadrature = %.12g, tabulated %.9g, difference %.3g\n", q2,
                pg::reference_goal("example_2"), q2 - pg::reference_goal("example_2"));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 10 criteria passed\n", 10 - g_failed);
  return strict && g_failed ? 1 : 0;
}
