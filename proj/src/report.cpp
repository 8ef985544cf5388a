#include "plategoal/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plategoal {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::vector<std::string>& convergence_columns() {
  static const std::vector<std::string> cols{"level",   "ndof",    "ntri",    "Q_h",     "e_goal",
                                             "eta_h",   "eta_tilde", "eta_nc", "eta_abs", "eta_res",
                                             "eff_abs", "eff_res", "seconds"};
  return cols;
}

std::optional<double> column_value(const LevelRecord& r, const std::string& c) {
  const GoalReport& g = r.report;
  if (c == "level") return r.level;
  if (c == "ndof") return r.ndof;
  if (c == "ntri") return r.ntri;
  if (c == "Q_h") return g.q_h;
  if (c == "e_goal") return g.e_goal;
  if (c == "eta_h") return g.eta_h;
  if (c == "eta_tilde") return g.eta_tilde;
  if (c == "eta_nc") return g.eta_nc;
  if (c == "eta_abs") return g.eta_abs;
  if (c == "eta_res") return g.eta_res;
  if (c == "abs_eta_res") return std::abs(g.eta_res);
  if (c == "eff_abs") return g.eff_abs;
  if (c == "eff_res") return g.eff_res;
  if (c == "seconds") return r.seconds;
  throw std::invalid_argument("unknown column " + c);
}

namespace {

std::string cell(const std::optional<double>& v, bool integer) {
  if (!v) return "";
  if (integer) return std::to_string(static_cast<long long>(*v));
  return format_double(*v);
}

}  // namespace

std::string convergence_csv(const std::vector<LevelRecord>& records, bool timing) {
  std::ostringstream os;
  const auto& cols = convergence_columns();
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << '\n';
  for (const LevelRecord& r : records) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::string& c = cols[k];
      if (k) os << ',';
      if (c == "seconds" && !timing) continue;
      os << cell(column_value(r, c), c == "level" || c == "ndof" || c == "ntri");
    }
    os << '\n';
  }
  return os.str();
}

std::string diagnostics_csv(const std::vector<LevelRecord>& records) {
  std::ostringstream os;
  os << "level,equilibrium_primal,equilibrium_dual,nn_trace_mismatch,c1_value,c1_gradient,eta_o,"
        "osc_primal,osc_dual,full_bound,q_uh,correction,q_nc,signed_error,solver_res_primal,solver_res_dual,"
        "marked\n";
  for (const LevelRecord& r : records) {
    const LevelDiagnostics& d = r.diag;
    os << r.level << ',' << format_double(d.equilibrium_primal) << ',' << format_double(d.equilibrium_dual) << ','
       << format_double(d.nn_trace_mismatch) << ',' << format_double(d.c1_value) << ','
       << format_double(d.c1_gradient) << ',' << format_double(d.eta_o) << ','
       << format_double(d.oscillation_primal) << ',' << format_double(d.oscillation_dual) << ','
       << format_double(d.full_bound) << ',' << format_double(r.report.q_uh) << ','
       << format_double(r.report.correction) << ',' << format_double(r.report.q_nc_signed) << ','
       << cell(r.report.signed_error, false) << ',' << format_double(d.solver_residual_primal) << ','
       << format_double(d.solver_residual_dual) << ',' << d.marked << '\n';
  }
  return os.str();
}

std::optional<double> fit_slope(const std::vector<double>& x, const std::vector<double>& y, int window) {
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (x[k] > 0.0 && y[k] > 0.0 && std::isfinite(y[k])) {
      lx.push_back(std::log(x[k]));
      ly.push_back(std::log(y[k]));
    }
  }
  if (static_cast<int>(lx.size()) > window) {
    lx.erase(lx.begin(), lx.end() - window);
    ly.erase(ly.begin(), ly.end() - window);
  }
  if (lx.size() < 2) return std::nullopt;
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sx += lx[k];
    sy += ly[k];
    sxx += lx[k] * lx[k];
    sxy += lx[k] * ly[k];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

std::string rates_text(const std::vector<LevelRecord>& records) {
  std::vector<double> ndof;
  for (const LevelRecord& r : records) ndof.push_back(r.ndof);
  auto series = [&](const std::string& c) {
    std::vector<double> v;
    for (const LevelRecord& r : records) v.push_back(column_value(r, c).value_or(0.0));
    return v;
  };
  std::ostringstream os;
  os << "# least-squares slope of log(quantity) vs log(ndof), last 3 levels\n";
  for (const auto& [name, col] : std::vector<std::pair<std::string, std::string>>{
           {"e_goal", "e_goal"}, {"eta_abs", "eta_abs"}, {"eta_res", "abs_eta_res"}}) {
    const auto s = fit_slope(ndof, series(col), 3);
    os << name << ' ' << (s ? format_double(*s) : std::string("n/a")) << '\n';
  }
  return os.str();
}

std::string plot_data(const std::vector<LevelRecord>& records, const std::string& column) {
  std::ostringstream os;
  for (const LevelRecord& r : records) {
    const auto v = column_value(r, column);
    if (!v || !(*v > 0.0)) continue;
    os << r.ndof << ' ' << format_double(*v) << '\n';
  }
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + p.string() + " for writing");
  os << text;
  if (!os) throw std::runtime_error("write failed: " + p.string());
}

}  // namespace

void write_outputs(const std::string& dir, const std::vector<LevelRecord>& records, bool timing) {
  const std::filesystem::path d(dir);
  std::filesystem::create_directories(d);
  write_file(d / "convergence.csv", convergence_csv(records, timing));
  write_file(d / "diagnostics.csv", diagnostics_csv(records));
  write_file(d / "rates.txt", rates_text(records));
  write_file(d / "err_vs_ndof.dat", plot_data(records, "e_goal"));
  write_file(d / "est_abs_vs_ndof.dat", plot_data(records, "eta_abs"));
  write_file(d / "est_res_vs_ndof.dat", plot_data(records, "abs_eta_res"));
}

}  // namespace plategoal
