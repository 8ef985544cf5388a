#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plategoal/adaptivity.hpp"

namespace plategoal {

/// 17 significant digits, '.' decimal separator.
std::string format_double(double v);

/// Header of convergence.csv.
const std::vector<std::string>& convergence_columns();

/// convergence.csv contents. The seconds column stays empty unless `timing` is set, so repeated
/// runs produce identical files.
std::string convergence_csv(const std::vector<LevelRecord>& records, bool timing);
/// Per-level checks (equilibrium residuals, C1 mismatch, oscillation bounds, ...).
std::string diagnostics_csv(const std::vector<LevelRecord>& records);

/// Least-squares slope of log(y) against log(x) over the last `window` points with positive
/// values; nullopt when fewer than two usable points remain.
std::optional<double> fit_slope(const std::vector<double>& x, const std::vector<double>& y, int window = 3);
std::string rates_text(const std::vector<LevelRecord>& records);

/// Two-column "ndof value" data; rows with missing or non-positive values are skipped.
std::string plot_data(const std::vector<LevelRecord>& records, const std::string& column);

/// Writes convergence.csv, diagnostics.csv, rates.txt, err_vs_ndof.dat, est_abs_vs_ndof.dat and
/// est_res_vs_ndof.dat into dir (created if missing).
void write_outputs(const std::string& dir, const std::vector<LevelRecord>& records, bool timing);

/// CSV cell value of a named column ("" when absent).
std::optional<double> column_value(const LevelRecord& r, const std::string& column);

}  // namespace plategoal
