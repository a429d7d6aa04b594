#pragma once

#include <string>
#include <vector>

#include "onebit/recovery.hpp"
#include "onebit/signal.hpp"

// CSV / JSON serialization. CSV convention: '.' decimal separator, a '#'
// metadata line of key=value pairs first, then one schema line, then rows.
namespace onebit::io {

/// Dataset file: "# N=..,N_x=..,seed=..,d=..,sigma=.." then the +-1 rows of y.
void write_dataset_csv(const SignDataset& ds, const std::string& path);

/// Reads a dataset written by write_dataset_csv. Threshold realizations and
/// inputs are not part of the file, so the result carries y only.
SignDataset read_dataset_csv(const std::string& path);

/// Stats file: schema "lag,r_y_lag,mu_hat".
void write_stats_csv(const SampleStats& stats, const std::string& path);

/// Matrix file: "# N=.., d=.., sigma=.., p0=.." then row-major rows.
void write_matrix_csv(const Eigen::MatrixXd& m, double d, double sigma,
                      double p0, const std::string& path);

/// Per-lag table with schema "lag,true_r,est_r".
void write_lag_table_csv(const std::vector<double>& true_r,
                         const std::vector<double>& est_r,
                         const std::string& path);

/// RecoveryResult as JSON with fields
/// method, p0_star, p_hat[], r0_hat, r_hat[], residuals[], wall_time_s, seed.
void write_recovery_json(const RecoveryResult& res, const std::string& path);
std::string recovery_to_json(const RecoveryResult& res);

}  // namespace onebit::io
