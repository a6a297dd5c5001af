#pragma once

#include <string>
#include <utility>
#include <vector>

#include "siso/experiment.hpp"
#include "siso/sparse_fit.hpp"
#include "siso/types.hpp"

namespace siso {

/// Dataset CSV: header `x1,...,xd,y`, one sample per row, '.' decimals.
/// Labels are validated against the noise model (NoisyInput must be 0/1).
/// Malformed input raises std::invalid_argument with a line number.
Dataset read_dataset_csv(const std::string& path, NoiseModel model);
void write_dataset_csv(const std::string& path, const Dataset& dataset);

/// Points CSV: header `x1,...,xd`, no label column.
Matrix read_points_csv(const std::string& path);

/// Exclusion pairs CSV: header `i,j`, 1-based coordinate indices per row.
std::vector<std::pair<int, int>> read_exclusions_csv(const std::string& path, int dimension);

/// Fit JSON: object with keys active_indices (1-based), fitted_values,
/// rule, objective, features.
std::string fit_to_json(const SparseFit& fit);
SparseFit fit_from_json_file(const std::string& path);

/// Predictions CSV: header `prediction`, one value per row.
void write_predictions_csv(const std::string& path, const std::vector<double>& predictions);

/// Experiment config: `key = value` lines, '#' comments. Keys: n (comma
/// list), d (comma list), s, r, sigma, trials, seed, methods (comma list
/// of ipir|lpsr|slpsr).
ExperimentConfig read_experiment_config(const std::string& path);

/// Recovery table CSV, one row per n, columns method-major: header
/// `n,<method>_d<d>,...`.
std::string recovery_table_to_csv(const RecoveryTable& table);

/// Per-trial JSON detail for a recovery table.
std::string recovery_table_to_json(const RecoveryTable& table);

/// Writes content to path via a temporary file and an atomic rename, so
/// failed runs never leave partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace siso
