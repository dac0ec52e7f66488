#pragma once

#include <string>

#include "dms/config.hpp"

namespace dms::cli {

// Subcommand bodies; each validates the config before writing anything and
// returns a process exit status. I/O failures surface as std::runtime_error
// carrying the path.

// Writes the realized sequence and its weighted comb (CSV + JSON).
int cmd_sample(const RunConfig& cfg);

// Writes the estimated pair correlation (CSV + JSON).
int cmd_autocorr(const RunConfig& cfg);

// Trial-averaged periodogram, Bragg scan up to q_max, peak-subtracted
// smoothed density, the exact measure, and an optional SVG overlay.
int cmd_diffract(const RunConfig& cfg);

// Per-run dynamical-spectrum report JSON:
// {class, psi_hat, eigen_residual, sigma_density_error}.
int cmd_dynamics(const RunConfig& cfg);

// Runs the acceptance suite (optionally restricted to cfg.model), prints one
// line per criterion, writes the report JSON, exits nonzero on any failure.
int cmd_verify(const RunConfig& cfg);

// Compares an emitted density/periodogram CSV against an emitted exact
// measure JSON. Refuses when the metadata blocks disagree.
int cmd_compare(const std::string& grid_csv, const std::string& measure_json, double tolerance);

}  // namespace dms::cli
