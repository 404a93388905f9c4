// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "remsamp/replay.hpp"

namespace remsamp {

// Validated design matrix for the sampled partial likelihood: rows grouped
// by stratum, case row first. Strata reduced to the case alone contribute a
// constant and are dropped up front (counted in n_dropped_strata).
struct FitData {
  std::size_t k = 0;
  std::vector<std::string> names;
  std::vector<double> x;  // row-major, n_obs() x k
  std::vector<std::uint64_t> offsets;  // stratum boundaries, size n_strata()+1
  std::uint64_t n_dropped_strata = 0;

  std::uint64_t n_strata() const {
    return offsets.empty() ? 0 : offsets.size() - 1;
  }
  std::uint64_t n_obs() const { return offsets.empty() ? 0 : offsets.back(); }
  void append_stratum(std::span<const double> case_row,
                      std::span<const double> control_rows);
};

FitData make_fit_data(const ObservationTable& table);

struct LikelihoodParts {
  double loglik = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

// Log-likelihood, gradient and Hessian of the conditional (within-stratum
// softmax) likelihood at theta. Scores are max-subtracted per stratum.
LikelihoodParts loglik_grad_hess(const FitData& data,
                                 const Eigen::VectorXd& theta);
LikelihoodParts loglik_grad_hess(const ObservationTable& table,
                                 const Eigen::VectorXd& theta);

struct FitOptions {
  double grad_tol = 1e-6;
  double dloglik_tol = 1e-9;
  int max_iter = 1000;
  double ridge = 0.0;  // adds -ridge*||theta||^2 to the objective when > 0
};

struct FitResult {
  std::vector<std::string> names;
  Eigen::VectorXd theta;
  Eigen::VectorXd se;
  Eigen::VectorXd z;
  double loglik = 0.0;
  double loglik_null = 0.0;
  double aic = 0.0;
  double r2 = 0.0;      // Cox-Snell pseudo R^2
  double r2_max = 0.0;
  std::uint64_t n_events = 0;  // strata entering the fit
  std::uint64_t n_obs = 0;
  std::uint64_t n_dropped_strata = 0;
  bool converged = false;
  int iterations = 0;
};

// Newton-Raphson with step-halving. Throws SeparationError when the
// likelihood is monotone in some direction (per-coordinate dominance check,
// |theta| escaping 500, or exploding information condition number with a
// non-vanishing gradient) and NonIdentifiableError when the information is
// singular with a vanishing gradient.
FitResult fit(const FitData& data, const FitOptions& options = {});
FitResult fit(const ObservationTable& table, const FitOptions& options = {});

// Machine-readable fit output (effect table plus metric block).
void write_fit_csv(std::ostream& out, const FitResult& result,
                   std::span<const std::string> extra_header_lines = {});
// Human-readable report: estimate, SE in brackets, significance stars at
// the 5% / 1% / 0.1% levels, then the fit metrics.
void write_fit_report(std::ostream& out, const FitResult& result);

}  // namespace remsamp
