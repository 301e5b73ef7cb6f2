#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "navembed/graph.hpp"

namespace navembed {

// Two-sample Kolmogorov-Smirnov statistic between two hop-count histograms,
// each normalized by its own total: sup_L |F_a(L) - F_b(L)|. Empty when
// either histogram has no mass.
std::optional<double> ks_statistic(const PathLengthDistribution& a,
                                   const PathLengthDistribution& b);

// Hurwitz zeta function zeta(s, q) = sum_{k>=0} (q + k)^-s for s > 1, q > 0.
double hurwitz_zeta(double s, double q);

// Discrete maximum-likelihood exponent for P(k) ~ k^-alpha on k >= k_min,
// using only samples >= k_min. Throws if fewer than two samples qualify.
double fit_power_law_exponent(std::span<const std::size_t> samples, std::size_t k_min);

struct MeanStderr {
  double mean = 0.0;
  std::optional<double> standard_error;  // needs >= 2 samples
  std::size_t count = 0;
};

// Sample mean and standard error of the mean. Throws on empty input.
MeanStderr mean_stderr(std::span<const double> values);

}  // namespace navembed
