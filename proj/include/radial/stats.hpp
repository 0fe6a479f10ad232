#pragma once

#include <span>

namespace radial {

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for fewer than two values
};

/// Summation runs over the sorted values, so the result is bit-identical
/// for any permutation of the input.
MeanStd mean_std(std::span<const double> values);

struct WelchResult {
  double difference = 0.0;  // mean(a) - mean(b)
  double standard_error = 0.0;
  double dof = 0.0;
  double critical = 0.0;  // one-sided t quantile at the requested confidence
  bool significant = false;
};

/// One-sided Welch test of mean(a) > mean(b).
WelchResult welch_greater(std::span<const double> a, std::span<const double> b,
                          double confidence = 0.95);

}  // namespace radial
