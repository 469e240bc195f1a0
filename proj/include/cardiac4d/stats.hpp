#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace cardiac4d {

inline double mean_of(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Population (N-denominator) standard deviation. The cohort in the QC and
// temporal summaries is the entire dataset, not a sample.
inline double population_std(std::span<const double> v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace cardiac4d
