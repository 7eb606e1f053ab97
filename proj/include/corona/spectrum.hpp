#pragma once

#include <utility>
#include <vector>

namespace corona {

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kDefaultVerifyTol = 1e-8;

struct SpectrumEntry {
  double value;
  int multiplicity;
};

/// Multiset of real eigenvalues, clustered: entry values are strictly
/// increasing with gaps larger than `tolerance`.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  double tolerance = kDefaultClusterTol;

  int total_multiplicity() const;
  double sum() const;  // sum of value * multiplicity
  /// Ascending list with each value repeated `multiplicity` times.
  std::vector<double> expanded() const;
  /// Multiplicity of the entry nearest `value`, 0 if none within tolerance.
  int multiplicity_near(double value) const;
};

Spectrum cluster_spectrum(std::vector<double> values, double tol = kDefaultClusterTol);
Spectrum cluster_weighted(std::vector<std::pair<double, int>> values,
                          double tol = kDefaultClusterTol);

}  // namespace corona
