#include "corona/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corona {

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

double Spectrum::sum() const {
  double s = 0;
  for (const auto& e : entries) s += e.value * e.multiplicity;
  return s;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& e : entries)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  return out;
}

int Spectrum::multiplicity_near(double value) const {
  int best = 0;
  double best_gap = tolerance;
  for (const auto& e : entries) {
    const double gap = std::abs(e.value - value);
    if (gap <= best_gap) {
      best_gap = gap;
      best = e.multiplicity;
    }
  }
  return best;
}

Spectrum cluster_weighted(std::vector<std::pair<double, int>> values, double tol) {
  if (tol <= 0) throw std::invalid_argument("cluster tolerance must be positive");
  Spectrum s;
  s.tolerance = tol;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double acc = 0;
  int mult = 0;
  double last = values.front().first;
  auto flush = [&] { s.entries.push_back({acc / mult, mult}); };
  for (const auto& [v, m] : values) {
    if (mult > 0 && v - last > tol) {
      flush();
      acc = 0;
      mult = 0;
    }
    acc += v * m;
    mult += m;
    last = v;
  }
  flush();
  return s;
}

Spectrum cluster_spectrum(std::vector<double> values, double tol) {
  std::vector<std::pair<double, int>> weighted;
  weighted.reserve(values.size());
  for (double v : values) weighted.emplace_back(v, 1);
  return cluster_weighted(std::move(weighted), tol);
}

}  // namespace corona
