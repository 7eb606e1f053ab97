#pragma once

#include <cstdio>
#include <functional>
#include <random>
#include <string>

namespace corona {

/// Fixed-width decimal rendering used by every emitted artifact, so identical
/// runs produce byte-identical files.
inline std::string format_double(double x, int significant_digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  return buf;
}

/// Runs fn(i) for i in [0, count). Worker count is capped by the
/// CORONA_SPECTRA_THREADS environment variable; results must be written to
/// per-index slots by the caller so ordering stays deterministic.
void parallel_for(int count, const std::function<void(int)>& fn);

/// Worker cap currently in effect (>= 1).
int worker_count();

}  // namespace corona
