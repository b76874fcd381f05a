#pragma once

#include <optional>
#include <span>

#include "lzda/sim.hpp"

namespace lzda {

/// An attack pinning a_y to zero with vy, r nonzero leaves a_x = -vy r nonzero.
/// The detector looks for a window where a_y is quiet while a_x is active.
struct DetectorConfig {
  double ay_quiet_threshold = 1e-3;  // m/s^2
  double ax_alarm_threshold = 1e-3;  // m/s^2
  double window = 1e-3;              // s

  void validate() const;
};

struct DetectorVerdict {
  bool attacked = false;
  std::optional<double> first_alarm_time;
  double peak_ax = 0.0;  // max |a_x|
};

/// Channels are parallel series of equal length. Throws ConfigError when the
/// series are empty or shorter than the window.
DetectorVerdict detect(std::span<const double> t, std::span<const double> ay, std::span<const double> ax,
                       const DetectorConfig& cfg = {});

DetectorVerdict detect(const Trajectory& traj, const DetectorConfig& cfg = {});

}  // namespace lzda
