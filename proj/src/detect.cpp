#include "lzda/detect.hpp"

#include <algorithm>
#include <cmath>

#include "lzda/errors.hpp"

namespace lzda {

void DetectorConfig::validate() const {
  if (!(ay_quiet_threshold > 0.0)) throw ValidationError("ay_quiet", "must be positive");
  if (!(ax_alarm_threshold > 0.0)) throw ValidationError("ax_alarm", "must be positive");
  if (!(window > 0.0)) throw ValidationError("window", "must be positive");
}

DetectorVerdict detect(std::span<const double> t, std::span<const double> ay, std::span<const double> ax,
                       const DetectorConfig& cfg) {
  cfg.validate();
  if (t.size() != ay.size() || t.size() != ax.size()) throw ConfigError("detector: channel lengths differ");
  if (t.empty()) throw ConfigError("detector: empty trajectory");
  if (t.back() - t.front() < cfg.window) {
    throw ConfigError("detector: window is longer than the trajectory");
  }

  DetectorVerdict verdict;
  std::optional<double> run_start;
  for (std::size_t k = 0; k < t.size(); ++k) {
    verdict.peak_ax = std::max(verdict.peak_ax, std::abs(ax[k]));
    const bool suspicious = std::abs(ay[k]) < cfg.ay_quiet_threshold && std::abs(ax[k]) > cfg.ax_alarm_threshold;
    if (!suspicious) {
      run_start.reset();
      continue;
    }
    if (!run_start) run_start = t[k];
    // Small slack so a window that is an exact multiple of dt is not lost to rounding.
    if (!verdict.attacked && t[k] - *run_start >= cfg.window * (1.0 - 1e-9)) {
      verdict.attacked = true;
      verdict.first_alarm_time = t[k];
    }
  }
  return verdict;
}

DetectorVerdict detect(const Trajectory& traj, const DetectorConfig& cfg) {
  return detect(traj.t, traj.ay, traj.ax, cfg);
}

}  // namespace lzda
