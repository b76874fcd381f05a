#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lzda/sim.hpp"

namespace lzda {

inline constexpr std::string_view kTrajectoryCsvHeader = "t,vy,r,ay,ax,delta,mz_attack";

/// Column data as read back from a trajectory CSV.
struct TrajectoryTable {
  std::vector<double> t, vy, r, ay, ax, delta, mz_attack;
  std::size_t size() const noexcept { return t.size(); }
};

/// One row per sample, 9 significant digits, '\n' line endings.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Throws ConfigError on a wrong header, ragged rows, bad numbers or non-increasing t.
TrajectoryTable read_trajectory_csv(std::istream& in);
TrajectoryTable read_trajectory_csv(const std::filesystem::path& path);

}  // namespace lzda
