#include "lzda/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "lzda/errors.hpp"

namespace lzda {

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << kTrajectoryCsvHeader << '\n';
  char buf[256];
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const int n = std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n", traj.t[k], traj.vy[k],
                                traj.r[k], traj.ay[k], traj.ax[k], traj.delta[k], traj.mz_attack[k]);
    out.write(buf, n);
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  write_trajectory_csv(out, traj);
  if (!out) throw ConfigError("write failed: " + path.string());
}

TrajectoryTable read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("trajectory csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTrajectoryCsvHeader) {
    throw ConfigError("trajectory csv: expected header '" + std::string(kTrajectoryCsvHeader) + "'");
  }

  TrajectoryTable table;
  std::vector<double>* cols[] = {&table.t, &table.vy, &table.r, &table.ay, &table.ax, &table.delta, &table.mz_attack};
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const char* p = line.data();
    const char* end = p + line.size();
    for (std::size_t c = 0; c < std::size(cols); ++c) {
      double v = 0.0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{}) throw ConfigError("trajectory csv: bad number at line " + std::to_string(row));
      cols[c]->push_back(v);
      p = next;
      const bool last = c + 1 == std::size(cols);
      if (last ? p != end : (p == end || *p != ',')) {
        throw ConfigError("trajectory csv: expected 7 columns at line " + std::to_string(row));
      }
      if (!last) ++p;
    }
    const auto n = table.t.size();
    if (n > 1 && !(table.t[n - 1] > table.t[n - 2])) {
      throw ConfigError("trajectory csv: t not strictly increasing at line " + std::to_string(row));
    }
  }
  return table;
}

TrajectoryTable read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open trajectory csv: " + path.string());
  return read_trajectory_csv(in);
}

}  // namespace lzda
