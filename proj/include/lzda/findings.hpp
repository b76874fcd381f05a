#pragma once

#include <string>
#include <vector>

#include "lzda/detect.hpp"
#include "lzda/model.hpp"

namespace lzda {

/// One row of the sensor-configuration summary.
struct FindingsRow {
  std::string outputs;    // "r", "a_y", "a_y, a_x", "r, a_y"
  std::string condition;  // "-", "aCf-bCr>0", "aCf-bCr<0"
  bool threat;            // an undetectable zero-dynamics attack exists
  bool disruptive;        // ... and it drives the state unbounded
};

/// Whether the a_x consistency detector catches the lateral-acceleration attack
/// started from r0 = 1 on this vehicle. Simulates 10 / |s0| seconds (at least two
/// detector windows) with dt = 1e-3 / |s0|.
bool accel_detector_catches_attack(const LateralModel& model, const DetectorConfig& cfg = {});

/// The five-row summary: yaw rate; lateral acceleration with the unsafe and safe
/// geometry; lateral acceleration plus the a_x detector (checked on both vehicles);
/// yaw rate plus lateral acceleration. `safe` needs aCf < bCr, `unsafe` aCf > bCr.
std::vector<FindingsRow> findings_table(const VehicleParams& safe, const VehicleParams& unsafe, double vx,
                                        const DetectorConfig& cfg = {});

/// Table 2 SUV (safe) and the same SUV with a = 1.521 m (unsafe) at vx = 5 m/s.
std::vector<FindingsRow> findings_table();

}  // namespace lzda
