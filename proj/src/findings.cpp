#include "lzda/findings.hpp"

#include <algorithm>
#include <cmath>

#include "lzda/analysis.hpp"
#include "lzda/attack.hpp"
#include "lzda/errors.hpp"
#include "lzda/sim.hpp"

namespace lzda {

bool accel_detector_catches_attack(const LateralModel& model, const DetectorConfig& cfg) {
  const AttackGenerator gen = init_case2(model, 1.0);
  const double rate = std::abs(gen.s0());
  Scenario sc{.model = model, .output_case = OutputCase::LateralAccel};
  sc.attack = gen;
  sc.x0 = {gen.xi_vy(), gen.xi_r()};
  sc.dt = 1e-3 / rate;
  sc.duration = std::max(10.0 / rate, 2.0 * cfg.window);
  return detect(integrate(sc), cfg).attacked;
}

std::vector<FindingsRow> findings_table(const VehicleParams& safe, const VehicleParams& unsafe, double vx,
                                        const DetectorConfig& cfg) {
  if (!(disruptive_condition(safe) < 0.0)) throw ValidationError("a", "safe vehicle needs aCf - bCr < 0");
  if (!(disruptive_condition(unsafe) > 0.0)) throw ValidationError("a", "unsafe vehicle needs aCf - bCr > 0");

  const LateralModel safe_model = build_model(safe, vx);
  const LateralModel unsafe_model = build_model(unsafe, vx);

  const auto row = [](std::string outputs, std::string condition, const InvariantZeroReport& rep) {
    return FindingsRow{std::move(outputs), std::move(condition), rep.attack_exists, rep.disruptive};
  };

  const bool safe_caught = accel_detector_catches_attack(safe_model, cfg);
  const bool unsafe_caught = accel_detector_catches_attack(unsafe_model, cfg);

  return {
      row("r", "-", classify(safe_model, OutputCase::YawRate)),
      row("a_y", "aCf-bCr>0", classify(unsafe_model, OutputCase::LateralAccel)),
      row("a_y", "aCf-bCr<0", classify(safe_model, OutputCase::LateralAccel)),
      FindingsRow{"a_y, a_x", "-", !(safe_caught && unsafe_caught), !unsafe_caught},
      row("r, a_y", "-", classify(safe_model, OutputCase::Both)),
  };
}

std::vector<FindingsRow> findings_table() {
  VehicleParams unsafe = kSuvParams;
  unsafe.a = 1.521;
  return findings_table(kSuvParams, unsafe, 5.0);
}

}  // namespace lzda
