#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lzda/detect.hpp"
#include "lzda/model.hpp"
#include "lzda/sim.hpp"

namespace lzda {

enum class SteeringKind { Zero, DelayedSine };
enum class AttackKind { Case1, Case2 };

/// INI-style scenario description with sections [vehicle], [run], [attack], [detector].
///
/// Unknown sections or keys are rejected. Absent keys keep the defaults below.
/// [run] vy0/r0 are optional: when absent and an attack is enabled the run starts at
/// the generator's onset state, otherwise at zero.
struct ScenarioFile {
  VehicleParams vehicle{};

  struct Run {
    double vx = 25.0;
    OutputCase output_case = OutputCase::YawRate;
    double duration = 1.0;
    double dt = 1e-4;
    std::optional<double> vy0;
    std::optional<double> r0;
    SteeringKind steering = SteeringKind::Zero;
    double t_on = 0.1;
    double omega = 10.0;
    double amplitude = 1.0;
    friend bool operator==(const Run&, const Run&) = default;
  } run;

  struct Attack {
    bool enabled = false;
    AttackKind kind = AttackKind::Case1;
    double delta_vy0 = 5.0;
    double r0 = 1.0;
    double t0 = 0.0;
    friend bool operator==(const Attack&, const Attack&) = default;
  } attack;

  DetectorConfig detector{};

  friend bool operator==(const ScenarioFile& x, const ScenarioFile& y) {
    return x.vehicle == y.vehicle && x.run == y.run && x.attack == y.attack &&
           x.detector.ay_quiet_threshold == y.detector.ay_quiet_threshold &&
           x.detector.ax_alarm_threshold == y.detector.ax_alarm_threshold &&
           x.detector.window == y.detector.window;
  }
};

/// Throws ValidationError naming "section.key" on any malformed entry.
ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Writes every key with round-trip precision; unset vy0/r0 are omitted.
std::string format_scenario(const ScenarioFile& file);

/// Builds the model, steering and (if enabled) attack generator.
Scenario to_scenario(const ScenarioFile& file);

/// Named reproduction scenarios: fig3, fig4 (yaw rate), fig5, fig6 (lateral acceleration).
ScenarioFile preset(std::string_view name);

}  // namespace lzda
