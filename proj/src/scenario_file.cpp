#include "lzda/scenario_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lzda/attack.hpp"
#include "lzda/errors.hpp"

namespace lzda {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, const std::string& field) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ValidationError(field, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, const std::string& field) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ValidationError(field, "expected true or false, got '" + std::string(text) + "'");
}

using Setter = std::function<void(ScenarioFile&, std::string_view, const std::string&)>;

template <typename Get>
Setter number_at(Get get) {
  return [get](ScenarioFile& f, std::string_view v, const std::string& field) { get(f) = parse_number(v, field); };
}

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> table = {
      {"vehicle",
       {
           {"m", number_at([](ScenarioFile& f) -> double& { return f.vehicle.m; })},
           {"Iz", number_at([](ScenarioFile& f) -> double& { return f.vehicle.Iz; })},
           {"a", number_at([](ScenarioFile& f) -> double& { return f.vehicle.a; })},
           {"b", number_at([](ScenarioFile& f) -> double& { return f.vehicle.b; })},
           {"Cf", number_at([](ScenarioFile& f) -> double& { return f.vehicle.Cf; })},
           {"Cr", number_at([](ScenarioFile& f) -> double& { return f.vehicle.Cr; })},
       }},
      {"run",
       {
           {"vx", number_at([](ScenarioFile& f) -> double& { return f.run.vx; })},
           {"case",
            [](ScenarioFile& f, std::string_view v, const std::string& field) {
              try {
                f.run.output_case = parse_output_case(v);
              } catch (const ValidationError& e) {
                throw ValidationError(field, e.what());
              }
            }},
           {"duration", number_at([](ScenarioFile& f) -> double& { return f.run.duration; })},
           {"dt", number_at([](ScenarioFile& f) -> double& { return f.run.dt; })},
           {"vy0", number_at([](ScenarioFile& f) -> std::optional<double>& { return f.run.vy0; })},
           {"r0", number_at([](ScenarioFile& f) -> std::optional<double>& { return f.run.r0; })},
           {"steering",
            [](ScenarioFile& f, std::string_view v, const std::string& field) {
              if (v == "zero") {
                f.run.steering = SteeringKind::Zero;
              } else if (v == "delayed_sine") {
                f.run.steering = SteeringKind::DelayedSine;
              } else {
                throw ValidationError(field, "expected zero or delayed_sine, got '" + std::string(v) + "'");
              }
            }},
           {"t_on", number_at([](ScenarioFile& f) -> double& { return f.run.t_on; })},
           {"omega", number_at([](ScenarioFile& f) -> double& { return f.run.omega; })},
           {"amplitude", number_at([](ScenarioFile& f) -> double& { return f.run.amplitude; })},
       }},
      {"attack",
       {
           {"enabled",
            [](ScenarioFile& f, std::string_view v, const std::string& field) {
              f.attack.enabled = parse_bool(v, field);
            }},
           {"kind",
            [](ScenarioFile& f, std::string_view v, const std::string& field) {
              if (v == "case1") {
                f.attack.kind = AttackKind::Case1;
              } else if (v == "case2") {
                f.attack.kind = AttackKind::Case2;
              } else {
                throw ValidationError(field, "expected case1 or case2, got '" + std::string(v) + "'");
              }
            }},
           {"delta_vy0", number_at([](ScenarioFile& f) -> double& { return f.attack.delta_vy0; })},
           {"r0", number_at([](ScenarioFile& f) -> double& { return f.attack.r0; })},
           {"t0", number_at([](ScenarioFile& f) -> double& { return f.attack.t0; })},
       }},
      {"detector",
       {
           {"ay_quiet", number_at([](ScenarioFile& f) -> double& { return f.detector.ay_quiet_threshold; })},
           {"ax_alarm", number_at([](ScenarioFile& f) -> double& { return f.detector.ax_alarm_threshold; })},
           {"window", number_at([](ScenarioFile& f) -> double& { return f.detector.window; })},
       }},
  };
  return table;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  ScenarioFile file;
  const auto& sections = schema();
  const std::map<std::string, Setter>* current = nullptr;
  std::string section_name;
  std::set<std::string> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ValidationError("line " + std::to_string(line_no), "unterminated section header");
      }
      section_name = std::string(trim(line.substr(1, line.size() - 2)));
      const auto it = sections.find(section_name);
      if (it == sections.end()) throw ValidationError(section_name, "unknown section");
      current = &it->second;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no), "expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (current == nullptr) throw ValidationError(key, "key outside of any section");

    const std::string field = section_name + "." + key;
    const auto setter = current->find(key);
    if (setter == current->end()) throw ValidationError(field, "unknown key");
    if (!seen.insert(field).second) throw ValidationError(field, "duplicate key");
    setter->second(file, value, field);
  }
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_scenario(const ScenarioFile& f) {
  std::ostringstream out;
  out << "[vehicle]\n"
      << "m = " << num(f.vehicle.m) << "\n"
      << "Iz = " << num(f.vehicle.Iz) << "\n"
      << "a = " << num(f.vehicle.a) << "\n"
      << "b = " << num(f.vehicle.b) << "\n"
      << "Cf = " << num(f.vehicle.Cf) << "\n"
      << "Cr = " << num(f.vehicle.Cr) << "\n\n";
  out << "[run]\n"
      << "vx = " << num(f.run.vx) << "\n"
      << "case = " << to_string(f.run.output_case) << "\n"
      << "duration = " << num(f.run.duration) << "\n"
      << "dt = " << num(f.run.dt) << "\n";
  if (f.run.vy0) out << "vy0 = " << num(*f.run.vy0) << "\n";
  if (f.run.r0) out << "r0 = " << num(*f.run.r0) << "\n";
  out << "steering = " << (f.run.steering == SteeringKind::Zero ? "zero" : "delayed_sine") << "\n"
      << "t_on = " << num(f.run.t_on) << "\n"
      << "omega = " << num(f.run.omega) << "\n"
      << "amplitude = " << num(f.run.amplitude) << "\n\n";
  out << "[attack]\n"
      << "enabled = " << (f.attack.enabled ? "true" : "false") << "\n"
      << "kind = " << (f.attack.kind == AttackKind::Case1 ? "case1" : "case2") << "\n"
      << "delta_vy0 = " << num(f.attack.delta_vy0) << "\n"
      << "r0 = " << num(f.attack.r0) << "\n"
      << "t0 = " << num(f.attack.t0) << "\n\n";
  out << "[detector]\n"
      << "ay_quiet = " << num(f.detector.ay_quiet_threshold) << "\n"
      << "ax_alarm = " << num(f.detector.ax_alarm_threshold) << "\n"
      << "window = " << num(f.detector.window) << "\n";
  return out.str();
}

Scenario to_scenario(const ScenarioFile& f) {
  Scenario sc{.model = build_model(f.vehicle, f.run.vx), .output_case = f.run.output_case};
  if (f.run.steering == SteeringKind::DelayedSine) {
    sc.steering = SteeringProfile::delayed_sine(f.run.t_on, f.run.omega, f.run.amplitude);
  }
  sc.duration = f.run.duration;
  sc.dt = f.run.dt;

  State onset{0.0, 0.0};
  if (f.attack.enabled) {
    if (f.attack.t0 < 0.0) throw ValidationError("attack.t0", "must be non-negative");
    sc.attack = f.attack.kind == AttackKind::Case1 ? init_case1(sc.model, f.attack.delta_vy0, f.attack.t0)
                                                   : init_case2(sc.model, f.attack.r0, f.attack.t0);
    onset = {sc.attack->xi_vy(), sc.attack->xi_r()};
  }
  sc.x0 = {f.run.vy0.value_or(onset[0]), f.run.r0.value_or(onset[1])};
  return sc;
}

ScenarioFile preset(std::string_view name) {
  ScenarioFile f;
  if (name == "fig3" || name == "fig4") {
    f.run.vx = 25.0;
    f.run.output_case = OutputCase::YawRate;
    f.run.duration = 1.0;
    f.run.dt = 1e-4;
    f.run.vy0 = 5.0;
    f.run.r0 = 0.0;
    f.attack.enabled = true;
    f.attack.kind = AttackKind::Case1;
    if (name == "fig3") {
      f.attack.delta_vy0 = 5.0;
    } else {
      // attacked vy0 = 5, attack-free vy0 = -5
      f.attack.delta_vy0 = 10.0;
      f.run.steering = SteeringKind::DelayedSine;
    }
    return f;
  }
  if (name == "fig5" || name == "fig6") {
    f.run.vx = 5.0;
    f.run.output_case = OutputCase::LateralAccel;
    f.run.dt = 1e-6;
    f.run.duration = name == "fig5" ? 0.02 : 0.2;
    if (name == "fig6") f.vehicle.a = 1.521;
    f.attack.enabled = true;
    f.attack.kind = AttackKind::Case2;
    f.attack.r0 = 1.0;
    return f;
  }
  throw ValidationError("preset", "unknown preset '" + std::string(name) + "' (expected fig3, fig4, fig5 or fig6)");
}

}  // namespace lzda
