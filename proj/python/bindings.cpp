#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lzda/analysis.hpp"
#include "lzda/attack.hpp"
#include "lzda/detect.hpp"
#include "lzda/errors.hpp"
#include "lzda/findings.hpp"
#include "lzda/model.hpp"
#include "lzda/scenario_file.hpp"
#include "lzda/sim.hpp"
#include "lzda/sweep.hpp"

namespace py = pybind11;
using namespace lzda;

namespace {

py::array_t<double> as_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-dynamics attack analysis of linear vehicle lateral dynamics";

  static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_RuntimeError);
  static py::exception<DegenerateGeometryError> degenerate_error(m, "DegenerateGeometryError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      validation_error(e.what());
    } catch (const ConfigError& e) {
      config_error(e.what());
    } catch (const DegenerateGeometryError& e) {
      degenerate_error(e.what());
    }
  });

  py::enum_<OutputCase>(m, "OutputCase")
      .value("YawRate", OutputCase::YawRate)
      .value("LateralAccel", OutputCase::LateralAccel)
      .value("Both", OutputCase::Both);

  py::enum_<ObservabilityClass>(m, "ObservabilityClass")
      .value("StronglyObservable", ObservabilityClass::StronglyObservable)
      .value("StronglyDetectableOnly", ObservabilityClass::StronglyDetectableOnly)
      .value("NotStronglyDetectable", ObservabilityClass::NotStronglyDetectable);

  py::class_<VehicleParams>(m, "VehicleParams")
      .def(py::init([](double mass, double Iz, double a, double b, double Cf, double Cr) {
             return VehicleParams{mass, Iz, a, b, Cf, Cr};
           }),
           py::arg("m") = kSuvParams.m, py::arg("Iz") = kSuvParams.Iz, py::arg("a") = kSuvParams.a,
           py::arg("b") = kSuvParams.b, py::arg("Cf") = kSuvParams.Cf, py::arg("Cr") = kSuvParams.Cr)
      .def_readwrite("m", &VehicleParams::m)
      .def_readwrite("Iz", &VehicleParams::Iz)
      .def_readwrite("a", &VehicleParams::a)
      .def_readwrite("b", &VehicleParams::b)
      .def_readwrite("Cf", &VehicleParams::Cf)
      .def_readwrite("Cr", &VehicleParams::Cr)
      .def("validate", &VehicleParams::validate)
      .def("__repr__", [](const VehicleParams& p) {
        return "VehicleParams(m=" + std::to_string(p.m) + ", Iz=" + std::to_string(p.Iz) + ", a=" +
               std::to_string(p.a) + ", b=" + std::to_string(p.b) + ", Cf=" + std::to_string(p.Cf) +
               ", Cr=" + std::to_string(p.Cr) + ")";
      });

  py::class_<LateralModel>(m, "LateralModel")
      .def(py::init<const VehicleParams&, double>(), py::arg("params"), py::arg("vx"))
      .def_property_readonly("vx", &LateralModel::vx)
      .def_property_readonly("a11", &LateralModel::a11)
      .def_property_readonly("a12", &LateralModel::a12)
      .def_property_readonly("a21", &LateralModel::a21)
      .def_property_readonly("a22", &LateralModel::a22)
      .def_property_readonly("b2", &LateralModel::b2)
      .def_property_readonly("e1", &LateralModel::e1)
      .def_property_readonly("e2", &LateralModel::e2)
      .def_property_readonly("params", &LateralModel::params);

  m.def("build_model", &build_model, py::arg("params"), py::arg("vx"));
  m.def(
      "output_model",
      [](const LateralModel& model, OutputCase c) {
        const OutputModel out = output_model(model, c);
        py::list C, D;
        for (std::size_t i = 0; i < out.rows; ++i) {
          C.append(py::make_tuple(out.C[i][0], out.C[i][1]));
          D.append(out.D_delta[i]);
        }
        return py::make_tuple(C, D);
      },
      py::arg("model"), py::arg("case"), "Returns (C rows, D_delta entries).");
  m.def("a_stability_margin", &a_stability_margin);
  m.def("eigenvalues_A", &eigenvalues_A);

  py::class_<InvariantZero>(m, "InvariantZero")
      .def_readonly("value", &InvariantZero::value)
      .def_readonly("stable", &InvariantZero::stable);

  py::class_<InvariantZeroReport>(m, "InvariantZeroReport")
      .def_readonly("case", &InvariantZeroReport::output_case)
      .def_readonly("zeros", &InvariantZeroReport::zeros)
      .def_readonly("classification", &InvariantZeroReport::classification)
      .def_readonly("attack_exists", &InvariantZeroReport::attack_exists)
      .def_readonly("disruptive", &InvariantZeroReport::disruptive);

  m.def("rosenbrock", &rosenbrock, py::arg("model"), py::arg("case"), py::arg("s"));
  m.def("invariant_zeros", &invariant_zeros, py::arg("model"), py::arg("case"));
  m.def("classify", &classify, py::arg("model"), py::arg("case"));
  m.def("disruptive_condition", &disruptive_condition, py::arg("params"));
  m.def("rosenbrock_rank", &rosenbrock_rank, py::arg("model"), py::arg("case"), py::arg("s"));
  m.def("rank_sweep_check", &rank_sweep_check, py::arg("model"), py::arg("case"), py::arg("samples"),
        py::arg("seed") = 0x5eed);

  py::class_<AttackGenerator>(m, "AttackGenerator")
      .def_property_readonly("case", &AttackGenerator::output_case)
      .def_property_readonly("xi_vy", &AttackGenerator::xi_vy)
      .def_property_readonly("xi_r", &AttackGenerator::xi_r)
      .def_property_readonly("t0", &AttackGenerator::t0)
      .def_property_readonly("s0", &AttackGenerator::s0)
      .def_property_readonly("divergent", &AttackGenerator::divergent)
      .def("signal", &AttackGenerator::signal, py::arg("t"))
      .def("zero_dynamics", &AttackGenerator::zero_dynamics, py::arg("t"));

  m.def("init_case1", &init_case1, py::arg("model"), py::arg("delta_vy0"), py::arg("t0") = 0.0);
  m.def("init_case2", &init_case2, py::arg("model"), py::arg("r0"), py::arg("t0") = 0.0);

  py::class_<SteeringProfile>(m, "SteeringProfile")
      .def_static("zero", &SteeringProfile::zero)
      .def_static("delayed_sine", &SteeringProfile::delayed_sine, py::arg("t_on") = 0.1, py::arg("omega") = 10.0,
                  py::arg("amplitude") = 1.0)
      .def_static(
          "custom",
          [](std::vector<std::pair<double, double>> samples) {
            return SteeringProfile(SteeringProfile::Custom{std::move(samples)});
          },
          py::arg("samples"))
      .def("__call__", &SteeringProfile::operator(), py::arg("t"));

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](const LateralModel& model, OutputCase c, SteeringProfile steering,
                       std::optional<AttackGenerator> attack, State x0, double duration, double dt,
                       double ceiling) {
             return Scenario{model, c, std::move(steering), std::move(attack), x0, duration, dt, ceiling};
           }),
           py::arg("model"), py::arg("case") = OutputCase::YawRate, py::arg("steering") = SteeringProfile::zero(),
           py::arg("attack") = py::none(), py::arg("x0") = State{0.0, 0.0}, py::arg("duration") = 1.0,
           py::arg("dt") = 1e-4, py::arg("divergence_ceiling") = kDefaultDivergenceCeiling)
      .def_readonly("model", &Scenario::model)
      .def_readonly("case", &Scenario::output_case)
      .def_readonly("attack", &Scenario::attack)
      .def_readwrite("x0", &Scenario::x0)
      .def_readwrite("duration", &Scenario::duration)
      .def_readwrite("dt", &Scenario::dt);

  py::class_<Trajectory>(m, "Trajectory")
      .def_property_readonly("t", [](const Trajectory& tr) { return as_array(tr.t); })
      .def_property_readonly("vy", [](const Trajectory& tr) { return as_array(tr.vy); })
      .def_property_readonly("r", [](const Trajectory& tr) { return as_array(tr.r); })
      .def_property_readonly("ay", [](const Trajectory& tr) { return as_array(tr.ay); })
      .def_property_readonly("ax", [](const Trajectory& tr) { return as_array(tr.ax); })
      .def_property_readonly("delta", [](const Trajectory& tr) { return as_array(tr.delta); })
      .def_property_readonly("mz_attack", [](const Trajectory& tr) { return as_array(tr.mz_attack); })
      .def_readonly("diverged", &Trajectory::diverged)
      .def("__len__", &Trajectory::size);

  py::class_<PairResult>(m, "PairResult")
      .def_readonly("attacked", &PairResult::attacked)
      .def_readonly("free", &PairResult::free)
      .def_readonly("max_output_gap", &PairResult::max_output_gap);

  m.def("integrate", &integrate, py::arg("scenario"), py::call_guard<py::gil_scoped_release>());
  m.def("run_pair", &run_pair, py::arg("scenario"), py::call_guard<py::gil_scoped_release>());

  py::class_<DetectorConfig>(m, "DetectorConfig")
      .def(py::init([](double ay_quiet, double ax_alarm, double window) {
             return DetectorConfig{ay_quiet, ax_alarm, window};
           }),
           py::arg("ay_quiet") = 1e-3, py::arg("ax_alarm") = 1e-3, py::arg("window") = 1e-3)
      .def_readwrite("ay_quiet_threshold", &DetectorConfig::ay_quiet_threshold)
      .def_readwrite("ax_alarm_threshold", &DetectorConfig::ax_alarm_threshold)
      .def_readwrite("window", &DetectorConfig::window);

  py::class_<DetectorVerdict>(m, "DetectorVerdict")
      .def_readonly("attacked", &DetectorVerdict::attacked)
      .def_readonly("first_alarm_time", &DetectorVerdict::first_alarm_time)
      .def_readonly("peak_ax", &DetectorVerdict::peak_ax);

  m.def("detect", py::overload_cast<const Trajectory&, const DetectorConfig&>(&detect), py::arg("trajectory"),
        py::arg("config") = DetectorConfig{});

  py::class_<FindingsRow>(m, "FindingsRow")
      .def_readonly("outputs", &FindingsRow::outputs)
      .def_readonly("condition", &FindingsRow::condition)
      .def_readonly("threat", &FindingsRow::threat)
      .def_readonly("disruptive", &FindingsRow::disruptive);
  m.def("findings_table", py::overload_cast<>(&findings_table));

  m.def(
      "preset_scenario", [](const std::string& name) { return to_scenario(preset(name)); }, py::arg("name"),
      "Built-in reproduction scenario: fig3, fig4, fig5 or fig6.");
  m.def(
      "parse_scenario", [](const std::string& text) { return to_scenario(parse_scenario(text)); }, py::arg("text"),
      "Scenario from INI text with [vehicle] [run] [attack] [detector] sections.");
  m.def(
      "sweep",
      [](const VehicleParams& base, double vx, OutputCase c, const std::string& param, double from, double to,
         int points) {
        py::list rows;
        for (const auto& p : sweep(base, vx, c, param, from, to, points)) {
          py::dict d;
          d["value"] = p.value;
          d["zero"] = p.zero;
          d["stability_margin"] = p.stability_margin;
          d["disruptive_condition"] = p.disruptive_condition;
          d["classification"] = p.classification;
          d["disruptive"] = p.disruptive;
          rows.append(d);
        }
        return rows;
      },
      py::arg("base"), py::arg("vx"), py::arg("case"), py::arg("param"), py::arg("start"), py::arg("stop"),
      py::arg("points"));
}
