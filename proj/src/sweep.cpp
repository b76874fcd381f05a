#include "lzda/sweep.hpp"

#include "lzda/errors.hpp"

namespace lzda {

std::vector<SweepPoint> sweep(const VehicleParams& base, double vx, OutputCase c, std::string_view param,
                              double from, double to, int points) {
  if (points < 2 || from == to) throw ConfigError("sweep: empty range (need --points >= 2 and from != to)");

  auto set = [&](VehicleParams& p, double& speed, double v) {
    if (param == "m") p.m = v;
    else if (param == "Iz") p.Iz = v;
    else if (param == "a") p.a = v;
    else if (param == "b") p.b = v;
    else if (param == "Cf") p.Cf = v;
    else if (param == "Cr") p.Cr = v;
    else if (param == "vx") speed = v;
    else throw ValidationError("param", "cannot sweep '" + std::string(param) + "'");
  };

  std::vector<SweepPoint> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double v = i + 1 == points ? to : from + (to - from) * i / (points - 1);
    VehicleParams p = base;
    double speed = vx;
    set(p, speed, v);
    const LateralModel model = build_model(p, speed);

    SweepPoint row{v, std::nullopt, a_stability_margin(model), disruptive_condition(p), "", false};
    try {
      const InvariantZeroReport rep = classify(model, c);
      if (!rep.zeros.empty()) row.zero = rep.zeros.front().value.real();
      row.classification = to_string(rep.classification);
      row.disruptive = rep.disruptive;
    } catch (const DegenerateGeometryError&) {
      row.classification = "degenerate";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lzda
