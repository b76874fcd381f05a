#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lzda/analysis.hpp"
#include "lzda/model.hpp"

namespace lzda {

struct SweepPoint {
  double value;
  std::optional<double> zero;  // empty for Both or degenerate geometry
  double stability_margin;
  double disruptive_condition;
  std::string classification;  // to_string(ObservabilityClass) or "degenerate"
  bool disruptive;
};

/// Evaluates the output case's invariant zero on a linear grid of `points` values
/// (endpoints included) of one parameter: m, Iz, a, b, Cf, Cr or vx.
std::vector<SweepPoint> sweep(const VehicleParams& base, double vx, OutputCase c, std::string_view param,
                              double from, double to, int points);

}  // namespace lzda
