#pragma once

#include <string>
#include <vector>

namespace hexstation::learning {

enum class ScalerKind { none, minmax, standard };

std::string scaler_kind_name(ScalerKind k);
ScalerKind scaler_kind_from_name(const std::string& name);

// Column scaling fitted on training data only. Applying a fitted minmax to
// unseen data may leave [0,1]; values are never clamped.
struct ScalerState {
  ScalerKind kind = ScalerKind::none;
  std::vector<double> offset;  // minmax: col min; standard: col mean
  std::vector<double> scale;   // minmax: col span; standard: col sd (population)

  std::vector<double> transform(const std::vector<double>& row) const;
};

ScalerState fit_scaler(const std::vector<std::vector<double>>& X,
                       ScalerKind kind);

std::vector<std::vector<double>> apply_scaler(
    const ScalerState& state, const std::vector<std::vector<double>>& X);

}  // namespace hexstation::learning
