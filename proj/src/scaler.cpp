#include "hexstation/scaler.hpp"

#include <cmath>

#include "hexstation/errors.hpp"

namespace hexstation::learning {

std::string scaler_kind_name(ScalerKind k) {
  switch (k) {
    case ScalerKind::none:
      return "none";
    case ScalerKind::minmax:
      return "minmax";
    case ScalerKind::standard:
      return "standard";
  }
  return "none";
}

ScalerKind scaler_kind_from_name(const std::string& name) {
  if (name == "none") return ScalerKind::none;
  if (name == "minmax") return ScalerKind::minmax;
  if (name == "standard") return ScalerKind::standard;
  throw config_error("unknown scaler: '" + name + "'");
}

std::vector<double> ScalerState::transform(const std::vector<double>& row) const {
  if (kind == ScalerKind::none) return row;
  if (row.size() != offset.size())
    throw input_error("scaler dimension mismatch");
  std::vector<double> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i)
    out[i] = scale[i] > 0.0 ? (row[i] - offset[i]) / scale[i] : 0.0;
  return out;
}

ScalerState fit_scaler(const std::vector<std::vector<double>>& X,
                       ScalerKind kind) {
  if (X.empty()) throw input_error("cannot fit a scaler on an empty set");
  ScalerState st;
  st.kind = kind;
  if (kind == ScalerKind::none) return st;

  const std::size_t d = X.front().size();
  if (kind == ScalerKind::minmax) {
    std::vector<double> mn(X.front()), mx(X.front());
    for (const auto& row : X) {
      if (row.size() != d) throw input_error("inconsistent feature dimensions");
      for (std::size_t i = 0; i < d; ++i) {
        mn[i] = std::min(mn[i], row[i]);
        mx[i] = std::max(mx[i], row[i]);
      }
    }
    st.offset = mn;
    st.scale.resize(d);
    for (std::size_t i = 0; i < d; ++i) st.scale[i] = mx[i] - mn[i];
    return st;
  }

  std::vector<double> mean(d, 0.0), var(d, 0.0);
  for (const auto& row : X) {
    if (row.size() != d) throw input_error("inconsistent feature dimensions");
    for (std::size_t i = 0; i < d; ++i) mean[i] += row[i];
  }
  for (double& m : mean) m /= static_cast<double>(X.size());
  for (const auto& row : X)
    for (std::size_t i = 0; i < d; ++i) {
      const double diff = row[i] - mean[i];
      var[i] += diff * diff;
    }
  st.offset = mean;
  st.scale.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    st.scale[i] = std::sqrt(var[i] / static_cast<double>(X.size()));
  return st;
}

std::vector<std::vector<double>> apply_scaler(
    const ScalerState& state, const std::vector<std::vector<double>>& X) {
  std::vector<std::vector<double>> out;
  out.reserve(X.size());
  for (const auto& row : X) out.push_back(state.transform(row));
  return out;
}

}  // namespace hexstation::learning
