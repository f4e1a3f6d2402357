#include "hexstation/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "hexstation/errors.hpp"

namespace hexstation::learning {

std::vector<hexgrid::CellId> sample_training_set(
    const std::map<hexgrid::CellId, bool>& labels, double ratio, Rng& rng) {
  if (!(ratio >= 1.0)) throw input_error("imbalance ratio must be >= 1");
  std::vector<hexgrid::CellId> positives, negatives;
  for (const auto& [cell, positive] : labels)
    (positive ? positives : negatives).push_back(cell);
  if (positives.empty())
    throw data_error("training set needs at least one positive cell");

  const auto want = static_cast<std::size_t>(
      std::floor(ratio * static_cast<double>(positives.size())));
  if (want > negatives.size())
    throw data_error("not enough negative cells: need " +
                     std::to_string(want) + ", have " +
                     std::to_string(negatives.size()) + " (short by " +
                     std::to_string(want - negatives.size()) + ")");

  std::vector<hexgrid::CellId> out = positives;  // map order: already sorted
  for (const std::size_t idx :
       rng.sample_without_replacement(negatives.size(), want))
    out.push_back(negatives[idx]);
  return out;
}

TrainTestSplit stratified_split(const std::vector<hexgrid::CellId>& cells,
                                const std::map<hexgrid::CellId, bool>& labels,
                                double train_fraction, Rng& rng) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw input_error("train fraction must be in (0, 1)");
  TrainTestSplit split;
  for (const bool cls : {true, false}) {
    std::vector<hexgrid::CellId> members;
    for (const auto& c : cells)
      if (labels.at(c) == cls) members.push_back(c);
    if (members.empty()) continue;
    rng.shuffle(members);
    auto n_train = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(members.size())));
    if (members.size() >= 2) {
      n_train = std::max<std::size_t>(n_train, 1);
      n_train = std::min(n_train, members.size() - 1);
    } else {
      n_train = 1;  // a singleton class goes to train; the model must see it
    }
    split.train.insert(split.train.end(), members.begin(),
                       members.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.test.insert(split.test.end(),
                      members.begin() + static_cast<std::ptrdiff_t>(n_train),
                      members.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

}  // namespace hexstation::learning
