#pragma once

#include <map>
#include <vector>

#include "hexstation/hexgrid.hpp"
#include "hexstation/rng.hpp"

namespace hexstation::learning {

// Imbalance-controlled training set: every positive cell plus
// floor(ratio * positives) distinct negatives drawn uniformly without
// replacement. Deterministic given the RNG state; raises a sampling error
// naming the shortfall when there are not enough negatives.
std::vector<hexgrid::CellId> sample_training_set(
    const std::map<hexgrid::CellId, bool>& labels, double ratio, Rng& rng);

// Stratified split: per class, floor(train_fraction * n) rows train (at
// least 1 when the class has 2+), the rest test. Row order within the splits
// is sorted by cell.
struct TrainTestSplit {
  std::vector<hexgrid::CellId> train;
  std::vector<hexgrid::CellId> test;
};

TrainTestSplit stratified_split(const std::vector<hexgrid::CellId>& cells,
                                const std::map<hexgrid::CellId, bool>& labels,
                                double train_fraction, Rng& rng);

}  // namespace hexstation::learning
