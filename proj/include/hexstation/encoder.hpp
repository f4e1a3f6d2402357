#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hexstation::embedding {

// Bottleneck autoencoder for region-vector dimensionality reduction: inputs
// min-max scaled to [0,1], one rectified-linear hidden layer (the
// bottleneck), affine decode, mean-squared-error loss.
struct Encoder {
  std::size_t input_dim = 0;
  std::size_t bottleneck_dim = 0;
  std::uint64_t seed = 0;
  int epochs_trained = 0;
  double final_loss = 0.0;
  std::vector<double> epoch_losses;  // recorded per epoch, non-increasing

  std::vector<double> col_min, col_max;  // input scaling
  std::vector<double> w1, b1;            // bottleneck x input, row-major
  std::vector<double> w2, b2;            // input x bottleneck, row-major

  std::vector<double> encode(const std::vector<double>& x) const;
  std::vector<double> reconstruct(const std::vector<double>& x) const;

  // Mean squared reconstruction error in the scaled input space.
  double loss(const std::vector<std::vector<double>>& X) const;
};

struct EncoderTrainConfig {
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 0.5;
};

// Trains deterministically from the seed. Mini-batch gradient descent with an
// epoch-end safeguard: an epoch that increases the full-data loss is rolled
// back and the learning rate halved, so the recorded loss sequence never
// increases.
Encoder train_encoder(const std::vector<std::vector<double>>& X,
                      std::size_t bottleneck, std::uint64_t seed,
                      const EncoderTrainConfig& cfg = {});

// Baseline used to judge the encoder: predicting the per-column mean of the
// scaled training data.
double column_mean_baseline_loss(const std::vector<std::vector<double>>& X);

std::string serialize_encoder(const Encoder& e);
Encoder parse_encoder(const std::string& body);

}  // namespace hexstation::embedding
