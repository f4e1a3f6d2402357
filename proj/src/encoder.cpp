#include "hexstation/encoder.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "hexstation/errors.hpp"
#include "hexstation/rng.hpp"

namespace hexstation::embedding {

using nlohmann::json;

namespace {

std::vector<double> scale_row(const Encoder& e, const std::vector<double>& x) {
  std::vector<double> s(e.input_dim);
  for (std::size_t i = 0; i < e.input_dim; ++i) {
    const double span = e.col_max[i] - e.col_min[i];
    s[i] = span > 0.0 ? (x[i] - e.col_min[i]) / span : 0.0;
  }
  return s;
}

struct Weights {
  std::vector<double> w1, b1, w2, b2;
};

}  // namespace

std::vector<double> Encoder::encode(const std::vector<double>& x) const {
  if (x.size() != input_dim)
    throw input_error("encode: expected dimension " +
                      std::to_string(input_dim) + ", got " +
                      std::to_string(x.size()));
  const std::vector<double> s = scale_row(*this, x);
  std::vector<double> h(bottleneck_dim, 0.0);
  for (std::size_t j = 0; j < bottleneck_dim; ++j) {
    double z = b1[j];
    const double* row = &w1[j * input_dim];
    for (std::size_t i = 0; i < input_dim; ++i) z += row[i] * s[i];
    h[j] = z > 0.0 ? z : 0.0;
  }
  return h;
}

std::vector<double> Encoder::reconstruct(const std::vector<double>& x) const {
  const std::vector<double> h = encode(x);
  std::vector<double> out(input_dim, 0.0);
  for (std::size_t i = 0; i < input_dim; ++i) {
    double z = b2[i];
    const double* row = &w2[i * bottleneck_dim];
    for (std::size_t j = 0; j < bottleneck_dim; ++j) z += row[j] * h[j];
    out[i] = z;
  }
  return out;
}

double Encoder::loss(const std::vector<std::vector<double>>& X) const {
  double total = 0.0;
  for (const auto& x : X) {
    const std::vector<double> s = scale_row(*this, x);
    const std::vector<double> xh = reconstruct(x);
    for (std::size_t i = 0; i < input_dim; ++i) {
      const double d = xh[i] - s[i];
      total += d * d;
    }
  }
  return total / (static_cast<double>(X.size()) * static_cast<double>(input_dim));
}

double column_mean_baseline_loss(const std::vector<std::vector<double>>& X) {
  if (X.empty()) throw input_error("empty training set");
  const std::size_t d = X.front().size();
  std::vector<double> mn(X.front()), mx(X.front());
  for (const auto& x : X)
    for (std::size_t i = 0; i < d; ++i) {
      mn[i] = std::min(mn[i], x[i]);
      mx[i] = std::max(mx[i], x[i]);
    }
  auto scaled = [&](const std::vector<double>& x, std::size_t i) {
    const double span = mx[i] - mn[i];
    return span > 0.0 ? (x[i] - mn[i]) / span : 0.0;
  };
  std::vector<double> mean(d, 0.0);
  for (const auto& x : X)
    for (std::size_t i = 0; i < d; ++i) mean[i] += scaled(x, i);
  for (double& m : mean) m /= static_cast<double>(X.size());
  double total = 0.0;
  for (const auto& x : X)
    for (std::size_t i = 0; i < d; ++i) {
      const double diff = scaled(x, i) - mean[i];
      total += diff * diff;
    }
  return total / (static_cast<double>(X.size()) * static_cast<double>(d));
}

Encoder train_encoder(const std::vector<std::vector<double>>& X,
                      std::size_t bottleneck, std::uint64_t seed,
                      const EncoderTrainConfig& cfg) {
  if (X.size() < 10)
    throw input_error("encoder training needs at least 10 samples");
  const std::size_t d = X.front().size();
  for (const auto& x : X)
    if (x.size() != d) throw input_error("inconsistent training dimensions");
  if (bottleneck == 0 || bottleneck >= d)
    throw config_error("bottleneck must be in (0, input_dim)");

  Encoder e;
  e.input_dim = d;
  e.bottleneck_dim = bottleneck;
  e.seed = seed;
  e.col_min = X.front();
  e.col_max = X.front();
  for (const auto& x : X)
    for (std::size_t i = 0; i < d; ++i) {
      e.col_min[i] = std::min(e.col_min[i], x[i]);
      e.col_max[i] = std::max(e.col_max[i], x[i]);
    }

  std::vector<std::vector<double>> S;
  S.reserve(X.size());
  for (const auto& x : X) S.push_back(scale_row(e, x));

  Rng rng(derive_seed(seed, 0xE7C0DE));
  // Scaled inputs live in [0,1]. Small encode weights with a bias of 0.5
  // start every rectified unit safely in its active region; small decode
  // weights with mean biases start the output at the column-mean baseline.
  const double r1 =
      0.3 * std::sqrt(6.0 / static_cast<double>(d + bottleneck));
  e.w1.resize(bottleneck * d);
  e.w2.resize(d * bottleneck);
  for (double& w : e.w1) w = rng.uniform(-r1, r1);
  for (double& w : e.w2) w = rng.uniform(-0.05, 0.05);
  e.b1.assign(bottleneck, 0.5);
  e.b2.assign(d, 0.0);
  for (const auto& s : S)
    for (std::size_t i = 0; i < d; ++i) e.b2[i] += s[i];
  for (double& b : e.b2) b /= static_cast<double>(S.size());

  const std::size_t n = S.size();
  const std::size_t batch =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.batch_size), n);
  double lr = cfg.learning_rate;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  // Best-weights early stopping: the recorded loss per epoch is the best
  // full-data loss reached so far (trivially non-increasing), and the final
  // weights are the best snapshot.
  double best_loss = e.loss(X);
  Weights best{e.w1, e.b1, e.w2, e.b2};
  int stale_epochs = 0;

  std::vector<double> z1(bottleneck), h(bottleneck), dh(bottleneck);
  std::vector<double> xh(d), derr(d);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t end = std::min(start + batch, n);
      const double scale = 2.0 / (static_cast<double>(end - start) *
                                  static_cast<double>(d));
      // Accumulate gradients over the batch, then one update.
      std::vector<double> gw1(bottleneck * d, 0.0), gb1(bottleneck, 0.0);
      std::vector<double> gw2(d * bottleneck, 0.0), gb2(d, 0.0);
      for (std::size_t bi = start; bi < end; ++bi) {
        const auto& s = S[order[bi]];
        for (std::size_t j = 0; j < bottleneck; ++j) {
          double z = e.b1[j];
          const double* row = &e.w1[j * d];
          for (std::size_t i = 0; i < d; ++i) z += row[i] * s[i];
          z1[j] = z;
          h[j] = z > 0.0 ? z : 0.0;
        }
        for (std::size_t i = 0; i < d; ++i) {
          double z = e.b2[i];
          const double* row = &e.w2[i * bottleneck];
          for (std::size_t j = 0; j < bottleneck; ++j) z += row[j] * h[j];
          xh[i] = z;
          derr[i] = scale * (z - s[i]);
        }
        for (std::size_t i = 0; i < d; ++i) {
          double* row = &gw2[i * bottleneck];
          for (std::size_t j = 0; j < bottleneck; ++j)
            row[j] += derr[i] * h[j];
          gb2[i] += derr[i];
        }
        for (std::size_t j = 0; j < bottleneck; ++j) {
          double acc = 0.0;
          for (std::size_t i = 0; i < d; ++i)
            acc += e.w2[i * bottleneck + j] * derr[i];
          dh[j] = z1[j] > 0.0 ? acc : 0.0;
        }
        for (std::size_t j = 0; j < bottleneck; ++j) {
          double* row = &gw1[j * d];
          for (std::size_t i = 0; i < d; ++i) row[i] += dh[j] * s[i];
          gb1[j] += dh[j];
        }
      }
      for (std::size_t i = 0; i < e.w1.size(); ++i) e.w1[i] -= lr * gw1[i];
      for (std::size_t i = 0; i < bottleneck; ++i) e.b1[i] -= lr * gb1[i];
      for (std::size_t i = 0; i < e.w2.size(); ++i) e.w2[i] -= lr * gw2[i];
      for (std::size_t i = 0; i < d; ++i) e.b2[i] -= lr * gb2[i];
    }

    const double epoch_loss = e.loss(X);
    if (epoch_loss < best_loss) {
      best_loss = epoch_loss;
      best = Weights{e.w1, e.b1, e.w2, e.b2};
      stale_epochs = 0;
    } else if (++stale_epochs >= 25) {
      // Long plateau: restart from the best weights with a smaller step.
      e.w1 = best.w1;
      e.b1 = best.b1;
      e.w2 = best.w2;
      e.b2 = best.b2;
      lr *= 0.5;
      stale_epochs = 0;
    }
    e.epoch_losses.push_back(best_loss);
  }
  e.w1 = best.w1;
  e.b1 = best.b1;
  e.w2 = best.w2;
  e.b2 = best.b2;
  e.epochs_trained = cfg.epochs;
  e.final_loss = best_loss;
  return e;
}

std::string serialize_encoder(const Encoder& e) {
  json doc = {{"schema", "hexstation-encoder/1"},
              {"input_dim", e.input_dim},
              {"bottleneck_dim", e.bottleneck_dim},
              {"seed", e.seed},
              {"epochs_trained", e.epochs_trained},
              {"final_loss", e.final_loss},
              {"epoch_losses", e.epoch_losses},
              {"col_min", e.col_min},
              {"col_max", e.col_max},
              {"w1", e.w1},
              {"b1", e.b1},
              {"w2", e.w2},
              {"b2", e.b2}};
  return doc.dump();
}

Encoder parse_encoder(const std::string& body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& err) {
    throw parse_error(std::string("bad encoder file: ") + err.what());
  }
  if (doc.value("schema", "") != "hexstation-encoder/1")
    throw parse_error("unsupported encoder schema");
  Encoder e;
  e.input_dim = doc.at("input_dim").get<std::size_t>();
  e.bottleneck_dim = doc.at("bottleneck_dim").get<std::size_t>();
  e.seed = doc.at("seed").get<std::uint64_t>();
  e.epochs_trained = doc.at("epochs_trained").get<int>();
  e.final_loss = doc.at("final_loss").get<double>();
  e.epoch_losses = doc.at("epoch_losses").get<std::vector<double>>();
  e.col_min = doc.at("col_min").get<std::vector<double>>();
  e.col_max = doc.at("col_max").get<std::vector<double>>();
  e.w1 = doc.at("w1").get<std::vector<double>>();
  e.b1 = doc.at("b1").get<std::vector<double>>();
  e.w2 = doc.at("w2").get<std::vector<double>>();
  e.b2 = doc.at("b2").get<std::vector<double>>();
  return e;
}

}  // namespace hexstation::embedding
