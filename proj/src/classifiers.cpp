#include "hexstation/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "hexstation/errors.hpp"
#include "hexstation/rng.hpp"

namespace hexstation::learning {

using nlohmann::json;

std::string classifier_kind_name(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::knn:
      return "knn";
    case ClassifierKind::random_forest:
      return "random_forest";
    case ClassifierKind::adaboost:
      return "adaboost";
    case ClassifierKind::mlp:
      return "mlp";
    case ClassifierKind::plugin:
      return "plugin";
  }
  return "random_forest";
}

ClassifierKind classifier_kind_from_name(const std::string& name) {
  if (name == "knn") return ClassifierKind::knn;
  if (name == "random_forest") return ClassifierKind::random_forest;
  if (name == "adaboost") return ClassifierKind::adaboost;
  if (name == "mlp") return ClassifierKind::mlp;
  if (name == "plugin") return ClassifierKind::plugin;
  throw config_error("unknown classifier: '" + name + "'");
}

std::string class_balance_name(ClassBalanceMode m) {
  switch (m) {
    case ClassBalanceMode::normal:
      return "normal";
    case ClassBalanceMode::balanced:
      return "balanced";
    case ClassBalanceMode::balanced_subsample:
      return "balanced_subsample";
  }
  return "normal";
}

ClassBalanceMode class_balance_from_name(const std::string& name) {
  if (name == "normal") return ClassBalanceMode::normal;
  if (name == "balanced") return ClassBalanceMode::balanced;
  if (name == "balanced_subsample") return ClassBalanceMode::balanced_subsample;
  throw config_error("unknown class balance mode: '" + name + "'");
}

json ClassifierParams::to_json() const {
  return json{{"knn_k", knn_k},
              {"forest_trees", forest_trees},
              {"adaboost_rounds", adaboost_rounds},
              {"mlp_hidden", mlp_hidden},
              {"mlp_epochs", mlp_epochs},
              {"mlp_batch", mlp_batch},
              {"mlp_learning_rate", mlp_learning_rate},
              {"plugin_name", plugin_name}};
}

ClassifierParams ClassifierParams::from_json(const json& j) {
  ClassifierParams p;
  p.knn_k = j.value("knn_k", p.knn_k);
  p.forest_trees = j.value("forest_trees", p.forest_trees);
  p.adaboost_rounds = j.value("adaboost_rounds", p.adaboost_rounds);
  p.mlp_hidden = j.value("mlp_hidden", p.mlp_hidden);
  p.mlp_epochs = j.value("mlp_epochs", p.mlp_epochs);
  p.mlp_batch = j.value("mlp_batch", p.mlp_batch);
  p.mlp_learning_rate = j.value("mlp_learning_rate", p.mlp_learning_rate);
  p.plugin_name = j.value("plugin_name", p.plugin_name);
  return p;
}

namespace {

using Matrix = std::vector<std::vector<double>>;

// ----------------------------------------------------------------- kNN ----

class KnnClassifier final : public Classifier {
 public:
  KnnClassifier(Matrix X, std::vector<int> y, int k)
      : X_(std::move(X)), y_(std::move(y)), k_(std::max(1, k)) {}

  double predict_one(const std::vector<double>& x) const override {
    const std::size_t n = X_.size();
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(k_), n);
    // (distance^2, canonical row index) with deterministic tie-break.
    std::vector<std::pair<double, std::size_t>> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = X_[i][j] - x[j];
        s += diff * diff;
      }
      d[i] = {s, i};
    }
    std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k),
                      d.end());
    double positives = 0.0;
    for (std::size_t i = 0; i < k; ++i) positives += y_[d[i].second];
    return positives / static_cast<double>(k);
  }

  json to_json() const override {
    return json{{"type", "knn"}, {"k", k_}, {"X", X_}, {"y", y_}};
  }

  static std::shared_ptr<Classifier> from_json(const json& j) {
    return std::make_shared<KnnClassifier>(j.at("X").get<Matrix>(),
                                           j.at("y").get<std::vector<int>>(),
                                           j.at("k").get<int>());
  }

 private:
  Matrix X_;
  std::vector<int> y_;
  int k_;
};

// ------------------------------------------------------- decision tree ----

struct TreeNode {
  int feature = -1;        // -1: leaf
  double threshold = 0.0;
  int left = -1, right = -1;
  int vote = 0;            // leaf majority class
};

struct GiniSplit {
  int feature = -1;
  double threshold = 0.0;
  double impurity_decrease = 0.0;
};

class DecisionTree {
 public:
  // Builds on the given row indices with per-row weights; feature subsets of
  // size ceil(sqrt(d)) are drawn per node from the tree's RNG stream.
  void fit(const Matrix& X, const std::vector<int>& y,
           const std::vector<double>& w, std::vector<std::size_t> rows,
           Rng& rng) {
    nodes_.clear();
    build(X, y, w, std::move(rows), rng);
  }

  int predict_vote(const std::vector<double>& x) const {
    int idx = 0;
    while (nodes_[static_cast<std::size_t>(idx)].feature >= 0) {
      const TreeNode& n = nodes_[static_cast<std::size_t>(idx)];
      idx = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                  : n.right;
    }
    return nodes_[static_cast<std::size_t>(idx)].vote;
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& n : nodes_)
      arr.push_back(json::array(
          {n.feature, n.threshold, n.left, n.right, n.vote}));
    return arr;
  }

  static DecisionTree from_json(const json& j) {
    DecisionTree t;
    for (const auto& n : j) {
      TreeNode node;
      node.feature = n[0].get<int>();
      node.threshold = n[1].get<double>();
      node.left = n[2].get<int>();
      node.right = n[3].get<int>();
      node.vote = n[4].get<int>();
      t.nodes_.push_back(node);
    }
    return t;
  }

 private:
  int build(const Matrix& X, const std::vector<int>& y,
            const std::vector<double>& w, std::vector<std::size_t> rows,
            Rng& rng) {
    double wpos = 0.0, wtot = 0.0;
    for (const std::size_t r : rows) {
      wtot += w[r];
      if (y[r] == 1) wpos += w[r];
    }
    const int node_index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    const bool pure = wpos <= 0.0 || wpos >= wtot;
    if (rows.size() < 2 || pure || wtot <= 0.0) {
      nodes_[static_cast<std::size_t>(node_index)].vote =
          wpos * 2.0 >= wtot ? 1 : 0;
      return node_index;
    }

    const GiniSplit split = best_split(X, y, w, rows, rng);
    if (split.feature < 0 || split.impurity_decrease <= 1e-12) {
      nodes_[static_cast<std::size_t>(node_index)].vote =
          wpos * 2.0 >= wtot ? 1 : 0;
      return node_index;
    }

    std::vector<std::size_t> left_rows, right_rows;
    for (const std::size_t r : rows) {
      if (X[r][static_cast<std::size_t>(split.feature)] <= split.threshold)
        left_rows.push_back(r);
      else
        right_rows.push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    nodes_[static_cast<std::size_t>(node_index)].feature = split.feature;
    nodes_[static_cast<std::size_t>(node_index)].threshold = split.threshold;
    const int left = build(X, y, w, std::move(left_rows), rng);
    nodes_[static_cast<std::size_t>(node_index)].left = left;
    const int right = build(X, y, w, std::move(right_rows), rng);
    nodes_[static_cast<std::size_t>(node_index)].right = right;
    return node_index;
  }

  GiniSplit best_split(const Matrix& X, const std::vector<int>& y,
                       const std::vector<double>& w,
                       const std::vector<std::size_t>& rows, Rng& rng) const {
    const std::size_t d = X.front().size();
    const auto n_features = static_cast<std::size_t>(
        std::max(1.0, std::ceil(std::sqrt(static_cast<double>(d)))));
    std::vector<std::size_t> features =
        rng.sample_without_replacement(d, n_features);
    std::sort(features.begin(), features.end());

    double wpos = 0.0, wtot = 0.0;
    for (const std::size_t r : rows) {
      wtot += w[r];
      if (y[r] == 1) wpos += w[r];
    }
    const double parent_gini =
        1.0 - (wpos / wtot) * (wpos / wtot) -
        ((wtot - wpos) / wtot) * ((wtot - wpos) / wtot);

    GiniSplit best;
    std::vector<std::pair<double, std::size_t>> values(rows.size());
    for (const std::size_t f : features) {
      for (std::size_t i = 0; i < rows.size(); ++i)
        values[i] = {X[rows[i]][f], rows[i]};
      std::sort(values.begin(), values.end());
      double lpos = 0.0, ltot = 0.0;
      for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const std::size_t r = values[i].second;
        ltot += w[r];
        if (y[r] == 1) lpos += w[r];
        if (values[i].first == values[i + 1].first) continue;
        const double rtot = wtot - ltot, rpos = wpos - lpos;
        if (ltot <= 0.0 || rtot <= 0.0) continue;
        const double gl =
            1.0 - (lpos / ltot) * (lpos / ltot) -
            ((ltot - lpos) / ltot) * ((ltot - lpos) / ltot);
        const double gr =
            1.0 - (rpos / rtot) * (rpos / rtot) -
            ((rtot - rpos) / rtot) * ((rtot - rpos) / rtot);
        const double decrease =
            parent_gini - (ltot / wtot) * gl - (rtot / wtot) * gr;
        if (decrease > best.impurity_decrease) {
          best.feature = static_cast<int>(f);
          best.threshold = (values[i].first + values[i + 1].first) / 2.0;
          best.impurity_decrease = decrease;
        }
      }
    }
    return best;
  }

  std::vector<TreeNode> nodes_;
};

// -------------------------------------------------------- random forest ---

class RandomForestClassifier final : public Classifier {
 public:
  RandomForestClassifier(const Matrix& X, const std::vector<int>& y,
                         int n_trees, ClassBalanceMode balance,
                         std::uint64_t seed) {
    const std::size_t n = X.size();
    double n_pos = 0.0;
    for (const int label : y) n_pos += label;
    const double n_neg = static_cast<double>(n) - n_pos;

    trees_.resize(static_cast<std::size_t>(n_trees));
    for (std::size_t t = 0; t < trees_.size(); ++t) {
      Rng rng(derive_seed(seed, 0xF03E57, t));
      std::vector<std::size_t> rows(n);
      for (std::size_t i = 0; i < n; ++i)
        rows[i] = static_cast<std::size_t>(rng.next_below(n));  // bootstrap
      std::sort(rows.begin(), rows.end());

      std::vector<double> w(n, 1.0);
      if (balance == ClassBalanceMode::balanced) {
        const double wp = n_pos > 0 ? static_cast<double>(n) / (2.0 * n_pos) : 0;
        const double wn = n_neg > 0 ? static_cast<double>(n) / (2.0 * n_neg) : 0;
        for (std::size_t i = 0; i < n; ++i) w[i] = y[i] == 1 ? wp : wn;
      } else if (balance == ClassBalanceMode::balanced_subsample) {
        double bpos = 0.0;
        for (const std::size_t r : rows) bpos += y[r];
        const double btot = static_cast<double>(rows.size());
        const double bneg = btot - bpos;
        const double wp = bpos > 0 ? btot / (2.0 * bpos) : 0.0;
        const double wn = bneg > 0 ? btot / (2.0 * bneg) : 0.0;
        for (std::size_t i = 0; i < n; ++i) w[i] = y[i] == 1 ? wp : wn;
      }
      trees_[t].fit(X, y, w, rows, rng);
    }
  }

  explicit RandomForestClassifier(std::vector<DecisionTree> trees)
      : trees_(std::move(trees)) {}

  double predict_one(const std::vector<double>& x) const override {
    // Probability is the fraction of tree votes.
    double votes = 0.0;
    for (const auto& t : trees_) votes += t.predict_vote(x);
    return votes / static_cast<double>(trees_.size());
  }

  json to_json() const override {
    json arr = json::array();
    for (const auto& t : trees_) arr.push_back(t.to_json());
    return json{{"type", "random_forest"}, {"trees", arr}};
  }

  static std::shared_ptr<Classifier> from_json(const json& j) {
    std::vector<DecisionTree> trees;
    for (const auto& t : j.at("trees")) trees.push_back(DecisionTree::from_json(t));
    return std::make_shared<RandomForestClassifier>(std::move(trees));
  }

 private:
  std::vector<DecisionTree> trees_;
};

// ------------------------------------------------------------ AdaBoost ----

struct Stump {
  int feature = 0;
  double threshold = 0.0;
  int polarity = 1;  // +1: x <= threshold predicts positive
  double alpha = 0.0;

  int predict(const std::vector<double>& x) const {
    const bool left = x[static_cast<std::size_t>(feature)] <= threshold;
    return (left == (polarity > 0)) ? 1 : -1;
  }
};

class AdaBoostClassifier final : public Classifier {
 public:
  AdaBoostClassifier(const Matrix& X, const std::vector<int>& y, int rounds) {
    const std::size_t n = X.size();
    const std::size_t d = X.front().size();
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    std::vector<int> ypm(n);
    for (std::size_t i = 0; i < n; ++i) ypm[i] = y[i] == 1 ? 1 : -1;

    for (int round = 0; round < rounds; ++round) {
      Stump stump;
      double best_err = 1.0;
      std::vector<std::pair<double, std::size_t>> values(n);
      for (std::size_t f = 0; f < d; ++f) {
        for (std::size_t i = 0; i < n; ++i) values[i] = {X[i][f], i};
        std::sort(values.begin(), values.end());
        // err(+1) at threshold before index 0: every row predicted negative.
        double err_pos = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          if (ypm[i] == 1) err_pos += w[i];
        double err = err_pos;
        check_candidate(stump, best_err, err, f,
                        values.front().first - 1.0);
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t r = values[i].second;
          // Row r moves to the "left" side: predicted positive by polarity+1.
          err += ypm[r] == 1 ? -w[r] : w[r];
          if (i + 1 < n && values[i].first == values[i + 1].first) continue;
          const double thr = i + 1 < n
                                 ? (values[i].first + values[i + 1].first) / 2.0
                                 : values[i].first + 1.0;
          check_candidate(stump, best_err, err, f, thr);
        }
      }
      if (best_err >= 0.5) break;  // no better than chance: stop boosting
      const double eps = 1e-10;
      stump.alpha =
          0.5 * std::log((1.0 - best_err + eps) / (best_err + eps));
      stumps_.push_back(stump);
      if (best_err <= eps) break;  // perfect stump

      double wsum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        w[i] *= std::exp(-stump.alpha * ypm[i] * stump.predict(X[i]));
        wsum += w[i];
      }
      for (double& wi : w) wi /= wsum;
    }
    if (stumps_.empty()) {
      // Degenerate data; fall back to the majority class.
      double pos = 0.0;
      for (const int yi : y) pos += yi;
      Stump s;
      s.feature = 0;
      s.threshold = std::numeric_limits<double>::infinity();
      s.polarity = pos * 2.0 >= static_cast<double>(n) ? 1 : -1;
      s.alpha = 1.0;
      stumps_.push_back(s);
    }
  }

  explicit AdaBoostClassifier(std::vector<Stump> stumps)
      : stumps_(std::move(stumps)) {}

  double predict_one(const std::vector<double>& x) const override {
    double f = 0.0, asum = 0.0;
    for (const auto& s : stumps_) {
      f += s.alpha * s.predict(x);
      asum += s.alpha;
    }
    const double margin = asum > 0.0 ? f / asum : 0.0;  // in [-1, 1]
    return (1.0 + margin) / 2.0;
  }

  json to_json() const override {
    json arr = json::array();
    for (const auto& s : stumps_)
      arr.push_back(json::array({s.feature, s.threshold, s.polarity, s.alpha}));
    return json{{"type", "adaboost"}, {"stumps", arr}};
  }

  static std::shared_ptr<Classifier> from_json(const json& j) {
    std::vector<Stump> stumps;
    for (const auto& s : j.at("stumps")) {
      Stump st;
      st.feature = s[0].get<int>();
      st.threshold = s[1].get<double>();
      st.polarity = s[2].get<int>();
      st.alpha = s[3].get<double>();
      stumps.push_back(st);
    }
    return std::make_shared<AdaBoostClassifier>(std::move(stumps));
  }

 private:
  static void check_candidate(Stump& stump, double& best_err, double err,
                              std::size_t feature, double threshold) {
    // err is the weighted error of polarity +1; polarity -1 has 1 - err.
    if (err < best_err) {
      best_err = err;
      stump.feature = static_cast<int>(feature);
      stump.threshold = threshold;
      stump.polarity = 1;
    }
    if (1.0 - err < best_err) {
      best_err = 1.0 - err;
      stump.feature = static_cast<int>(feature);
      stump.threshold = threshold;
      stump.polarity = -1;
    }
  }

  std::vector<Stump> stumps_;
};

// ----------------------------------------------------------------- MLP ----

// Input -> hidden(ReLU) -> 2-way softmax, cross-entropy loss, Adam updates.
class MlpClassifier final : public Classifier {
 public:
  MlpClassifier(const Matrix& X, const std::vector<int>& y, int hidden,
                int epochs, int batch, double lr, std::uint64_t seed)
      : d_(X.front().size()), hidden_(static_cast<std::size_t>(hidden)) {
    Rng rng(derive_seed(seed, 0x313F1D));
    const double r1 = std::sqrt(6.0 / static_cast<double>(d_ + hidden_));
    const double r2 = std::sqrt(6.0 / static_cast<double>(hidden_ + 2));
    w1_.resize(hidden_ * d_);
    w2_.resize(2 * hidden_);
    for (double& w : w1_) w = rng.uniform(-r1, r1);
    for (double& w : w2_) w = rng.uniform(-r2, r2);
    b1_.assign(hidden_, 0.0);
    b2_.assign(2, 0.0);

    AdamState adam(w1_.size() + b1_.size() + w2_.size() + b2_.size());
    const std::size_t n = X.size();
    const auto bsz = std::min<std::size_t>(static_cast<std::size_t>(batch), n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<double> z1(hidden_), h(hidden_), dh(hidden_);
    for (int epoch = 0; epoch < epochs; ++epoch) {
      rng.shuffle(order);
      for (std::size_t start = 0; start < n; start += bsz) {
        const std::size_t end = std::min(start + bsz, n);
        std::vector<double> gw1(w1_.size(), 0.0), gb1(hidden_, 0.0);
        std::vector<double> gw2(w2_.size(), 0.0), gb2(2, 0.0);
        const double inv = 1.0 / static_cast<double>(end - start);
        for (std::size_t bi = start; bi < end; ++bi) {
          const auto& x = X[order[bi]];
          const int label = y[order[bi]];
          forward(x, z1, h);
          double logits[2] = {b2_[0], b2_[1]};
          for (std::size_t j = 0; j < hidden_; ++j) {
            logits[0] += w2_[j] * h[j];
            logits[1] += w2_[hidden_ + j] * h[j];
          }
          const double m = std::max(logits[0], logits[1]);
          const double e0 = std::exp(logits[0] - m), e1 = std::exp(logits[1] - m);
          const double p1 = e1 / (e0 + e1);
          const double dlogit[2] = {(1.0 - p1 - (label == 0 ? 1.0 : 0.0)) * inv,
                                    (p1 - (label == 1 ? 1.0 : 0.0)) * inv};
          for (std::size_t j = 0; j < hidden_; ++j) {
            gw2[j] += dlogit[0] * h[j];
            gw2[hidden_ + j] += dlogit[1] * h[j];
            dh[j] = z1[j] > 0.0
                        ? dlogit[0] * w2_[j] + dlogit[1] * w2_[hidden_ + j]
                        : 0.0;
          }
          gb2[0] += dlogit[0];
          gb2[1] += dlogit[1];
          for (std::size_t j = 0; j < hidden_; ++j) {
            for (std::size_t i = 0; i < d_; ++i) gw1[j * d_ + i] += dh[j] * x[i];
            gb1[j] += dh[j];
          }
        }
        adam.step(lr, {&gw1, &gb1, &gw2, &gb2}, {&w1_, &b1_, &w2_, &b2_});
      }
    }
  }

  MlpClassifier(std::size_t d, std::size_t hidden, std::vector<double> w1,
                std::vector<double> b1, std::vector<double> w2,
                std::vector<double> b2)
      : d_(d), hidden_(hidden), w1_(std::move(w1)), b1_(std::move(b1)),
        w2_(std::move(w2)), b2_(std::move(b2)) {}

  double predict_one(const std::vector<double>& x) const override {
    std::vector<double> z1(hidden_), h(hidden_);
    forward(x, z1, h);
    double logits[2] = {b2_[0], b2_[1]};
    for (std::size_t j = 0; j < hidden_; ++j) {
      logits[0] += w2_[j] * h[j];
      logits[1] += w2_[hidden_ + j] * h[j];
    }
    const double m = std::max(logits[0], logits[1]);
    const double e0 = std::exp(logits[0] - m), e1 = std::exp(logits[1] - m);
    return e1 / (e0 + e1);
  }

  json to_json() const override {
    return json{{"type", "mlp"},   {"input_dim", d_}, {"hidden", hidden_},
                {"w1", w1_},       {"b1", b1_},       {"w2", w2_},
                {"b2", b2_}};
  }

  static std::shared_ptr<Classifier> from_json(const json& j) {
    return std::make_shared<MlpClassifier>(
        j.at("input_dim").get<std::size_t>(), j.at("hidden").get<std::size_t>(),
        j.at("w1").get<std::vector<double>>(),
        j.at("b1").get<std::vector<double>>(),
        j.at("w2").get<std::vector<double>>(),
        j.at("b2").get<std::vector<double>>());
  }

 private:
  struct AdamState {
    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
    void step(double lr, std::vector<const std::vector<double>*> grads,
              std::vector<std::vector<double>*> params) {
      ++t;
      const double b1c = 1.0 - std::pow(0.9, t);
      const double b2c = 1.0 - std::pow(0.999, t);
      std::size_t off = 0;
      for (std::size_t p = 0; p < params.size(); ++p) {
        auto& param = *params[p];
        const auto& grad = *grads[p];
        for (std::size_t i = 0; i < param.size(); ++i, ++off) {
          m[off] = 0.9 * m[off] + 0.1 * grad[i];
          v[off] = 0.999 * v[off] + 0.001 * grad[i] * grad[i];
          param[i] -=
              lr * (m[off] / b1c) / (std::sqrt(v[off] / b2c) + 1e-8);
        }
      }
    }
    std::vector<double> m, v;
    int t = 0;
  };

  void forward(const std::vector<double>& x, std::vector<double>& z1,
               std::vector<double>& h) const {
    for (std::size_t j = 0; j < hidden_; ++j) {
      double z = b1_[j];
      const double* row = &w1_[j * d_];
      for (std::size_t i = 0; i < d_; ++i) z += row[i] * x[i];
      z1[j] = z;
      h[j] = z > 0.0 ? z : 0.0;
    }
  }

  std::size_t d_, hidden_;
  std::vector<double> w1_, b1_, w2_, b2_;
};

// --------------------------------------------------------------- plugin ---

std::map<std::string, PluginFactory>& plugin_registry() {
  static std::map<std::string, PluginFactory> registry;
  return registry;
}

// Canonical row order: lexicographic by features, then label. Fitting in this
// order makes every classifier invariant to the input permutation.
std::vector<std::size_t> canonical_order(const Matrix& X,
                                         const std::vector<int>& y) {
  std::vector<std::size_t> idx(X.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (X[a] != X[b]) return X[a] < X[b];
    return y[a] < y[b];
  });
  return idx;
}

}  // namespace

void register_plugin_classifier(const std::string& name,
                                PluginFactory factory) {
  plugin_registry()[name] = std::move(factory);
}

bool plugin_classifier_registered(const std::string& name) {
  return plugin_registry().count(name) > 0;
}

TrainedModel fit_classifier(const Matrix& X, const std::vector<int>& y,
                            const FitConfig& cfg, const ScalerState& scaler) {
  if (X.size() != y.size() || X.empty())
    throw input_error("fit_classifier: X and y must be non-empty and aligned");
  bool has_pos = false, has_neg = false;
  for (const int label : y) (label == 1 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw data_error("fit_classifier: both classes must be present");

  const auto order = canonical_order(X, y);
  Matrix Xc;
  std::vector<int> yc;
  Xc.reserve(X.size());
  yc.reserve(y.size());
  for (const std::size_t i : order) {
    Xc.push_back(scaler.transform(X[i]));
    yc.push_back(y[i]);
  }

  TrainedModel model;
  model.kind_ = cfg.kind;
  model.feature_dim_ = X.front().size();
  model.scaler_ = scaler;
  switch (cfg.kind) {
    case ClassifierKind::knn:
      model.impl_ = std::make_shared<KnnClassifier>(std::move(Xc),
                                                    std::move(yc),
                                                    cfg.params.knn_k);
      break;
    case ClassifierKind::random_forest:
      model.impl_ = std::make_shared<RandomForestClassifier>(
          Xc, yc, cfg.params.forest_trees, cfg.balance, cfg.seed);
      break;
    case ClassifierKind::adaboost:
      model.impl_ = std::make_shared<AdaBoostClassifier>(
          Xc, yc, cfg.params.adaboost_rounds);
      break;
    case ClassifierKind::mlp:
      model.impl_ = std::make_shared<MlpClassifier>(
          Xc, yc, cfg.params.mlp_hidden, cfg.params.mlp_epochs,
          cfg.params.mlp_batch, cfg.params.mlp_learning_rate, cfg.seed);
      break;
    case ClassifierKind::plugin: {
      const auto it = plugin_registry().find(cfg.params.plugin_name);
      if (it == plugin_registry().end())
        throw config_error("plugin classifier '" + cfg.params.plugin_name +
                           "' is not registered");
      model.impl_ = it->second(Xc, yc, cfg.seed);
      break;
    }
  }
  return model;
}

std::vector<double> TrainedModel::predict_proba(const Matrix& X) const {
  if (!impl_) throw config_error("model is not fitted");
  std::vector<double> out;
  out.reserve(X.size());
  for (const auto& x : X) {
    if (x.size() != feature_dim_)
      throw input_error("predict: expected dimension " +
                        std::to_string(feature_dim_) + ", got " +
                        std::to_string(x.size()));
    out.push_back(impl_->predict_one(scaler_.transform(x)));
  }
  return out;
}

std::vector<bool> TrainedModel::predict(const Matrix& X,
                                        double threshold) const {
  std::vector<bool> out;
  for (const double p : predict_proba(X)) out.push_back(p >= threshold);
  return out;
}

json TrainedModel::to_json() const {
  if (!impl_) throw config_error("model is not fitted");
  json scaler = {{"kind", scaler_kind_name(scaler_.kind)},
                 {"offset", scaler_.offset},
                 {"scale", scaler_.scale}};
  return json{{"schema", "hexstation-model/1"},
              {"kind", classifier_kind_name(kind_)},
              {"feature_dim", feature_dim_},
              {"scaler", scaler},
              {"classifier", impl_->to_json()}};
}

TrainedModel TrainedModel::from_json(const json& j) {
  if (j.value("schema", "") != "hexstation-model/1")
    throw parse_error("unsupported model schema");
  TrainedModel m;
  m.kind_ = classifier_kind_from_name(j.at("kind").get<std::string>());
  m.feature_dim_ = j.at("feature_dim").get<std::size_t>();
  const auto& sc = j.at("scaler");
  m.scaler_.kind = scaler_kind_from_name(sc.at("kind").get<std::string>());
  m.scaler_.offset = sc.at("offset").get<std::vector<double>>();
  m.scaler_.scale = sc.at("scale").get<std::vector<double>>();
  const auto& cls = j.at("classifier");
  const std::string type = cls.at("type").get<std::string>();
  if (type == "knn")
    m.impl_ = KnnClassifier::from_json(cls);
  else if (type == "random_forest")
    m.impl_ = RandomForestClassifier::from_json(cls);
  else if (type == "adaboost")
    m.impl_ = AdaBoostClassifier::from_json(cls);
  else if (type == "mlp")
    m.impl_ = MlpClassifier::from_json(cls);
  else
    throw parse_error("unknown classifier type in model file: " + type);
  return m;
}

std::vector<double> predict_proba(const TrainedModel& m, const Matrix& X) {
  return m.predict_proba(X);
}

}  // namespace hexstation::learning
