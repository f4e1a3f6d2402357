#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexstation/scaler.hpp"

namespace hexstation::learning {

enum class ClassifierKind { knn, random_forest, adaboost, mlp, plugin };
enum class ClassBalanceMode { normal, balanced, balanced_subsample };

std::string classifier_kind_name(ClassifierKind k);
ClassifierKind classifier_kind_from_name(const std::string& name);
std::string class_balance_name(ClassBalanceMode m);
ClassBalanceMode class_balance_from_name(const std::string& name);

// Hyperparameters. Defaults mirror the documented defaults of the usual
// Python implementations so directional results stay comparable.
struct ClassifierParams {
  int knn_k = 5;
  int forest_trees = 100;
  int adaboost_rounds = 50;
  int mlp_hidden = 20;
  int mlp_epochs = 200;
  int mlp_batch = 32;
  double mlp_learning_rate = 0.01;
  std::string plugin_name;

  nlohmann::json to_json() const;
  static ClassifierParams from_json(const nlohmann::json& j);
};

struct FitConfig {
  ClassifierKind kind = ClassifierKind::random_forest;
  ClassBalanceMode balance = ClassBalanceMode::normal;
  std::uint64_t seed = 0;
  ClassifierParams params;
};

// Internal classifier interface; predict_one returns P(positive).
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual double predict_one(const std::vector<double>& x) const = 0;
  virtual nlohmann::json to_json() const = 0;
};

// A fitted, immutable model. Probability outputs are in [0,1]; the class
// decision is probability >= threshold, 0.5 by default (ties positive).
class TrainedModel {
 public:
  ClassifierKind kind() const { return kind_; }
  std::size_t feature_dim() const { return feature_dim_; }
  const ScalerState& scaler() const { return scaler_; }

  std::vector<double> predict_proba(
      const std::vector<std::vector<double>>& X) const;
  std::vector<bool> predict(const std::vector<std::vector<double>>& X,
                            double threshold = 0.5) const;

  nlohmann::json to_json() const;
  static TrainedModel from_json(const nlohmann::json& j);

 private:
  friend TrainedModel fit_classifier(const std::vector<std::vector<double>>&,
                                     const std::vector<int>&, const FitConfig&,
                                     const ScalerState&);
  ClassifierKind kind_ = ClassifierKind::random_forest;
  std::size_t feature_dim_ = 0;
  ScalerState scaler_;
  std::shared_ptr<const Classifier> impl_;
};

// Fits the requested classifier. y must contain both classes (0 and 1).
// Deterministic for a fixed seed and invariant to row order: the rows are
// canonicalised (lexicographic by features, then label) before any random
// stream is consumed. The scaler state is stored in the model and applied to
// prediction inputs; pass a fitted state (or a none-scaler) from the caller.
TrainedModel fit_classifier(const std::vector<std::vector<double>>& X,
                            const std::vector<int>& y, const FitConfig& cfg,
                            const ScalerState& scaler = {});

std::vector<double> predict_proba(const TrainedModel& m,
                                  const std::vector<std::vector<double>>& X);

// Plugin classifier slot (e.g. an external kernel-SVM). Factories receive the
// canonicalised, scaled training data.
using PluginFactory = std::function<std::shared_ptr<Classifier>(
    const std::vector<std::vector<double>>& X, const std::vector<int>& y,
    std::uint64_t seed)>;

void register_plugin_classifier(const std::string& name, PluginFactory factory);
bool plugin_classifier_registered(const std::string& name);

}  // namespace hexstation::learning
