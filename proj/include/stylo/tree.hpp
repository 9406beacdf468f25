#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stylo/matrix.hpp"
#include "stylo/random.hpp"

namespace stylo {

/// Gini impurity of a two-class node.
double gini(std::int64_t n_chatgpt, std::int64_t n_human);

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // rows with x[feature] <= threshold go left
  int left = -1;
  int right = -1;
  std::int64_t n_chatgpt = 0;
  std::int64_t n_human = 0;

  bool is_leaf() const noexcept { return feature < 0; }
  std::int64_t n_samples() const noexcept { return n_chatgpt + n_human; }
  double impurity() const { return gini(n_chatgpt, n_human); }

  bool operator==(const TreeNode&) const = default;
};

struct TreeOptions {
  std::optional<int> max_depth;  // nullopt: grow until pure
  int min_samples_split = 2;
  /// Features examined per split; 0 or >= width means all, in index order.
  std::size_t max_features = 0;
};

/// CART classifier with Gini impurity. Candidate thresholds are midpoints of
/// consecutive distinct values; among equal impurity decreases the lowest
/// feature index, then the lowest threshold, wins. Leaves predict the
/// majority class with ties going to CHATGPT.
class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  /// Grows a tree on the given rows of `x` (repeats allowed). `rng` draws the
  /// per-split feature subsets and may be null when every feature is used.
  static DecisionTree fit(const Matrix& x, const Labels& y, std::span<const std::size_t> rows,
                          const TreeOptions& options, Rng* rng);

  const TreeNode& leaf_for(std::span<const double> row) const;
  Author predict(std::span<const double> row) const;
  /// Fraction of CHATGPT training samples in the reached leaf.
  double score(std::span<const double> row) const;

  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  std::size_t depth() const;

  /// Per-feature Gini decrease, each split weighted by the fraction of the
  /// tree's training samples that reach it. Not normalized.
  std::vector<double> impurity_decrease(std::size_t n_features) const;

  bool operator==(const DecisionTree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
};

}  // namespace stylo
