#include "stylo/tree.hpp"

#include <algorithm>
#include <numeric>

namespace stylo {

namespace {

constexpr double kMinDecrease = 1e-12;

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double decrease = 0.0;
};

class Builder {
 public:
  Builder(const Matrix& x, const Labels& y, const TreeOptions& options, Rng* rng)
      : x_(x), y_(y), options_(options), rng_(rng) {}

  std::vector<TreeNode> build(std::vector<std::size_t> rows) {
    grow(std::move(rows), 0);
    return std::move(nodes_);
  }

 private:
  int grow(std::vector<std::size_t> rows, int depth) {
    TreeNode node;
    for (std::size_t r : rows) (y_[r] == Author::ChatGpt ? node.n_chatgpt : node.n_human) += 1;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(node);

    const bool pure = node.n_chatgpt == 0 || node.n_human == 0;
    const bool depth_capped = options_.max_depth && depth >= *options_.max_depth;
    if (pure || depth_capped || static_cast<int>(rows.size()) < options_.min_samples_split) return id;

    const SplitChoice best = find_split(rows, node);
    if (best.feature < 0) return id;

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t r : rows) {
      (x_(r, static_cast<std::size_t>(best.feature)) <= best.threshold ? left : right).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();
    nodes_[id].feature = best.feature;
    nodes_[id].threshold = best.threshold;
    const int l = grow(std::move(left), depth + 1);
    nodes_[id].left = l;
    const int r = grow(std::move(right), depth + 1);
    nodes_[id].right = r;
    return id;
  }

  std::vector<std::size_t> candidate_features() {
    const std::size_t width = x_.cols();
    std::vector<std::size_t> all(width);
    std::iota(all.begin(), all.end(), 0);
    if (options_.max_features == 0 || options_.max_features >= width || rng_ == nullptr) return all;
    // partial Fisher-Yates: the first max_features slots form the subset
    for (std::size_t i = 0; i < options_.max_features; ++i) {
      const std::size_t j = i + rng_->uniform_index(width - i);
      std::swap(all[i], all[j]);
    }
    all.resize(options_.max_features);
    std::sort(all.begin(), all.end());
    return all;
  }

  SplitChoice find_split(const std::vector<std::size_t>& rows, const TreeNode& node) {
    const double n = static_cast<double>(rows.size());
    const double parent = node.impurity();
    SplitChoice best;
    std::vector<std::pair<double, bool>> column(rows.size());
    for (std::size_t f : candidate_features()) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        column[i] = {x_(rows[i], f), y_[rows[i]] == Author::ChatGpt};
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::int64_t left_c = 0;
      std::int64_t left_h = 0;
      for (std::size_t i = 0; i + 1 < column.size(); ++i) {
        (column[i].second ? left_c : left_h) += 1;
        const double lo = column[i].first;
        const double hi = column[i + 1].first;
        if (!(lo < hi)) continue;
        const std::int64_t right_c = node.n_chatgpt - left_c;
        const std::int64_t right_h = node.n_human - left_h;
        const double nl = static_cast<double>(left_c + left_h);
        const double nr = static_cast<double>(right_c + right_h);
        const double decrease =
            parent - (nl / n) * gini(left_c, left_h) - (nr / n) * gini(right_c, right_h);
        if (decrease > best.decrease + kMinDecrease || (best.feature < 0 && decrease > kMinDecrease)) {
          double mid = lo + (hi - lo) / 2.0;
          if (!(mid < hi)) mid = lo;
          best = {static_cast<int>(f), mid, decrease};
        }
      }
    }
    return best;
  }

  const Matrix& x_;
  const Labels& y_;
  const TreeOptions& options_;
  Rng* rng_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

double gini(std::int64_t n_chatgpt, std::int64_t n_human) {
  const double n = static_cast<double>(n_chatgpt + n_human);
  if (n == 0.0) return 0.0;
  const double p = static_cast<double>(n_chatgpt) / n;
  const double q = static_cast<double>(n_human) / n;
  return 1.0 - p * p - q * q;
}

DecisionTree DecisionTree::fit(const Matrix& x, const Labels& y, std::span<const std::size_t> rows,
                               const TreeOptions& options, Rng* rng) {
  Builder builder(x, y, options, rng);
  return DecisionTree(builder.build(std::vector<std::size_t>(rows.begin(), rows.end())));
}

const TreeNode& DecisionTree::leaf_for(std::span<const double> row) const {
  std::size_t at = 0;
  while (!nodes_[at].is_leaf()) {
    const TreeNode& n = nodes_[at];
    at = static_cast<std::size_t>(row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
  }
  return nodes_[at];
}

Author DecisionTree::predict(std::span<const double> row) const {
  const TreeNode& leaf = leaf_for(row);
  return leaf.n_chatgpt >= leaf.n_human ? Author::ChatGpt : Author::Human;
}

double DecisionTree::score(std::span<const double> row) const {
  const TreeNode& leaf = leaf_for(row);
  const auto n = leaf.n_samples();
  return n == 0 ? 0.5 : static_cast<double>(leaf.n_chatgpt) / static_cast<double>(n);
}

std::size_t DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::size_t deepest = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack = {{0, 0}};
  while (!stack.empty()) {
    const auto [at, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    const TreeNode& n = nodes_[at];
    if (!n.is_leaf()) {
      stack.emplace_back(static_cast<std::size_t>(n.left), d + 1);
      stack.emplace_back(static_cast<std::size_t>(n.right), d + 1);
    }
  }
  return deepest;
}

std::vector<double> DecisionTree::impurity_decrease(std::size_t n_features) const {
  std::vector<double> out(n_features, 0.0);
  if (nodes_.empty()) return out;
  const double total = static_cast<double>(nodes_[0].n_samples());
  for (const TreeNode& n : nodes_) {
    if (n.is_leaf()) continue;
    const TreeNode& l = nodes_[static_cast<std::size_t>(n.left)];
    const TreeNode& r = nodes_[static_cast<std::size_t>(n.right)];
    const double size = static_cast<double>(n.n_samples());
    const double decrease = n.impurity() - (static_cast<double>(l.n_samples()) / size) * l.impurity() -
                            (static_cast<double>(r.n_samples()) / size) * r.impurity();
    out[static_cast<std::size_t>(n.feature)] += (size / total) * decrease;
  }
  return out;
}

}  // namespace stylo
