#pragma once

// Gradient-boosted regression trees for tabular rows of categorical and
// numeric columns. Squared-error boosting initialized at the target mean;
// each round fits a depth-limited tree to the residuals with exact greedy
// splits over sorted feature values. Categorical columns enter as smoothed
// target encodings, computed out-of-fold during training (leak-resistant)
// and from the full training set at prediction time. Training is
// bit-deterministic for a fixed (data, config) pair.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dwellsim/error.hpp"
#include "dwellsim/features.hpp"
#include "dwellsim/rng.hpp"

namespace dwellsim {

struct GBRTConfig {
    int n_trees = 300;
    int max_depth = 6;
    double learning_rate = 0.1;
    int min_samples_leaf = 20;
    double target_encoding_prior = 10.0;
    int n_folds = 5;
    std::uint64_t seed = 0;

    void validate() const {
        if (n_trees < 1) throw ConfigError("GBRTConfig: n_trees must be >= 1");
        if (max_depth < 1) throw ConfigError("GBRTConfig: max_depth must be >= 1");
        if (!(learning_rate > 0.0) || learning_rate > 1.0) {
            throw ConfigError("GBRTConfig: learning_rate must be in (0, 1]");
        }
        if (min_samples_leaf < 1) throw ConfigError("GBRTConfig: min_samples_leaf must be >= 1");
        if (!(target_encoding_prior > 0.0)) {
            throw ConfigError("GBRTConfig: target_encoding_prior must be positive");
        }
        if (n_folds < 2) throw ConfigError("GBRTConfig: n_folds must be >= 2");
    }

    bool operator==(const GBRTConfig&) const = default;
};

inline nlohmann::json gbrt_config_to_json(const GBRTConfig& c) {
    return nlohmann::json{{"n_trees", c.n_trees},
                          {"max_depth", c.max_depth},
                          {"learning_rate", c.learning_rate},
                          {"min_samples_leaf", c.min_samples_leaf},
                          {"target_encoding_prior", c.target_encoding_prior},
                          {"n_folds", c.n_folds},
                          {"seed", c.seed}};
}

inline GBRTConfig gbrt_config_from_json(const nlohmann::json& j) {
    GBRTConfig c;
    try {
        c.n_trees = j.at("n_trees").get<int>();
        c.max_depth = j.at("max_depth").get<int>();
        c.learning_rate = j.at("learning_rate").get<double>();
        c.min_samples_leaf = j.at("min_samples_leaf").get<int>();
        c.target_encoding_prior = j.at("target_encoding_prior").get<double>();
        c.n_folds = j.at("n_folds").get<int>();
        c.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad GBRT config: ") + e.what());
    }
    c.validate();
    return c;
}

// Per-category mean-target statistics with additive smoothing:
//   encode(c) = (sum_c + prior * global_mean) / (count_c + prior)
// Unseen categories therefore fall back to the global mean exactly.
class TargetEncoder {
  public:
    TargetEncoder() = default;

    static TargetEncoder fit(const std::vector<FeatureVector>& rows,
                             const std::vector<double>& targets, std::size_t n_categorical,
                             double prior) {
        if (rows.size() != targets.size()) {
            throw LengthMismatch("TargetEncoder: rows and targets differ in length");
        }
        if (rows.empty()) {
            throw EmptyTrainingSet("TargetEncoder: no rows");
        }
        if (!(prior > 0.0)) {
            throw ConfigError("TargetEncoder: prior must be positive");
        }
        TargetEncoder enc;
        enc.prior_ = prior;
        double sum = 0.0;
        for (double t : targets) {
            sum += t;
        }
        enc.global_mean_ = sum / static_cast<double>(targets.size());
        enc.columns_.resize(n_categorical);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].cat.size() < n_categorical) {
                throw LengthMismatch("TargetEncoder: row narrower than declared columns");
            }
            for (std::size_t c = 0; c < n_categorical; ++c) {
                Stat& s = enc.columns_[c][rows[i].cat[c]];
                s.sum += targets[i];
                ++s.count;
            }
        }
        return enc;
    }

    double encode(std::size_t col, const std::string& category) const {
        auto [sum, count] = category_stat(col, category);
        return (sum + prior_ * global_mean_) /
               (static_cast<double>(count) + prior_);
    }

    // Raw (sum, count) for one category; zeros when the category was never
    // seen in that column.
    std::pair<double, std::uint64_t> category_stat(std::size_t col,
                                                   const std::string& category) const {
        if (col >= columns_.size()) {
            throw LengthMismatch("TargetEncoder: column out of range");
        }
        auto it = columns_[col].find(category);
        if (it == columns_[col].end()) {
            return {0.0, 0};
        }
        return {it->second.sum, it->second.count};
    }

    double global_mean() const { return global_mean_; }
    double prior() const { return prior_; }
    std::size_t column_count() const { return columns_.size(); }

    nlohmann::json to_json() const {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& col : columns_) {
            nlohmann::json m = nlohmann::json::object();
            for (const auto& [cat, stat] : col) {
                m[cat] = nlohmann::json::array({stat.sum, stat.count});
            }
            cols.push_back(std::move(m));
        }
        return nlohmann::json{
            {"prior", prior_}, {"global_mean", global_mean_}, {"columns", std::move(cols)}};
    }

    static TargetEncoder from_json(const nlohmann::json& j) {
        TargetEncoder enc;
        try {
            enc.prior_ = j.at("prior").get<double>();
            enc.global_mean_ = j.at("global_mean").get<double>();
            for (const auto& col : j.at("columns")) {
                std::map<std::string, Stat> m;
                for (const auto& item : col.items()) {
                    m[item.key()] = Stat{item.value().at(0).get<double>(),
                                         item.value().at(1).get<std::uint64_t>()};
                }
                enc.columns_.push_back(std::move(m));
            }
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("bad encoder payload: ") + e.what());
        }
        return enc;
    }

    bool operator==(const TargetEncoder&) const = default;

  private:
    struct Stat {
        double sum = 0.0;
        std::uint64_t count = 0;
        bool operator==(const Stat&) const = default;
    };

    double prior_ = 1.0;
    double global_mean_ = 0.0;
    std::vector<std::map<std::string, Stat>> columns_;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;     // x[feature] <= threshold goes left
    double value = 0.0;         // leaf output (mean residual)
    std::int32_t left = -1;
    std::int32_t right = -1;

    bool operator==(const TreeNode&) const = default;
};

class RegressionTree {
  public:
    RegressionTree() = default;
    explicit RegressionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

    double predict(const double* row) const {
        std::int32_t id = 0;
        while (nodes_[static_cast<std::size_t>(id)].feature >= 0) {
            const TreeNode& node = nodes_[static_cast<std::size_t>(id)];
            id = row[node.feature] <= node.threshold ? node.left : node.right;
        }
        return nodes_[static_cast<std::size_t>(id)].value;
    }

    const std::vector<TreeNode>& nodes() const { return nodes_; }

    bool operator==(const RegressionTree&) const = default;

  private:
    std::vector<TreeNode> nodes_{TreeNode{}};
};

class GbrtModel {
  public:
    static constexpr int kFormatVersion = 1;

    GbrtModel() = default;

    static GbrtModel fit(const std::vector<FeatureVector>& rows,
                         const std::vector<double>& targets, FeatureSchema schema,
                         const GBRTConfig& config) {
        config.validate();
        const std::size_t n = rows.size();
        if (n == 0) {
            throw EmptyTrainingSet("fit_gbrt: no rows");
        }
        if (targets.size() != n) {
            throw LengthMismatch("fit_gbrt: rows and targets differ in length");
        }
        if (n < 2 * static_cast<std::size_t>(config.n_folds)) {
            throw EmptyTrainingSet("fit_gbrt: need at least 2 * n_folds rows");
        }
        const std::size_t n_cat = schema.categorical.size();
        const std::size_t n_num = schema.numeric.size();
        const std::size_t nf = n_cat + n_num;
        if (nf == 0) {
            throw ConfigError("fit_gbrt: schema has no features");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].cat.size() < n_cat || rows[i].num.size() < n_num) {
                throw LengthMismatch("fit_gbrt: row narrower than the schema");
            }
            if (!std::isfinite(targets[i])) {
                throw DomainError("fit_gbrt: target is not finite");
            }
            for (std::size_t k = 0; k < n_num; ++k) {
                if (!std::isfinite(rows[i].num[k])) {
                    throw DomainError("fit_gbrt: numeric feature is not finite");
                }
            }
        }

        GbrtModel model;
        model.schema_ = std::move(schema);
        model.config_ = config;
        model.encoder_ = TargetEncoder::fit(rows, targets, n_cat, config.target_encoding_prior);
        const double global_mean = model.encoder_.global_mean();

        // Deterministic fold assignment for the out-of-fold encodings.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rng fold_rng(mix_seed(config.seed, 0x464f4c44ULL));
        fold_rng.shuffle(order);
        std::vector<int> fold(n);
        for (std::size_t j = 0; j < n; ++j) {
            fold[order[j]] = static_cast<int>(j % static_cast<std::size_t>(config.n_folds));
        }
        std::vector<std::vector<std::map<std::string, std::pair<double, std::uint64_t>>>>
            fold_stats(static_cast<std::size_t>(config.n_folds),
                       std::vector<std::map<std::string, std::pair<double, std::uint64_t>>>(n_cat));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < n_cat; ++c) {
                auto& s = fold_stats[static_cast<std::size_t>(fold[i])][c][rows[i].cat[c]];
                s.first += targets[i];
                ++s.second;
            }
        }

        // Row-major design matrix; categorical columns hold their
        // out-of-fold encodings (the row's own fold excluded).
        std::vector<double> M(n * nf);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& own = fold_stats[static_cast<std::size_t>(fold[i])];
            for (std::size_t c = 0; c < n_cat; ++c) {
                auto [total_sum, total_count] = model.encoder_.category_stat(c, rows[i].cat[c]);
                double fold_sum = 0.0;
                std::uint64_t fold_count = 0;
                auto it = own[c].find(rows[i].cat[c]);
                if (it != own[c].end()) {
                    fold_sum = it->second.first;
                    fold_count = it->second.second;
                }
                M[i * nf + c] =
                    ((total_sum - fold_sum) + config.target_encoding_prior * global_mean) /
                    (static_cast<double>(total_count - fold_count) + config.target_encoding_prior);
            }
            for (std::size_t k = 0; k < n_num; ++k) {
                M[i * nf + n_cat + k] = rows[i].num[k];
            }
        }

        // One presort per feature, reused by every tree; ties break on the
        // row index so the scan order is fully deterministic.
        std::vector<std::vector<std::uint32_t>> sorted_idx(nf, std::vector<std::uint32_t>(n));
        for (std::size_t f = 0; f < nf; ++f) {
            std::iota(sorted_idx[f].begin(), sorted_idx[f].end(), std::uint32_t{0});
            std::sort(sorted_idx[f].begin(), sorted_idx[f].end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                          double va = M[a * nf + f];
                          double vb = M[b * nf + f];
                          if (va != vb) return va < vb;
                          return a < b;
                      });
        }

        model.base_ = global_mean;
        std::vector<double> residual(n);
        for (std::size_t i = 0; i < n; ++i) {
            residual[i] = targets[i] - model.base_;
        }
        std::vector<std::int32_t> node_of(n);
        model.trees_.reserve(static_cast<std::size_t>(config.n_trees));
        for (int t = 0; t < config.n_trees; ++t) {
            RegressionTree tree = grow_tree(M, nf, sorted_idx, residual, config, node_of);
            double sse = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                residual[i] -= config.learning_rate *
                               tree.nodes()[static_cast<std::size_t>(node_of[i])].value;
                sse += residual[i] * residual[i];
            }
            model.training_sse_.push_back(sse);
            model.trees_.push_back(std::move(tree));
        }
        return model;
    }

    // Raw model output (may be negative). Rows wider than the schema are
    // accepted and the extra trailing entries ignored, so a model trained
    // without the EDI block can score rows that carry one.
    double predict(const FeatureVector& fv) const {
        const std::size_t n_cat = schema_.categorical.size();
        const std::size_t n_num = schema_.numeric.size();
        if (fv.cat.size() < n_cat || fv.num.size() < n_num) {
            throw LengthMismatch("predict: row narrower than the model schema");
        }
        std::vector<double> x(n_cat + n_num);
        for (std::size_t c = 0; c < n_cat; ++c) {
            x[c] = encoder_.encode(c, fv.cat[c]);
        }
        for (std::size_t k = 0; k < n_num; ++k) {
            x[n_cat + k] = fv.num[k];
        }
        double out = base_;
        for (const auto& tree : trees_) {
            out += config_.learning_rate * tree.predict(x.data());
        }
        return out;
    }

    const FeatureSchema& schema() const { return schema_; }
    const GBRTConfig& config() const { return config_; }
    const TargetEncoder& encoder() const { return encoder_; }
    double base_prediction() const { return base_; }
    std::size_t tree_count() const { return trees_.size(); }

    // Training-set squared error after each boosting round.
    const std::vector<double>& training_sse() const { return training_sse_; }

    nlohmann::json to_json() const {
        nlohmann::json trees = nlohmann::json::array();
        for (const auto& tree : trees_) {
            nlohmann::json nodes = nlohmann::json::array();
            for (const auto& node : tree.nodes()) {
                nodes.push_back(nlohmann::json::array(
                    {node.feature, node.threshold, node.value, node.left, node.right}));
            }
            trees.push_back(std::move(nodes));
        }
        return nlohmann::json{{"format_version", kFormatVersion},
                              {"config", gbrt_config_to_json(config_)},
                              {"schema",
                               {{"categorical", schema_.categorical},
                                {"numeric", schema_.numeric}}},
                              {"base", base_},
                              {"encoder", encoder_.to_json()},
                              {"trees", std::move(trees)},
                              {"training_sse", training_sse_}};
    }

    static GbrtModel from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("format_version")) {
            throw SchemaError("model payload missing format_version");
        }
        if (j.at("format_version") != kFormatVersion) {
            throw SchemaError("unsupported model format_version");
        }
        GbrtModel model;
        try {
            model.config_ = gbrt_config_from_json(j.at("config"));
            model.schema_.categorical =
                j.at("schema").at("categorical").get<std::vector<std::string>>();
            model.schema_.numeric = j.at("schema").at("numeric").get<std::vector<std::string>>();
            model.base_ = j.at("base").get<double>();
            model.encoder_ = TargetEncoder::from_json(j.at("encoder"));
            model.training_sse_ = j.at("training_sse").get<std::vector<double>>();
            for (const auto& tree : j.at("trees")) {
                std::vector<TreeNode> nodes;
                nodes.reserve(tree.size());
                for (const auto& node : tree) {
                    nodes.push_back(TreeNode{node.at(0).get<std::int32_t>(),
                                             node.at(1).get<double>(), node.at(2).get<double>(),
                                             node.at(3).get<std::int32_t>(),
                                             node.at(4).get<std::int32_t>()});
                }
                model.trees_.emplace_back(std::move(nodes));
            }
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("bad model payload: ") + e.what());
        }
        model.validate_trees();
        return model;
    }

    bool operator==(const GbrtModel&) const = default;

  private:
    void validate_trees() const {
        for (const auto& tree : trees_) {
            const auto& nodes = tree.nodes();
            if (nodes.empty()) {
                throw SchemaError("model tree has no nodes");
            }
            auto count = static_cast<std::int32_t>(nodes.size());
            for (const auto& node : nodes) {
                bool leaf = node.feature < 0;
                bool has_children = node.left >= 0 || node.right >= 0;
                if (leaf && has_children) {
                    throw SchemaError("model leaf node has children");
                }
                if (!leaf && (node.left < 0 || node.left >= count || node.right < 0 ||
                              node.right >= count)) {
                    throw SchemaError("model split node with bad child index");
                }
                if (!leaf && node.feature >= static_cast<std::int32_t>(
                                                 schema_.categorical.size() +
                                                 schema_.numeric.size())) {
                    throw SchemaError("model split on a feature outside the schema");
                }
            }
        }
    }

    static RegressionTree grow_tree(const std::vector<double>& M, std::size_t nf,
                                    const std::vector<std::vector<std::uint32_t>>& sorted_idx,
                                    const std::vector<double>& residual, const GBRTConfig& config,
                                    std::vector<std::int32_t>& node_of) {
        const std::size_t n = residual.size();
        // Ignore float dust when deciding whether a split reduces error at
        // all; real gains on hour-scale targets are many orders larger.
        const double kMinGain = 1e-12;

        std::vector<TreeNode> nodes(1);
        struct NodeStat {
            double sum = 0.0;
            std::int64_t count = 0;
            int depth = 0;
        };
        std::vector<NodeStat> stat(1);
        for (double r : residual) {
            stat[0].sum += r;
        }
        stat[0].count = static_cast<std::int64_t>(n);
        std::fill(node_of.begin(), node_of.end(), 0);

        std::vector<std::int32_t> level{0};
        while (!level.empty()) {
            std::vector<std::int32_t> candidates;
            for (std::int32_t nid : level) {
                auto id = static_cast<std::size_t>(nid);
                if (stat[id].depth < config.max_depth &&
                    stat[id].count >= 2 * static_cast<std::int64_t>(config.min_samples_leaf)) {
                    candidates.push_back(nid);
                } else {
                    nodes[id].value = stat[id].sum / static_cast<double>(stat[id].count);
                }
            }
            if (candidates.empty()) {
                break;
            }
            std::vector<char> is_candidate(nodes.size(), 0);
            for (std::int32_t nid : candidates) {
                is_candidate[static_cast<std::size_t>(nid)] = 1;
            }
            std::vector<double> best_gain(nodes.size(), kMinGain);
            std::vector<std::int32_t> best_feature(nodes.size(), -1);
            std::vector<double> best_threshold(nodes.size(), 0.0);
            std::vector<double> best_left_sum(nodes.size(), 0.0);
            std::vector<std::int64_t> best_left_count(nodes.size(), 0);

            for (std::size_t f = 0; f < nf; ++f) {
                std::vector<double> left_sum(nodes.size(), 0.0);
                std::vector<std::int64_t> left_count(nodes.size(), 0);
                std::vector<double> prev_value(nodes.size(), 0.0);
                std::vector<char> seen(nodes.size(), 0);
                for (std::uint32_t i : sorted_idx[f]) {
                    auto nid = static_cast<std::size_t>(node_of[i]);
                    if (!is_candidate[nid]) {
                        continue;
                    }
                    double v = M[i * nf + f];
                    if (seen[nid] && v > prev_value[nid] &&
                        left_count[nid] >= config.min_samples_leaf &&
                        stat[nid].count - left_count[nid] >= config.min_samples_leaf) {
                        double ls = left_sum[nid];
                        double lc = static_cast<double>(left_count[nid]);
                        double rs = stat[nid].sum - ls;
                        double rc = static_cast<double>(stat[nid].count - left_count[nid]);
                        double ts = stat[nid].sum;
                        double gain = ls * ls / lc + rs * rs / rc -
                                      ts * ts / static_cast<double>(stat[nid].count);
                        if (gain > best_gain[nid]) {
                            best_gain[nid] = gain;
                            best_feature[nid] = static_cast<std::int32_t>(f);
                            best_threshold[nid] = prev_value[nid];
                            best_left_sum[nid] = ls;
                            best_left_count[nid] = left_count[nid];
                        }
                    }
                    left_sum[nid] += residual[i];
                    ++left_count[nid];
                    prev_value[nid] = v;
                    seen[nid] = 1;
                }
            }

            std::vector<std::int32_t> next_level;
            for (std::int32_t nid : candidates) {
                auto id = static_cast<std::size_t>(nid);
                if (best_feature[id] < 0) {
                    nodes[id].value = stat[id].sum / static_cast<double>(stat[id].count);
                    continue;
                }
                double parent_sum = stat[id].sum;
                std::int64_t parent_count = stat[id].count;
                int child_depth = stat[id].depth + 1;
                auto left_id = static_cast<std::int32_t>(nodes.size());
                nodes.emplace_back();
                stat.push_back(NodeStat{best_left_sum[id], best_left_count[id], child_depth});
                auto right_id = static_cast<std::int32_t>(nodes.size());
                nodes.emplace_back();
                stat.push_back(NodeStat{parent_sum - best_left_sum[id],
                                        parent_count - best_left_count[id], child_depth});
                nodes[id].feature = best_feature[id];
                nodes[id].threshold = best_threshold[id];
                nodes[id].left = left_id;
                nodes[id].right = right_id;
                next_level.push_back(left_id);
                next_level.push_back(right_id);
            }
            for (std::size_t i = 0; i < n; ++i) {
                auto nid = static_cast<std::size_t>(node_of[i]);
                if (nodes[nid].left >= 0) {
                    auto f = static_cast<std::size_t>(nodes[nid].feature);
                    node_of[i] = M[i * nf + f] <= nodes[nid].threshold ? nodes[nid].left
                                                                      : nodes[nid].right;
                }
            }
            level = std::move(next_level);
        }
        return RegressionTree(std::move(nodes));
    }

    FeatureSchema schema_;
    GBRTConfig config_;
    TargetEncoder encoder_;
    double base_ = 0.0;
    std::vector<RegressionTree> trees_;
    std::vector<double> training_sse_;
};

}  // namespace dwellsim
