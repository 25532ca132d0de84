#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "matrec/matrix.hpp"
#include "matrec/ranking.hpp"

namespace matrec {

struct Hyperparams {
    int latent_dim = 20;
    double learning_rate = 3e-4;
    int epochs = 300;
    uint64_t seed = 42;
    double norm_epsilon = 1e-12;

    void validate() const;  // throws std::invalid_argument
};

// Six parameter families, three per side. The user feature for a pair is
//   user_feature = user_base + x * user_coef_x + y * user_coef_y
// and symmetrically for the item side, where x and y are the normalized
// popularity ranks of the pair. Rows are indexed by rank-1 (see RankTable).
class MatRecParams {
public:
    MatRecParams() = default;
    MatRecParams(size_t n_users, size_t n_items, int latent_dim);

    size_t n_users() const { return user_blocks_.rows(); }
    size_t n_items() const { return item_blocks_.rows(); }
    int latent_dim() const { return k_; }

    std::span<const double> user_coef_x(size_t i) const { return user_blocks_.row(i).subspan(0, k_); }
    std::span<const double> user_coef_y(size_t i) const { return user_blocks_.row(i).subspan(k_, k_); }
    std::span<const double> user_base(size_t i) const { return user_blocks_.row(i).subspan(2 * k_, k_); }
    std::span<const double> item_coef_x(size_t j) const { return item_blocks_.row(j).subspan(0, k_); }
    std::span<const double> item_coef_y(size_t j) const { return item_blocks_.row(j).subspan(k_, k_); }
    std::span<const double> item_base(size_t j) const { return item_blocks_.row(j).subspan(2 * k_, k_); }

    std::span<double> user_coef_x(size_t i) { return user_blocks_.row(i).subspan(0, k_); }
    std::span<double> user_coef_y(size_t i) { return user_blocks_.row(i).subspan(k_, k_); }
    std::span<double> user_base(size_t i) { return user_blocks_.row(i).subspan(2 * k_, k_); }
    std::span<double> item_coef_x(size_t j) { return item_blocks_.row(j).subspan(0, k_); }
    std::span<double> item_coef_y(size_t j) { return item_blocks_.row(j).subspan(k_, k_); }
    std::span<double> item_base(size_t j) { return item_blocks_.row(j).subspan(2 * k_, k_); }

    bool all_finite() const;

    bool operator==(const MatRecParams&) const = default;

private:
    RowMatrix user_blocks_;  // n x 3k rows: [coef_x | coef_y | base]
    RowMatrix item_blocks_;  // m x 3k rows: [coef_x | coef_y | base]
    int k_ = 0;
};

// Scratch values for one (user, item) pair, all derived from the same
// parameter snapshot.
struct PairFeatures {
    std::vector<double> user_feature;  // base + x*coef_x + y*coef_y
    std::vector<double> item_feature;
    double user_norm = 0.0;     // ||user_feature||
    double item_norm = 0.0;     // ||item_feature||
    double norm_product = 0.0;  // user_norm * item_norm
    double dot = 0.0;           // user_feature . item_feature
    double residual = 0.0;      // R - dot/norm_product; 0 until a rating is known
    double x = 0.0;
    double y = 0.0;
};

// All component values drawn uniformly from [0.01, 0.1] by a generator seeded
// from hyper.seed; fill order is users (coef_x, coef_y, base per user), then
// items.
MatRecParams init_params(size_t n_users, size_t n_items, const Hyperparams& hyper);

PairFeatures build_features(const MatRecParams& params, size_t user_index, size_t item_index,
                            double x, double y);

// Cosine of the two pair features; in [-1,1] and invariant under positive
// rescaling of either side. Throws DegenerateFeatureError when a norm falls
// below hyper's epsilon.
double predict_pair(const MatRecParams& params, size_t user_index, size_t item_index,
                    const RankTable& ranks, double norm_epsilon = 1e-12);

// (R - cosine)^2 for one observed triple.
double pair_loss(const MatRecParams& params, const RatingTriple& sample, const RankTable& ranks,
                 double norm_epsilon = 1e-12);

// One stochastic step on all six families, using a single feature snapshot
// taken before any family changes. Returns false (and leaves params alone)
// when the pair is degenerate under eps.
bool sgd_step(MatRecParams& params, const RatingTriple& sample, const RankTable& ranks,
              double learning_rate, double norm_epsilon = 1e-12);

struct TrainTrace {
    std::vector<double> epoch_loss;  // total squared residual accumulated over each pass
    uint64_t degenerate_steps = 0;

    bool operator==(const TrainTrace&) const = default;
};

// Full training run: hyper.epochs passes, each visiting every triple once in
// an order shuffled per epoch from (hyper.seed, epoch). Deterministic.
std::pair<MatRecParams, TrainTrace> train(std::span<const RatingTriple> train_set,
                                          const RankTable& ranks, const Hyperparams& hyper);

// Two-column text table: epoch,total_loss. Written atomically.
void write_trace(const TrainTrace& trace, const std::filesystem::path& path);

}  // namespace matrec
