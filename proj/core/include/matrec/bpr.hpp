#pragma once

#include <cstdint>
#include <vector>

#include "matrec/data.hpp"
#include "matrec/matrix.hpp"

namespace matrec {

struct BprOptions {
    int dim = 20;
    int iterations = 20;
    double learning_rate = 0.05;
    double reg = 0.01;
    uint64_t seed = 42;
    int max_negative_tries = 100;
};

struct BprModel {
    RowMatrix user_factors;        // n x dim
    RowMatrix item_factors;        // m x dim
    std::vector<double> item_bias;  // m
    int dim = 0;
    uint64_t skipped_samples = 0;  // draws abandoned because no negative was found
};

// Pairwise implicit-feedback training: every observed pair is a positive;
// each step samples a triple (user, positive, random unobserved negative) and
// ascends the log-sigmoid of the score difference with L2 shrinkage. One
// iteration is |train| sampled steps. Deterministic under the seed.
BprModel train_bpr(const RatingDataset& train, const BprOptions& options);

// Raw ranking score p_u . q_i + bias_i.
double bpr_score(const BprModel& model, size_t user_index, size_t item_index);

// Loss of one sampled triple under the step's objective:
// -ln sigmoid(score_ui - score_uj) + reg/2 * (the touched parameters' norms).
// This is the function whose gradient a single training step follows.
double bpr_triple_loss(const BprModel& model, size_t user_index, size_t pos_index,
                       size_t neg_index, double reg);

// Logistic link rating = sigmoid(alpha * score + beta), least-squares fitted
// on the training ratings so ranking scores become MAE-comparable.
struct BprCalibration {
    double alpha = 0.0;
    double beta = 0.0;
    bool fitted = false;
};

BprCalibration fit_bpr_calibration(const BprModel& model, const RatingDataset& train);

// Throws InvalidStateError when the calibration was never fitted.
double predict_bpr_rating(const BprModel& model, size_t user_index, size_t item_index,
                          const BprCalibration& calibration);

}  // namespace matrec
