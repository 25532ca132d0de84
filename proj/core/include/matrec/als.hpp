#pragma once

#include <cstdint>
#include <functional>

#include "matrec/data.hpp"
#include "matrec/matrix.hpp"

namespace matrec {

struct AlsOptions {
    int rank = 10;
    int iterations = 10;
    double reg = 0.1;
    uint64_t seed = 42;
    // Invoked after every half-iteration (user solve or item solve) with the
    // regularized squared-error objective at that point.
    std::function<void(int half_iteration, double objective)> on_half_iteration;
};

struct AlsModel {
    RowMatrix user_factors;  // n x rank
    RowMatrix item_factors;  // m x rank
    int rank = 0;
    double reg = 0.0;
};

// Alternating exact ridge solves on observed entries only. Item factors start
// at Uniform[0,1]/sqrt(rank) from the seed; user factors start at zero and
// are solved first. Throws NumericalError naming the offending row when a
// normal matrix is singular (possible with reg = 0).
AlsModel train_als(const RatingDataset& train, const AlsOptions& options);

// Inner product of factor rows clamped to [0,1]. Out-of-range indices throw
// ColdStartError.
double predict_als(const AlsModel& model, size_t user_index, size_t item_index);

// sum over observed entries of (R - p.q)^2 plus reg * (|P|^2 + |Q|^2); the
// quantity each half-iteration decreases.
double als_objective(const AlsModel& model, const RatingDataset& train);

}  // namespace matrec
