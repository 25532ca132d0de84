#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "matrec/als.hpp"
#include "matrec/bpr.hpp"
#include "matrec/data.hpp"
#include "matrec/model.hpp"
#include "matrec/ranking.hpp"

namespace matrec {

// Trained-model bundles: parameters plus whatever is needed to score a raw
// (user_id, item_id) pair and to fall back gracefully.
struct MatRecModel {
    MatRecParams params;
    RankTable ranks;       // supplies both the indices and the (x,y) features
    Hyperparams hyper;
    double train_mean = 0.0;
};

struct AlsTrained {
    AlsModel model;
    EntityIndex users;
    EntityIndex items;
    AlsOptions options;
    double train_mean = 0.0;
};

struct BprTrained {
    BprModel model;
    BprCalibration calibration;
    EntityIndex users;
    EntityIndex items;
    BprOptions options;
    double train_mean = 0.0;
};

using AnyModel = std::variant<MatRecModel, AlsTrained, BprTrained>;

const std::string& model_algo_name(const AnyModel& model);
double model_train_mean(const AnyModel& model);

struct EvalReport {
    std::string algo;
    std::string dataset;
    std::string scale = "normalized";
    double mae = 0.0;
    std::optional<double> mae_original;  // mae * rating_scale when scale != 1
    double rating_scale = 1.0;
    int64_t n_evaluated = 0;
    int64_t n_fallbacks = 0;
    std::string hyper_desc;
    uint64_t seed = 0;
};

// Plain mean of absolute differences; lengths must match and be non-zero.
double mae(std::span<const double> predictions, std::span<const double> truths);

// Scores every test triple with the model, clamped to [0,1]; degenerate or
// cold-start pairs take the training mean and count as fallbacks. Throws
// InvalidStateError when the rank table is missing a test entity (the split
// contract guarantees it never is).
EvalReport evaluate(const AnyModel& model, const RatingDataset& test, const RankTable& ranks,
                    const std::string& dataset_id);

enum class AlgoId { MatRec, Bpr };

const char* algo_name(AlgoId id);

struct SweepPoint {
    double eta = 0.0;
    double mae = 0.0;
    int64_t n_fallbacks = 0;
};

struct SweepCurve {
    std::vector<SweepPoint> points;  // eta strictly increasing
    std::string algo;
    std::string dataset;
    std::string hyper_desc;
    uint64_t seed = 0;

    const SweepPoint& best() const;  // minimum-MAE point
};

struct SweepOptions {
    Hyperparams matrec;   // learning_rate overridden per point
    BprOptions bpr;       // likewise
    int threads = 1;      // points trained concurrently; output order is by eta
};

// One independent train+evaluate per learning rate, identical data and seed
// everywhere else.
SweepCurve sweep_learning_rate(AlgoId algo, const RatingDataset& train, const RatingDataset& test,
                               const RankTable& ranks, std::span<const double> etas,
                               const SweepOptions& options, const std::string& dataset_id);

// CSV emitters (atomic writes, shortest round-trip number formatting).
void write_report_csv(const EvalReport& report, const std::filesystem::path& path);
void write_curve_csv(const SweepCurve& curve, const std::filesystem::path& path);
std::string report_summary_line(const EvalReport& report);

}  // namespace matrec
