#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matrec/errors.hpp"

namespace matrec {

// One observed interaction. `rating` is the normalized value in [0,1] used by
// the models; `raw_rating` is whatever the source file said (listening count,
// star rating). Loaders leave `rating` at 0 until normalize_ratings runs.
struct RatingTriple {
    int64_t user_id = 0;
    int64_t item_id = 0;
    double rating = 0.0;
    double raw_rating = 0.0;

    bool operator==(const RatingTriple&) const = default;
};

// Contiguous 0..n-1 indices for a set of raw ids, assigned in ascending id
// order so the mapping is independent of file order.
class EntityIndex {
public:
    EntityIndex() = default;
    explicit EntityIndex(std::vector<int64_t> sorted_ids);

    size_t size() const { return ids_.size(); }
    int64_t id_at(size_t index) const { return ids_[index]; }
    const std::vector<int64_t>& ids() const { return ids_; }

    bool contains(int64_t id) const { return index_.contains(id); }
    int index_of(int64_t id) const;  // throws ColdStartError for unknown ids

private:
    std::vector<int64_t> ids_;
    std::unordered_map<int64_t, int> index_;
};

enum class NormScheme { PerUserMax, GlobalMax };

const char* norm_scheme_name(NormScheme s);
NormScheme parse_norm_scheme(const std::string& name);

struct RatingDataset {
    std::vector<RatingTriple> triples;  // sorted by (user_id, item_id), no duplicate pairs
    EntityIndex users;
    EntityIndex items;
    // Divisor used by global-max normalization (e.g. 5.0 for MovieLens);
    // 1.0 when ratings are already on the reporting scale.
    double rating_scale = 1.0;

    size_t n_users() const { return users.size(); }
    size_t n_items() const { return items.size(); }
    double mean_rating() const;
};

// Rebuilds index maps from a triple list (triples get sorted and must not
// contain duplicate pairs).
RatingDataset make_dataset(std::vector<RatingTriple> triples, double rating_scale = 1.0);

// HetRec lastFM user_artists.dat: tab-separated, header
// "userID\tartistID\tweight". Duplicate (user,item) lines keep the max weight.
RatingDataset load_lastfm(const std::filesystem::path& path);

// MovieLens ratings.csv ("userId,movieId,rating,timestamp") or tab-separated
// headerless u.data, auto-detected by delimiter of the first line.
RatingDataset load_movielens(const std::filesystem::path& path);

RatingDataset normalize_ratings(const RatingDataset& dataset, NormScheme scheme);

// Deterministic uniform split into (train, test). Test rows whose user or
// item would otherwise vanish from train are moved back to train, so every
// test entity is covered.
std::pair<RatingDataset, RatingDataset> split(const RatingDataset& dataset,
                                              double test_fraction, uint64_t seed);

// Canonical interchange format: "user,item,rating_normalized,rating_raw" with
// header, written atomically.
void write_canonical(const RatingDataset& dataset, const std::filesystem::path& path);
RatingDataset load_canonical(const std::filesystem::path& path);

}  // namespace matrec
