#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <unordered_map>
#include <vector>

#include "matrec/data.hpp"

namespace matrec {

// Popularity ranks for every user and item seen in a set of interactions.
// Popularity of a user is the number of distinct items it touched, and vice
// versa. Rank 1 is the most popular entity; ties break by ascending raw id.
// The normalized forms x = user_rank/n and y = item_rank/m lie in (0,1] and
// are the skew features the factor model consumes.
class RankTable {
public:
    struct Entry {
        int64_t id;
        int64_t count;
    };

    size_t n_users() const { return users_by_rank_.size(); }
    size_t n_items() const { return items_by_rank_.size(); }

    bool has_user(int64_t id) const { return user_rank_.contains(id); }
    bool has_item(int64_t id) const { return item_rank_.contains(id); }

    // 1-based ranks; throw ColdStartError for unknown ids.
    int user_rank(int64_t id) const;
    int item_rank(int64_t id) const;

    double x(int64_t user_id) const {
        return static_cast<double>(user_rank(user_id)) / static_cast<double>(n_users());
    }
    double y(int64_t item_id) const {
        return static_cast<double>(item_rank(item_id)) / static_cast<double>(n_items());
    }

    // Entities listed in rank order (element r is the entity of rank r+1).
    // Rank-1 indexing doubles as the contiguous model index.
    const std::vector<Entry>& users_by_rank() const { return users_by_rank_; }
    const std::vector<Entry>& items_by_rank() const { return items_by_rank_; }

    int user_index(int64_t id) const { return user_rank(id) - 1; }
    int item_index(int64_t id) const { return item_rank(id) - 1; }

    bool operator==(const RankTable&) const;

    friend RankTable compute_ranks(std::span<const RatingTriple> interactions);

private:
    std::vector<Entry> users_by_rank_;
    std::vector<Entry> items_by_rank_;
    std::unordered_map<int64_t, int> user_rank_;
    std::unordered_map<int64_t, int> item_rank_;
};

RankTable compute_ranks(std::span<const RatingTriple> interactions);

// Inspection table: kind,entity_id,count,rank,normalized_rank (users first,
// then items, both in rank order). Written atomically.
void write_rank_table(const RankTable& ranks, const std::filesystem::path& path);

}  // namespace matrec
