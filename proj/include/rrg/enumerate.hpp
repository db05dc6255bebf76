#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrg/partition.hpp"

namespace rrg {

enum class Side { difference, modulus };

const char* side_name(Side s) noexcept;

/* Two difference-valid partitions of the same minimal weight share a shape
 * that was expected to have a unique minimum. */
class NotUnique : public std::runtime_error {
public:
    NotUnique(std::int64_t weight, std::string first, std::string second);
    std::int64_t weight() const noexcept { return weight_; }

private:
    std::int64_t weight_;
};

namespace detail {

template <typename Visit>
void partitions_rec(int remaining, int max_part, std::vector<int>& acc, Visit& visit) {
    if (remaining == 0) {
        visit(std::span<const int>(acc));
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, visit);
        acc.pop_back();
    }
}

template <typename Visit>
void partitions_distinct_rec(int remaining, int max_part, std::vector<int>& acc, Visit& visit) {
    if (remaining == 0) {
        visit(std::span<const int>(acc));
        return;
    }
    for (int part = std::min(max_part, remaining); part >= 1; --part) {
        acc.push_back(part);
        partitions_distinct_rec(remaining - part, part - 1, acc, visit);
        acc.pop_back();
    }
}

template <typename Visit>
void partitions_odd_rec(int remaining, int max_part, std::vector<int>& acc, Visit& visit) {
    if (remaining == 0) {
        visit(std::span<const int>(acc));
        return;
    }
    int part = std::min(max_part, remaining);
    if (part % 2 == 0) --part;
    for (; part >= 1; part -= 2) {
        acc.push_back(part);
        partitions_odd_rec(remaining - part, part, acc, visit);
        acc.pop_back();
    }
}

}  // namespace detail

/* Visits every partition of n exactly once, parts weakly decreasing,
 * partitions in lexicographically decreasing order: n=4 gives
 * 4; 3,1; 2,2; 2,1,1; 1,1,1,1. n=0 visits the empty partition once. */
template <typename Visit>
void for_each_partition(int n, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<int> acc;
    acc.reserve(static_cast<std::size_t>(std::max(n, 1)));
    detail::partitions_rec(n, n, acc, visit);
}

template <typename Visit>
void for_each_partition_distinct(int n, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<int> acc;
    acc.reserve(static_cast<std::size_t>(std::max(n, 1)));
    detail::partitions_distinct_rec(n, n, acc, visit);
}

template <typename Visit>
void for_each_partition_odd(int n, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
    std::vector<int> acc;
    acc.reserve(static_cast<std::size_t>(std::max(n, 1)));
    detail::partitions_odd_rec(n, n, acc, visit);
}

std::uint64_t count_partitions(int n);
std::uint64_t count_partitions_distinct(int n);
std::uint64_t count_partitions_odd(int n);

/* Exact counts for one side of a Rogers-Ramanujan-Gordon identity, indexed
 * by weight n and number of parts m. Built by plain enumeration; this is
 * the deliberately dumb oracle the series code is checked against. */
struct CountTable {
    int k = 0;
    int a = 0;
    Side side = Side::difference;
    int max_weight = 0;
    std::vector<std::vector<std::uint64_t>> rows;  // rows[n][m], 0 <= m <= n

    std::uint64_t at(int n, int m) const;
    std::uint64_t total(int n) const;

    // header "n m count", nonzero entries sorted by (n, m)
    std::string to_tsv() const;
    // header "n count", one row per weight 0..max_weight
    std::string totals_tsv() const;
};

/* Counts partitions of every weight <= max_weight passing the side's
 * condition. threads = 0 uses the hardware parallelism; results are
 * independent of the thread count (weights are independent shards). */
CountTable count_table(int k, int a, Side side, int max_weight, int threads = 0);

/* Closed form for the smallest weight of a difference-valid (k=3, a)
 * partition with the given numbers of pairs and singletons. */
std::int64_t minimal_shape_weight(int a, int m_pairs, int n_singletons);

struct MinimalShapeResult {
    Partition partition;
    std::int64_t weight = 0;
};

/* Exhaustively searches difference-valid (k=3, a) partitions with exactly
 * m_pairs pairs and n_singletons singletons, weight bounded by the closed
 * form above, and returns the unique minimum-weight one. Throws NotUnique
 * if the minimum is attained twice, std::logic_error if the bound admits
 * no candidate at all. Independent of the base-partition construction, so
 * the two can be compared as separate routes to the same value. */
MinimalShapeResult minimal_with_shape(int a, int m_pairs, int n_singletons);

}  // namespace rrg
