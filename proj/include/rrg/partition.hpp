#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrg {

/* A part value occurs three or more times where at most two are allowed. */
class MultiplicityTooHigh : public std::runtime_error {
public:
    explicit MultiplicityTooHigh(int value);
    int value() const noexcept { return value_; }

private:
    int value_;
};

/* A value appears both as a pair and as a singleton in a PairSingletonForm. */
class OverlapError : public std::runtime_error {
public:
    explicit OverlapError(int value);
    int value() const noexcept { return value_; }

private:
    int value_;
};

/* An integer partition: weakly decreasing positive parts. Instances are
 * immutable values; every operation that changes a partition returns a new
 * one. The canonical text form is comma-separated parts, e.g.
 * "14,14,11,10,7,7,5,5,2,1"; the empty string denotes the empty partition. */
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);

    std::span<const int> parts() const noexcept { return parts_; }
    std::int64_t weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    std::int64_t weight_ = 0;
};

/* A multiplicity split of a partition whose parts appear at most twice:
 * values occurring exactly twice (pairs) and exactly once (singletons),
 * each strictly decreasing and disjoint from the other. */
struct PairSingletonForm {
    std::vector<int> pairs;
    std::vector<int> singletons;

    int pair_count() const noexcept { return static_cast<int>(pairs.size()); }
    int singleton_count() const noexcept { return static_cast<int>(singletons.size()); }

    friend bool operator==(const PairSingletonForm&, const PairSingletonForm&) = default;
};

/* Difference condition: parts[i] >= parts[i+k-1] + 2 for every window, and
 * at most a-1 parts equal to 1. Throws std::invalid_argument unless k >= 2
 * and 1 <= a <= k. The empty partition always satisfies it. */
bool check_difference(std::span<const int> parts, int k, int a);
bool check_difference(const Partition& p, int k, int a);

/* Modulus condition: no part congruent to 0, a or -a mod 2k+1. */
bool check_modulus(std::span<const int> parts, int k, int a);
bool check_modulus(const Partition& p, int k, int a);

/* Splits by multiplicity. Throws MultiplicityTooHigh if a value occurs
 * three or more times. */
PairSingletonForm decompose(const Partition& p);

/* Inverse of decompose: each pair value twice, each singleton once, sorted
 * descending. Throws OverlapError on a shared value, std::invalid_argument
 * if either list is not strictly decreasing positive. */
Partition recompose(const PairSingletonForm& f);

}  // namespace rrg
