#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrg/partition.hpp"

namespace rrg {

/* The requested move is not defined on the given partition. */
class MoveInapplicable : public std::runtime_error {
public:
    explicit MoveInapplicable(const std::string& what);
};

enum class MoveKind { pair, singleton };
enum class MoveDirection { forward, backward };

const char* kind_name(MoveKind k) noexcept;
const char* direction_name(MoveDirection d) noexcept;

/* One completed move: the partition after it, plus which value moved. A
 * blocked rewrite counts as a single move, so `from` and `to` may differ
 * by more than the weight change. */
struct MoveStep {
    Partition after;
    MoveDirection direction = MoveDirection::forward;
    MoveKind kind = MoveKind::pair;
    int from = 0;
    int to = 0;

    friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

using MoveTrace = std::vector<MoveStep>;

/* Coordinates of a difference-valid partition relative to its base: mu
 * holds doubled backward-pair-move counts (even, weakly decreasing, one
 * entry per pair, largest pair first), nu holds backward-singleton-move
 * counts (weakly decreasing, largest singleton first). The weight of the
 * encoded partition is the base weight plus the sum of all entries. */
struct MoveTriple {
    int a = 0;
    int pair_count = 0;
    int singleton_count = 0;
    std::vector<int> mu;
    std::vector<int> nu;

    friend bool operator==(const MoveTriple&, const MoveTriple&) = default;
};

// Throws std::invalid_argument unless the invariants above hold.
void validate_triple(const MoveTriple& t);

/* An orchestrated move sequence reached a state the next scheduled move
 * cannot leave. Carries the offending snapshot and the trace so far. */
class StuckError : public std::runtime_error {
public:
    StuckError(const std::string& what, Partition snapshot, MoveTrace trace);
    const Partition& snapshot() const noexcept { return snapshot_; }
    const MoveTrace& trace() const noexcept { return trace_; }

private:
    Partition snapshot_;
    MoveTrace trace_;
};

/* The minimal difference-valid (k=3, a) partition with the given shape:
 *   a=3: pairs 2m-1, 2m-3, ..., 1 and singletons 2m+1, ..., 2m+n
 *   a=1: pairs 2m, 2m-2, ..., 2 and singletons 2m+2, ..., 2m+n+1
 *   a=2: pairs n+2m, n+2m-2, ..., n+2 and singletons n, n-1, ..., 1 */
Partition base_partition(int a, int m_pairs, int n_singletons);

/* Individual moves. Each validates applicability and throws
 * MoveInapplicable rather than repairing anything; choosing which move to
 * make is the orchestrators' job. pair_value / singleton_value name the
 * current value of the part being moved. Weight changes by +-2 for a pair
 * move and +-1 for a singleton move, blocked or not, and the numbers of
 * pairs and singletons never change. */
Partition forward_pair_move(const Partition& p, int a, int pair_value);
Partition backward_pair_move(const Partition& p, int a, int pair_value);
Partition forward_singleton_move(const Partition& p, int a, int singleton_value);
Partition backward_singleton_move(const Partition& p, int a, int singleton_value);

struct TripleResult {
    MoveTriple triple;
    MoveTrace trace;
};

struct PartitionResult {
    Partition partition;
    MoveTrace trace;
};

/* Pulls lambda back to its base partition, recording move counts.
 * Requires check_difference(lambda, 3, a); throws std::invalid_argument
 * otherwise and StuckError if the scheduled pulls cannot complete. */
TripleResult to_triple(int a, const Partition& lambda);

/* Pushes the base partition forward by the prescribed move counts;
 * inverse of to_triple. MoveInapplicable propagates. */
PartitionResult from_triple(const MoveTriple& t);

}  // namespace rrg
