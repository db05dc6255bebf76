#include <doctest.h>

#include <vector>

#include "rrg/bijection.hpp"
#include "rrg/enumerate.hpp"

using namespace rrg;

TEST_CASE("base partitions for all three residues") {
    CHECK(base_partition(3, 3, 4) == Partition({10, 9, 8, 7, 5, 5, 3, 3, 1, 1}));
    CHECK(base_partition(2, 2, 4) == Partition({8, 8, 6, 6, 4, 3, 2, 1}));
    CHECK(base_partition(1, 2, 2) == Partition({7, 6, 4, 4, 2, 2}));
    CHECK(base_partition(1, 1, 2) == Partition({5, 4, 2, 2}));
    CHECK(base_partition(3, 0, 2) == Partition({2, 1}));
    CHECK(base_partition(1, 0, 1) == Partition({2}));
    CHECK(base_partition(2, 1, 0) == Partition({2, 2}));
    CHECK(base_partition(3, 2, 0) == Partition({3, 3, 1, 1}));
    for (int a = 1; a <= 3; ++a) CHECK(base_partition(a, 0, 0) == Partition(std::vector<int>{}));
    CHECK_THROWS_AS(base_partition(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(base_partition(2, -1, 0), std::invalid_argument);
}

TEST_CASE("base partitions satisfy the difference condition and the weight formula") {
    for (int a = 1; a <= 3; ++a)
        for (int m = 0; m <= 7; ++m)
            for (int n = 0; n <= 7; ++n) {
                const Partition base = base_partition(a, m, n);
                CHECK(check_difference(base, 3, a));
                CHECK(base.weight() == minimal_shape_weight(a, m, n));
                const PairSingletonForm f = decompose(base);
                CHECK(f.pair_count() == m);
                CHECK(f.singleton_count() == n);
            }
}

TEST_CASE("simple pair moves") {
    CHECK(forward_pair_move(Partition({4, 2, 2}), 3, 2) == Partition({4, 4, 2}));
    CHECK(backward_pair_move(Partition({5, 5, 2}), 3, 5) == Partition({4, 4, 2}));
    CHECK(forward_pair_move(Partition({4, 4, 2}), 3, 4) == Partition({5, 5, 2}));
}

TEST_CASE("blocked pair moves jump the singleton run") {
    /* run of one singleton */
    CHECK(backward_pair_move(Partition({4, 4, 2}), 3, 4) == Partition({4, 2, 2}));
    /* the longer run from the worked session */
    CHECK(forward_pair_move(Partition({13, 12, 10, 10, 6, 5, 3, 3, 1, 1}), 3, 10) ==
          Partition({13, 13, 11, 10, 6, 5, 3, 3, 1, 1}));
    CHECK(backward_pair_move(Partition({13, 13, 11, 10, 6, 5, 3, 3, 1, 1}), 3, 13) ==
          Partition({13, 12, 10, 10, 6, 5, 3, 3, 1, 1}));
}

TEST_CASE("pair moves for a=2 never rewrite") {
    /* [4,4,2,1] is valid for a=2; pair 4 backward would need the rewrite */
    CHECK_THROWS_AS((void)backward_pair_move(Partition({4, 4, 2, 1}), 2, 4),
                    MoveInapplicable);
    CHECK(forward_pair_move(Partition({4, 4, 2, 1}), 2, 4) == Partition({5, 5, 2, 1}));
}

TEST_CASE("singleton moves outside a=2 are simple only") {
    CHECK_THROWS_AS((void)forward_singleton_move(Partition({5, 4, 2, 2}), 1, 4),
                    MoveInapplicable);
    CHECK(forward_singleton_move(Partition({5, 4, 2, 2}), 1, 5) == Partition({6, 4, 2, 2}));
    CHECK(backward_singleton_move(Partition({6, 4, 2, 2}), 1, 6) == Partition({5, 4, 2, 2}));
}

TEST_CASE("blocked singleton moves jump the pair ladder when a=2") {
    /* from the worked forward session */
    CHECK(forward_singleton_move(Partition({9, 9, 7, 7, 5, 3, 2, 1}), 2, 5) ==
          Partition({10, 8, 8, 6, 6, 3, 2, 1}));
    CHECK(backward_singleton_move(Partition({10, 8, 8, 6, 6, 3, 2, 1}), 2, 10) ==
          Partition({9, 9, 7, 7, 5, 3, 2, 1}));
    /* one-rung ladder */
    CHECK(forward_singleton_move(Partition({4, 4, 2, 1}), 2, 2) ==
          Partition({5, 3, 3, 1}));
    CHECK(backward_singleton_move(Partition({5, 3, 3, 1}), 2, 5) ==
          Partition({4, 4, 2, 1}));
}

TEST_CASE("further worked single moves") {
    /* simple pair steps inside a fully paired partition */
    CHECK(forward_pair_move(Partition({5, 5, 3, 3, 1, 1}), 3, 5) ==
          Partition({6, 6, 3, 3, 1, 1}));
    CHECK(backward_pair_move(Partition({6, 6, 3, 3, 1, 1}), 3, 6) ==
          Partition({5, 5, 3, 3, 1, 1}));
    /* a=2 simple backward pair step */
    CHECK(backward_pair_move(Partition({9, 9, 7, 7, 4, 3, 2, 1}), 2, 7) ==
          Partition({9, 9, 6, 6, 4, 3, 2, 1}));
    /* first singleton step off the minimal configuration */
    CHECK(forward_singleton_move(base_partition(3, 3, 4), 3, 10) ==
          Partition({11, 9, 8, 7, 5, 5, 3, 3, 1, 1}));
    CHECK(backward_singleton_move(Partition({11, 9, 8, 7, 5, 5, 3, 3, 1, 1}), 3, 11) ==
          base_partition(3, 3, 4));
    /* backward pair rewrite across the singleton run 2,1 */
    CHECK(backward_pair_move(Partition({14, 14, 11, 10, 7, 7, 4, 4, 2, 1}), 3, 4) ==
          Partition({14, 14, 11, 10, 7, 7, 4, 3, 1, 1}));
    CHECK(forward_pair_move(Partition({14, 14, 11, 10, 7, 7, 4, 3, 1, 1}), 3, 1) ==
          Partition({14, 14, 11, 10, 7, 7, 4, 4, 2, 1}));
    /* a=2 backward singleton jump across two pairs */
    CHECK(backward_singleton_move(Partition({17, 13, 8, 6, 6, 4, 4, 1}), 2, 8) ==
          Partition({17, 13, 7, 7, 5, 5, 3, 1}));
    CHECK(forward_singleton_move(Partition({17, 13, 7, 7, 5, 5, 3, 1}), 2, 3) ==
          Partition({17, 13, 8, 6, 6, 4, 4, 1}));
}

TEST_CASE("moves reject values that are not present") {
    CHECK_THROWS_AS((void)forward_pair_move(Partition({4, 4, 2}), 3, 2), MoveInapplicable);
    CHECK_THROWS_AS((void)forward_singleton_move(Partition({4, 4, 2}), 3, 4),
                    MoveInapplicable);
}

TEST_CASE("moves reject invalid input partitions") {
    CHECK_THROWS_AS((void)forward_pair_move(Partition({3, 3, 2}), 3, 3),
                    std::invalid_argument);
    /* [1,1] is a pair, so there is no singleton 1 to move */
    CHECK_THROWS_AS((void)forward_singleton_move(Partition({1, 1}), 3, 1),
                    MoveInapplicable);
}

TEST_CASE("every applicable move is undone by its mirror") {
    /* local inverse property over all valid partitions of small weight */
    for (int a = 1; a <= 3; ++a)
        for (int w = 0; w <= 18; ++w)
            for_each_partition(w, [&](std::span<const int> parts) {
                if (!check_difference(parts, 3, a)) return;
                const Partition p(std::vector<int>(parts.begin(), parts.end()));
                const PairSingletonForm f = decompose(p);
                for (int v : f.pairs) {
                    try {
                        const Partition q = forward_pair_move(p, a, v);
                        const PairSingletonForm g = decompose(q);
                        REQUIRE(g.pair_count() == f.pair_count());
                        CHECK(q.weight() == p.weight() + 2);
                        /* the moved pair keeps its rank among the pairs */
                        const auto rank =
                            std::find(f.pairs.begin(), f.pairs.end(), v) - f.pairs.begin();
                        CHECK(backward_pair_move(q, a, g.pairs[rank]) == p);
                    } catch (const MoveInapplicable&) {
                    }
                    try {
                        const Partition q = backward_pair_move(p, a, v);
                        const PairSingletonForm g = decompose(q);
                        REQUIRE(g.pair_count() == f.pair_count());
                        CHECK(q.weight() == p.weight() - 2);
                        const auto rank =
                            std::find(f.pairs.begin(), f.pairs.end(), v) - f.pairs.begin();
                        CHECK(forward_pair_move(q, a, g.pairs[rank]) == p);
                    } catch (const MoveInapplicable&) {
                    }
                }
                for (int v : f.singletons) {
                    try {
                        const Partition q = forward_singleton_move(p, a, v);
                        const PairSingletonForm g = decompose(q);
                        REQUIRE(g.singleton_count() == f.singleton_count());
                        CHECK(q.weight() == p.weight() + 1);
                        const auto rank =
                            std::find(f.singletons.begin(), f.singletons.end(), v) -
                            f.singletons.begin();
                        CHECK(backward_singleton_move(q, a, g.singletons[rank]) == p);
                    } catch (const MoveInapplicable&) {
                    }
                    try {
                        const Partition q = backward_singleton_move(p, a, v);
                        const PairSingletonForm g = decompose(q);
                        REQUIRE(g.singleton_count() == f.singleton_count());
                        CHECK(q.weight() == p.weight() - 1);
                        const auto rank =
                            std::find(f.singletons.begin(), f.singletons.end(), v) -
                            f.singletons.begin();
                        CHECK(forward_singleton_move(q, a, g.singletons[rank]) == p);
                    } catch (const MoveInapplicable&) {
                    }
                }
            });
}

TEST_CASE("triple validation") {
    CHECK_NOTHROW(validate_triple(MoveTriple{3, 2, 1, {4, 2}, {3}}));
    CHECK_NOTHROW(validate_triple(MoveTriple{1, 0, 0, {}, {}}));
    CHECK_THROWS_AS(validate_triple(MoveTriple{3, 2, 0, {4}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_triple(MoveTriple{3, 1, 0, {3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_triple(MoveTriple{3, 2, 0, {2, 4}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_triple(MoveTriple{3, 0, 2, {}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_triple(MoveTriple{3, 0, 1, {}, {-1}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_triple(MoveTriple{0, 0, 0, {}, {}}), std::invalid_argument);
}

TEST_CASE("worked session: pulling back to the base") {
    const Partition lambda({14, 14, 11, 10, 7, 7, 5, 5, 2, 1});
    const TripleResult r = to_triple(3, lambda);
    CHECK(r.triple.a == 3);
    CHECK(r.triple.pair_count == 3);
    CHECK(r.triple.singleton_count == 4);
    CHECK(r.triple.mu == std::vector<int>({10, 4, 4}));
    CHECK(r.triple.nu == std::vector<int>({3, 3, 0, 0}));
    CHECK(r.trace.size() == 15);
    CHECK(r.trace.back().after == base_partition(3, 3, 4));
    /* weight ledger */
    CHECK(lambda.weight() == base_partition(3, 3, 4).weight() + 10 + 4 + 4 + 3 + 3);
}

TEST_CASE("worked session: pushing out of the base") {
    const MoveTriple t{2, 2, 4, {2, 2}, {9, 6, 3, 0}};
    const PartitionResult r = from_triple(t);
    CHECK(r.partition == Partition({17, 13, 9, 6, 6, 4, 4, 1}));
    CHECK(r.trace.size() == 20);
    CHECK(r.trace.front().after == Partition({9, 9, 6, 6, 4, 3, 2, 1}));
}

TEST_CASE("the two worked sessions invert each other") {
    const TripleResult pulled = to_triple(2, Partition({17, 13, 9, 6, 6, 4, 4, 1}));
    CHECK(pulled.triple.mu == std::vector<int>({2, 2}));
    CHECK(pulled.triple.nu == std::vector<int>({9, 6, 3, 0}));
    const PartitionResult pushed =
        from_triple(MoveTriple{3, 3, 4, {10, 4, 4}, {3, 3, 0, 0}});
    CHECK(pushed.partition == Partition({14, 14, 11, 10, 7, 7, 5, 5, 2, 1}));
}

TEST_CASE("empty partition maps to the empty triple") {
    const TripleResult r = to_triple(2, Partition(std::vector<int>{}));
    CHECK(r.triple.pair_count == 0);
    CHECK(r.triple.singleton_count == 0);
    CHECK(r.trace.empty());
    CHECK(from_triple(r.triple).partition == Partition(std::vector<int>{}));
}

TEST_CASE("a base partition maps to the all-zero triple") {
    for (int a = 1; a <= 3; ++a) {
        const TripleResult r = to_triple(a, base_partition(a, 2, 3));
        CHECK(r.triple.mu == std::vector<int>({0, 0}));
        CHECK(r.triple.nu == std::vector<int>({0, 0, 0}));
        CHECK(r.trace.empty());
    }
}

TEST_CASE("roundtrip is the identity on every small valid partition") {
    for (int a = 1; a <= 3; ++a)
        for (int w = 0; w <= 22; ++w)
            for_each_partition(w, [&](std::span<const int> parts) {
                if (!check_difference(parts, 3, a)) return;
                const Partition p(std::vector<int>(parts.begin(), parts.end()));
                const TripleResult pulled = to_triple(a, p);
                std::int64_t moved = 0;
                for (int v : pulled.triple.mu) moved += v;
                for (int v : pulled.triple.nu) moved += v;
                CHECK(p.weight() ==
                      base_partition(a, pulled.triple.pair_count,
                                     pulled.triple.singleton_count)
                              .weight() +
                          moved);
                CHECK(from_triple(pulled.triple).partition == p);
            });
}

TEST_CASE("to_triple rejects invalid inputs") {
    CHECK_THROWS_AS((void)to_triple(3, Partition({3, 3, 3})), std::invalid_argument);
    CHECK_THROWS_AS((void)to_triple(1, Partition({1})), std::invalid_argument);
    CHECK_THROWS_AS((void)to_triple(5, Partition(std::vector<int>{})), std::invalid_argument);
}
