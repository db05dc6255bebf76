#include <doctest.h>

#include "rrg/partition.hpp"

using namespace rrg;

TEST_CASE("construction enforces weakly decreasing positive parts") {
    CHECK_NOTHROW(Partition({5, 5, 2, 1}));
    CHECK_NOTHROW(Partition(std::vector<int>{}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("weight, length and text form") {
    const Partition p({7, 7, 4, 1});
    CHECK(p.weight() == 19);
    CHECK(p.length() == 4);
    CHECK(p.str() == "7,7,4,1");
    CHECK(Partition(std::vector<int>{}).str() == "");
    CHECK(Partition(std::vector<int>{}).empty());
    CHECK(Partition(std::vector<int>{}).weight() == 0);
}

TEST_CASE("parse round-trips str and rejects junk") {
    CHECK(Partition::parse("14,14,11,10,7,7,5,5,2,1").str() == "14,14,11,10,7,7,5,5,2,1");
    CHECK(Partition::parse("") == Partition(std::vector<int>{}));
    CHECK(Partition::parse(" 5, 3 ,1 ") == Partition({5, 3, 1}));
    CHECK_THROWS_AS(Partition::parse("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
}

TEST_CASE("difference condition at k=3") {
    /* lambda_i >= lambda_{i+2} + 2 and at most a-1 ones */
    CHECK(check_difference(Partition({14, 14, 11, 10, 7, 7, 5, 5, 2, 1}), 3, 3));
    CHECK(check_difference(Partition(std::vector<int>{}), 3, 1));
    CHECK(check_difference(Partition({5, 5, 2}), 3, 1));
    CHECK_FALSE(check_difference(Partition({3, 3, 3}), 3, 3));   /* triple */
    CHECK_FALSE(check_difference(Partition({4, 3, 3}), 3, 3));   /* gap 1 */
    CHECK_FALSE(check_difference(Partition({1, 1}), 3, 2));      /* two ones, a=2 */
    CHECK(check_difference(Partition({1, 1}), 3, 3));
    CHECK(check_difference(Partition({4, 1, 1}), 3, 3));
    CHECK_FALSE(check_difference(Partition({1}), 3, 1));
    CHECK(check_difference(Partition({1}), 3, 2));
    CHECK_THROWS_AS(check_difference(Partition({1}), 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(check_difference(Partition({1}), 1, 1), std::invalid_argument);
}

TEST_CASE("difference condition at k=2 recovers the classical gap rule") {
    CHECK(check_difference(Partition({6, 4, 2}), 2, 2));
    CHECK_FALSE(check_difference(Partition({6, 5, 2}), 2, 2));
    CHECK_FALSE(check_difference(Partition({3, 3}), 2, 2));
    CHECK(check_difference(Partition({3, 1}), 2, 2));
    CHECK_FALSE(check_difference(Partition({3, 1}), 2, 1));  /* has a one, a=1 */
}

TEST_CASE("modulus condition") {
    /* k=3, a=3: parts not 0, 3, 4 (mod 7) */
    CHECK(check_modulus(Partition({9, 8, 6, 5, 2, 1}), 3, 3));
    CHECK_FALSE(check_modulus(Partition({7}), 3, 3));
    CHECK_FALSE(check_modulus(Partition({3}), 3, 3));
    CHECK_FALSE(check_modulus(Partition({4}), 3, 3));
    CHECK(check_modulus(Partition({4}), 3, 1));
    CHECK_FALSE(check_modulus(Partition({6}), 3, 1));  /* -1 mod 7 */
    /* k=2, a=2: parts = 1, 4 (mod 5) */
    CHECK(check_modulus(Partition({6, 4, 1}), 2, 2));
    CHECK_FALSE(check_modulus(Partition({5}), 2, 2));
    CHECK_FALSE(check_modulus(Partition({3}), 2, 2));
}

TEST_CASE("decompose splits pairs from singletons") {
    const PairSingletonForm f = decompose(Partition({14, 14, 11, 10, 7, 7, 5, 5, 2, 1}));
    CHECK(f.pairs == std::vector<int>({14, 7, 5}));
    CHECK(f.singletons == std::vector<int>({11, 10, 2, 1}));
    CHECK(f.pair_count() == 3);
    CHECK(f.singleton_count() == 4);

    const PairSingletonForm empty = decompose(Partition(std::vector<int>{}));
    CHECK(empty.pairs.empty());
    CHECK(empty.singletons.empty());
}

TEST_CASE("decompose rejects multiplicity three") {
    CHECK_THROWS_AS(decompose(Partition({4, 4, 4, 1})), MultiplicityTooHigh);
    try {
        decompose(Partition({4, 4, 4, 1}));
    } catch (const MultiplicityTooHigh& e) {
        CHECK(e.value() == 4);
    }
}

TEST_CASE("recompose is the inverse of decompose") {
    const Partition p({14, 14, 11, 10, 7, 7, 5, 5, 2, 1});
    CHECK(recompose(decompose(p)) == p);
    CHECK(recompose(PairSingletonForm{}) == Partition(std::vector<int>{}));
}

TEST_CASE("recompose rejects malformed forms") {
    CHECK_THROWS_AS(recompose(PairSingletonForm{{3, 3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(recompose(PairSingletonForm{{3, 5}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(recompose(PairSingletonForm{{}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(recompose(PairSingletonForm{{5}, {5}}), OverlapError);
    try {
        recompose(PairSingletonForm{{5}, {5}});
    } catch (const OverlapError& e) {
        CHECK(e.value() == 5);
    }
}
