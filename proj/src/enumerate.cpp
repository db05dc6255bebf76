#include "rrg/enumerate.hpp"

#include <atomic>
#include <optional>
#include <thread>

namespace rrg {

const char* side_name(Side s) noexcept {
    return s == Side::difference ? "difference" : "modulus";
}

NotUnique::NotUnique(std::int64_t weight, std::string first, std::string second)
    : std::runtime_error("minimum weight " + std::to_string(weight) +
                         " attained by both [" + std::move(first) + "] and [" +
                         std::move(second) + "]"),
      weight_(weight) {}

std::uint64_t count_partitions(int n) {
    std::uint64_t c = 0;
    for_each_partition(n, [&](std::span<const int>) { ++c; });
    return c;
}

std::uint64_t count_partitions_distinct(int n) {
    std::uint64_t c = 0;
    for_each_partition_distinct(n, [&](std::span<const int>) { ++c; });
    return c;
}

std::uint64_t count_partitions_odd(int n) {
    std::uint64_t c = 0;
    for_each_partition_odd(n, [&](std::span<const int>) { ++c; });
    return c;
}

std::uint64_t CountTable::at(int n, int m) const {
    if (n < 0 || n > max_weight || m < 0) return 0;
    const auto& row = rows[static_cast<std::size_t>(n)];
    if (m >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(m)];
}

std::uint64_t CountTable::total(int n) const {
    if (n < 0 || n > max_weight) return 0;
    std::uint64_t sum = 0;
    for (std::uint64_t c : rows[static_cast<std::size_t>(n)]) sum += c;
    return sum;
}

std::string CountTable::to_tsv() const {
    std::string out = "n\tm\tcount\n";
    for (int n = 0; n <= max_weight; ++n)
        for (int m = 0; m < static_cast<int>(rows[n].size()); ++m)
            if (rows[n][m]) {
                out += std::to_string(n);
                out += '\t';
                out += std::to_string(m);
                out += '\t';
                out += std::to_string(rows[n][m]);
                out += '\n';
            }
    return out;
}

std::string CountTable::totals_tsv() const {
    std::string out = "n\tcount\n";
    for (int n = 0; n <= max_weight; ++n) {
        out += std::to_string(n);
        out += '\t';
        out += std::to_string(total(n));
        out += '\n';
    }
    return out;
}

CountTable count_table(int k, int a, Side side, int max_weight, int threads) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
    check_difference(std::span<const int>{}, k, a);  // parameter validation only

    CountTable table;
    table.k = k;
    table.a = a;
    table.side = side;
    table.max_weight = max_weight;
    table.rows.resize(static_cast<std::size_t>(max_weight) + 1);

    auto fill_row = [&](int n) {
        auto& row = table.rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, 0);
        auto tally = [&](std::span<const int> parts) {
            const bool ok = side == Side::difference ? check_difference(parts, k, a)
                                                     : check_modulus(parts, k, a);
            if (ok) ++row[parts.size()];
        };
        for_each_partition(n, tally);
    };

    int degree = threads > 0 ? threads
                             : static_cast<int>(std::thread::hardware_concurrency());
    if (degree < 1) degree = 1;
    degree = std::min(degree, max_weight + 1);

    if (degree == 1) {
        for (int n = 0; n <= max_weight; ++n) fill_row(n);
        return table;
    }

    // Weights are independent shards; hand out the heavy ones first.
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i > max_weight) return;
            fill_row(max_weight - i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(degree));
    for (int t = 0; t < degree; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return table;
}

std::int64_t minimal_shape_weight(int a, int m_pairs, int n_singletons) {
    if (a < 1 || a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    if (m_pairs < 0 || n_singletons < 0)
        throw std::invalid_argument("shape counts must be nonnegative");
    const std::int64_t m = m_pairs, n = n_singletons;
    const std::int64_t common = 2 * m * (m + 1) + 2 * m * n + n * (n + 1) / 2;
    if (a == 1) return common + n;
    if (a == 2) return common;
    return common - 2 * m;
}

namespace {

/* Search state for minimal_with_shape: chooses pair values, then singleton
 * values, ascending with weight pruning, and keeps the candidates that
 * attain the running minimum. Pairs are forced >= 2 apart and singletons
 * off pair neighborhoods; check_difference stays the final authority on
 * every complete candidate (the unit tests certify the pruning against it
 * exhaustively). */
struct ShapeSearch {
    int a;
    int m_pairs;
    int n_singletons;
    std::int64_t bound;

    std::vector<int> pair_values;       // ascending while searching
    std::vector<int> singleton_values;  // ascending while searching

    std::int64_t best_weight = -1;
    std::vector<Partition> best;  // capped at 2, enough to detect a tie

    static std::int64_t run_cost(std::int64_t from, std::int64_t count) {
        // from + (from+1) + ... + (from+count-1)
        return count * from + count * (count - 1) / 2;
    }

    bool adjacent_to_pair(int v) const {
        for (int p : pair_values)
            if (v >= p - 1 && v <= p + 1) return true;
        return false;
    }

    void consider() {
        PairSingletonForm f;
        f.pairs.assign(pair_values.rbegin(), pair_values.rend());
        f.singletons.assign(singleton_values.rbegin(), singleton_values.rend());
        Partition p = recompose(f);
        if (!check_difference(p, 3, a)) return;
        if (best_weight < 0 || p.weight() < best_weight) {
            best_weight = p.weight();
            best.clear();
        }
        if (p.weight() == best_weight && best.size() < 2) best.push_back(std::move(p));
    }

    void pick_singletons(int index, int min_value, std::int64_t used) {
        if (index == n_singletons) {
            consider();
            return;
        }
        const std::int64_t remaining = n_singletons - index;
        for (int v = min_value;; ++v) {
            if (used + run_cost(v, remaining) > bound) return;
            if (adjacent_to_pair(v)) continue;
            singleton_values.push_back(v);
            pick_singletons(index + 1, v + 1, used + v);
            singleton_values.pop_back();
        }
    }

    void pick_pairs(int index, int min_value, std::int64_t used) {
        if (index == m_pairs) {
            pick_singletons(0, 1, used);
            return;
        }
        const std::int64_t remaining = m_pairs - index;
        for (int v = min_value;; ++v) {
            // remaining pairs cost at least 2*(v, v+2, ...), singletons 1, 2, ...
            const std::int64_t pair_floor =
                2 * (remaining * static_cast<std::int64_t>(v) + remaining * (remaining - 1));
            const std::int64_t single_floor = run_cost(1, n_singletons);
            if (used + pair_floor + single_floor > bound) return;
            pair_values.push_back(v);
            pick_pairs(index + 1, v + 2, used + 2 * v);
            pair_values.pop_back();
        }
    }
};

}  // namespace

MinimalShapeResult minimal_with_shape(int a, int m_pairs, int n_singletons) {
    ShapeSearch search{a, m_pairs, n_singletons,
                       minimal_shape_weight(a, m_pairs, n_singletons)};
    search.pick_pairs(0, 1, 0);
    if (search.best.empty())
        throw std::logic_error("no difference-valid partition with " +
                               std::to_string(m_pairs) + " pairs and " +
                               std::to_string(n_singletons) +
                               " singletons within the closed-form weight bound");
    if (search.best.size() > 1)
        throw NotUnique(search.best_weight, search.best[0].str(), search.best[1].str());
    return {search.best[0], search.best_weight};
}

}  // namespace rrg
