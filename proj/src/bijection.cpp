#include "rrg/bijection.hpp"

#include <algorithm>
#include <optional>

namespace rrg {

MoveInapplicable::MoveInapplicable(const std::string& what) : std::runtime_error(what) {}

const char* kind_name(MoveKind k) noexcept {
    return k == MoveKind::pair ? "pair" : "singleton";
}

const char* direction_name(MoveDirection d) noexcept {
    return d == MoveDirection::forward ? "forward" : "backward";
}

StuckError::StuckError(const std::string& what, Partition snapshot, MoveTrace trace)
    : std::runtime_error(what + " at [" + snapshot.str() + "]"),
      snapshot_(std::move(snapshot)),
      trace_(std::move(trace)) {}

void validate_triple(const MoveTriple& t) {
    if (t.a < 1 || t.a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    if (t.pair_count < 0 || t.singleton_count < 0)
        throw std::invalid_argument("shape counts must be nonnegative");
    if (static_cast<int>(t.mu.size()) != t.pair_count)
        throw std::invalid_argument("mu must have one entry per pair");
    if (static_cast<int>(t.nu.size()) != t.singleton_count)
        throw std::invalid_argument("nu must have one entry per singleton");
    for (std::size_t i = 0; i < t.mu.size(); ++i) {
        if (t.mu[i] < 0 || t.mu[i] % 2 != 0)
            throw std::invalid_argument("mu entries must be even and nonnegative");
        if (i > 0 && t.mu[i - 1] < t.mu[i])
            throw std::invalid_argument("mu must be weakly decreasing");
    }
    for (std::size_t i = 0; i < t.nu.size(); ++i) {
        if (t.nu[i] < 0) throw std::invalid_argument("nu entries must be nonnegative");
        if (i > 0 && t.nu[i - 1] < t.nu[i])
            throw std::invalid_argument("nu must be weakly decreasing");
    }
}

Partition base_partition(int a, int m_pairs, int n_singletons) {
    if (a < 1 || a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    if (m_pairs < 0 || n_singletons < 0)
        throw std::invalid_argument("shape counts must be nonnegative");
    const int m = m_pairs, n = n_singletons;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(2 * m + n));
    if (a == 2) {
        for (int v = n + 2 * m; v >= n + 2; v -= 2) {
            parts.push_back(v);
            parts.push_back(v);
        }
        for (int v = n; v >= 1; --v) parts.push_back(v);
    } else {
        const int top = a == 3 ? 2 * m + n : 2 * m + n + 1;
        const int stop = a == 3 ? 2 * m + 1 : 2 * m + 2;
        for (int v = top; v >= stop; --v) parts.push_back(v);
        for (int v = a == 3 ? 2 * m - 1 : 2 * m; v >= 1; v -= 2) {
            parts.push_back(v);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

namespace {

bool contains(const std::vector<int>& desc, int v) {
    return std::binary_search(desc.begin(), desc.end(), v, std::greater<int>());
}

void erase_value(std::vector<int>& desc, int v) {
    auto it = std::lower_bound(desc.begin(), desc.end(), v, std::greater<int>());
    desc.erase(it);
}

void insert_value(std::vector<int>& desc, int v) {
    auto it = std::lower_bound(desc.begin(), desc.end(), v, std::greater<int>());
    desc.insert(it, v);
}

struct MoveOutcome {
    PairSingletonForm form;
    int from = 0;
    int to = 0;
};

/* A candidate is accepted only if it recomposes to a difference-valid
 * partition; the callers guarantee the structural part (disjoint strictly
 * decreasing values) by construction. */
std::optional<Partition> accept(const PairSingletonForm& f, int a) {
    for (std::size_t i = 1; i < f.pairs.size(); ++i)
        if (f.pairs[i - 1] <= f.pairs[i]) return std::nullopt;
    for (std::size_t i = 1; i < f.singletons.size(); ++i)
        if (f.singletons[i - 1] <= f.singletons[i]) return std::nullopt;
    for (int p : f.pairs)
        if (contains(f.singletons, p)) return std::nullopt;
    Partition cand = recompose(f);
    if (!check_difference(cand, 3, a)) return std::nullopt;
    return cand;
}

MoveOutcome apply_pair_move(const PairSingletonForm& f, int a, int value, bool forward) {
    if (!contains(f.pairs, value))
        throw MoveInapplicable("no pair with value " + std::to_string(value));

    const int target = forward ? value + 1 : value - 1;
    if (target >= 1) {
        PairSingletonForm simple = f;
        erase_value(simple.pairs, value);
        insert_value(simple.pairs, target);
        if (accept(simple, a)) return {std::move(simple), value, target};
    }

    if (a == 2)
        throw MoveInapplicable(std::string("pair ") + std::to_string(value) +
                               " cannot take a simple " + (forward ? "forward" : "backward") +
                               " step");

    // Blocked rewrite across the adjacent run of singletons: the pair jumps
    // over the run while the run shifts two steps the other way.
    PairSingletonForm next = f;
    erase_value(next.pairs, value);
    int landing;
    if (forward) {
        // (b+s)+...+(b+2)+[b,b] -> [b+s,b+s]+(b+s-2)+...+(b), s maximal
        if (!contains(f.singletons, value + 2))
            throw MoveInapplicable("pair " + std::to_string(value) +
                                   " has no singleton run above it");
        landing = value + 2;
        while (contains(f.singletons, landing + 1)) ++landing;
        for (int v = value + 2; v <= landing; ++v) {
            erase_value(next.singletons, v);
            insert_value(next.singletons, v - 2);
        }
    } else {
        // [b+1,b+1]+(b-1)+...+(b-s) -> (b+1)+(b)+...+(b-s+2)+[b-s,b-s]
        const int b = value - 1;
        if (b < 1 || !contains(f.singletons, b - 1))
            throw MoveInapplicable("pair " + std::to_string(value) +
                                   " has no singleton run below it");
        landing = b - 1;
        while (landing - 1 >= 1 && contains(f.singletons, landing - 1)) --landing;
        for (int v = b - 1; v >= landing; --v) {
            erase_value(next.singletons, v);
            insert_value(next.singletons, v + 2);
        }
    }
    insert_value(next.pairs, landing);
    if (!accept(next, a))
        throw MoveInapplicable("blocked pair rewrite at " + std::to_string(value) +
                               " leaves an invalid partition");
    return {std::move(next), value, landing};
}

MoveOutcome apply_singleton_move(const PairSingletonForm& f, int a, int value, bool forward) {
    if (!contains(f.singletons, value))
        throw MoveInapplicable("no singleton with value " + std::to_string(value));

    const int target = forward ? value + 1 : value - 1;
    if (target >= 1) {
        PairSingletonForm simple = f;
        erase_value(simple.singletons, value);
        insert_value(simple.singletons, target);
        if (accept(simple, a)) return {std::move(simple), value, target};
    }

    if (a != 2)
        throw MoveInapplicable(std::string("singleton ") + std::to_string(value) +
                               " cannot take a simple " + (forward ? "forward" : "backward") +
                               " step");

    // Blocked rewrite across the adjacent ladder of pairs: the singleton
    // jumps over the ladder while every rung shifts one step the other way.
    PairSingletonForm next = f;
    erase_value(next.singletons, value);
    int landing;
    if (forward) {
        // [b+2s,b+2s]+...+[b+2,b+2]+(b) -> (b+2s+1)+[b+2s-1,b+2s-1]+...+[b+1,b+1]
        if (!contains(f.pairs, value + 2))
            throw MoveInapplicable("singleton " + std::to_string(value) +
                                   " has no pair ladder above it");
        int rung = value + 2;
        while (contains(f.pairs, rung + 2)) rung += 2;
        for (int v = value + 2; v <= rung; v += 2) {
            erase_value(next.pairs, v);
            insert_value(next.pairs, v - 1);
        }
        landing = rung + 1;
    } else {
        // (b+1)+[b-1,b-1]+...+[b-2s+1,b-2s+1] -> [b,b]+...+[b-2s+2,b-2s+2]+(b-2s)
        const int b = value - 1;
        if (b < 1 || !contains(f.pairs, b - 1))
            throw MoveInapplicable("singleton " + std::to_string(value) +
                                   " has no pair ladder below it");
        int rung = b - 1;
        while (rung - 2 >= 1 && contains(f.pairs, rung - 2)) rung -= 2;
        for (int v = b - 1; v >= rung; v -= 2) {
            erase_value(next.pairs, v);
            insert_value(next.pairs, v + 1);
        }
        landing = rung - 1;
        if (landing < 1)
            throw MoveInapplicable("singleton " + std::to_string(value) +
                                   " has nowhere to land below the pair ladder");
    }
    insert_value(next.singletons, landing);
    if (!accept(next, a))
        throw MoveInapplicable("blocked singleton rewrite at " + std::to_string(value) +
                               " leaves an invalid partition");
    return {std::move(next), value, landing};
}

MoveOutcome apply_move(const PairSingletonForm& f, int a, MoveKind kind, int value,
                       MoveDirection dir) {
    if (a < 1 || a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    const bool forward = dir == MoveDirection::forward;
    return kind == MoveKind::pair ? apply_pair_move(f, a, value, forward)
                                  : apply_singleton_move(f, a, value, forward);
}

Partition checked_input(const Partition& p, int a) {
    if (!check_difference(p, 3, a))
        throw std::invalid_argument("partition [" + p.str() +
                                    "] violates the k=3 difference condition for a=" +
                                    std::to_string(a));
    return p;
}

}  // namespace

Partition forward_pair_move(const Partition& p, int a, int pair_value) {
    checked_input(p, a);
    return recompose(apply_pair_move(decompose(p), a, pair_value, true).form);
}

Partition backward_pair_move(const Partition& p, int a, int pair_value) {
    checked_input(p, a);
    return recompose(apply_pair_move(decompose(p), a, pair_value, false).form);
}

Partition forward_singleton_move(const Partition& p, int a, int singleton_value) {
    checked_input(p, a);
    return recompose(apply_singleton_move(decompose(p), a, singleton_value, true).form);
}

Partition backward_singleton_move(const Partition& p, int a, int singleton_value) {
    checked_input(p, a);
    return recompose(apply_singleton_move(decompose(p), a, singleton_value, false).form);
}

namespace {

/* Shared machinery for the two orchestrators. Pulls or pushes one part
 * (identified by its current value) until it reaches `target` (backward)
 * or for a prescribed number of moves (forward), appending to the trace. */
struct Session {
    int a;
    PairSingletonForm form;
    MoveTrace trace;

    void step(MoveKind kind, int& value, MoveDirection dir) {
        MoveOutcome out = apply_move(form, a, kind, value, dir);
        form = std::move(out.form);
        value = out.to;
        trace.push_back({recompose(form), dir, kind, out.from, out.to});
    }

    int pull_to(MoveKind kind, int value, int target) {
        int moves = 0;
        while (value != target) {
            if (value < target)
                throw StuckError(kind_name(kind) + std::string(" ") + std::to_string(value) +
                                     " passed its target " + std::to_string(target),
                                 recompose(form), trace);
            try {
                step(kind, value, MoveDirection::backward);
            } catch (const MoveInapplicable& e) {
                throw StuckError(std::string("backward ") + kind_name(kind) + " move failed: " +
                                     e.what(),
                                 recompose(form), trace);
            }
            ++moves;
        }
        return moves;
    }

    void push_times(MoveKind kind, int value, int times) {
        for (int i = 0; i < times; ++i) step(kind, value, MoveDirection::forward);
    }
};

}  // namespace

TripleResult to_triple(int a, const Partition& lambda) {
    if (a < 1 || a > 3) throw std::invalid_argument("a must be 1, 2 or 3");
    checked_input(lambda, a);

    Session s{a, decompose(lambda), {}};
    const int m = s.form.pair_count();
    const int n = s.form.singleton_count();

    std::vector<int> pair_moves(m, 0);       // smallest pair first
    std::vector<int> singleton_moves(n, 0);  // smallest singleton first

    auto pull_pairs = [&] {
        for (int i = 0; i < m; ++i) {
            const int target = a == 3 ? 2 * i + 1 : a == 1 ? 2 * i + 2 : n + 2 * (i + 1);
            pair_moves[i] = s.pull_to(MoveKind::pair, s.form.pairs[m - 1 - i], target);
        }
    };
    auto pull_singletons = [&] {
        for (int i = 0; i < n; ++i) {
            const int target = a == 3   ? 2 * m + 1 + i
                               : a == 1 ? 2 * m + 2 + i
                                        : i + 1;
            singleton_moves[i] =
                s.pull_to(MoveKind::singleton, s.form.singletons[n - 1 - i], target);
        }
    };

    // Exact reversal of the forward order: for a=1,3 the forward pass moves
    // singletons then pairs, so the pull works pairs first; for a=2 the
    // forward pass moves pairs then singletons, so the pull works
    // singletons first.
    if (a == 2) {
        pull_singletons();
        pull_pairs();
    } else {
        pull_pairs();
        pull_singletons();
    }

    const Partition reached = recompose(s.form);
    if (reached != base_partition(a, m, n))
        throw StuckError("pull finished away from the base partition", reached, s.trace);

    MoveTriple triple{a, m, n, std::vector<int>(m), std::vector<int>(n)};
    for (int j = 0; j < m; ++j) triple.mu[j] = 2 * pair_moves[m - 1 - j];
    for (int j = 0; j < n; ++j) triple.nu[j] = singleton_moves[n - 1 - j];
    try {
        validate_triple(triple);  // monotonicity is a theorem; check it anyway
    } catch (const std::invalid_argument& e) {
        throw StuckError(std::string("computed triple violates its invariants: ") + e.what(),
                         reached, s.trace);
    }
    return {std::move(triple), std::move(s.trace)};
}

PartitionResult from_triple(const MoveTriple& t) {
    validate_triple(t);

    Session s{t.a, decompose(base_partition(t.a, t.pair_count, t.singleton_count)), {}};
    const int m = t.pair_count;
    const int n = t.singleton_count;

    auto push_pairs = [&] {
        for (int j = 0; j < m; ++j)
            s.push_times(MoveKind::pair, s.form.pairs[j], t.mu[j] / 2);
    };
    auto push_singletons = [&] {
        for (int j = 0; j < n; ++j)
            s.push_times(MoveKind::singleton, s.form.singletons[j], t.nu[j]);
    };

    if (t.a == 2) {
        push_pairs();
        push_singletons();
    } else {
        push_singletons();
        push_pairs();
    }

    return {recompose(s.form), std::move(s.trace)};
}

}  // namespace rrg
