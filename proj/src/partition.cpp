#include "rrg/partition.hpp"

#include <algorithm>
#include <charconv>

namespace rrg {

namespace {

void require_k_a(int k, int a) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (a < 1 || a > k) throw std::invalid_argument("a must satisfy 1 <= a <= k");
}

}  // namespace

MultiplicityTooHigh::MultiplicityTooHigh(int value)
    : std::runtime_error("part " + std::to_string(value) + " occurs more than twice"),
      value_(value) {}

OverlapError::OverlapError(int value)
    : std::runtime_error("value " + std::to_string(value) +
                         " is listed both as a pair and as a singleton"),
      value_(value) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::size_t lo = pos, hi = comma;
        while (lo < hi && text[lo] == ' ') ++lo;
        while (hi > lo && text[hi - 1] == ' ') --hi;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + lo, text.data() + hi, value);
        if (ec != std::errc{} || ptr != text.data() + hi || lo == hi)
            throw std::invalid_argument("bad part '" + text.substr(pos, comma - pos) +
                                        "' in partition text");
        parts.push_back(value);
        pos = comma + 1;
        if (pos == text.size() && comma < text.size())
            throw std::invalid_argument("trailing comma in partition text");
    }
    return Partition(std::move(parts));  // ctor rejects non-descending input
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool check_difference(std::span<const int> parts, int k, int a) {
    require_k_a(k, a);
    const int len = static_cast<int>(parts.size());
    for (int i = 0; i + k - 1 < len; ++i)
        if (parts[i] < parts[i + k - 1] + 2) return false;
    int ones = 0;
    for (int i = len - 1; i >= 0 && parts[i] == 1; --i) ++ones;
    return ones <= a - 1;
}

bool check_difference(const Partition& p, int k, int a) {
    return check_difference(p.parts(), k, a);
}

bool check_modulus(std::span<const int> parts, int k, int a) {
    require_k_a(k, a);
    const int mod = 2 * k + 1;
    for (int part : parts) {
        const int r = part % mod;
        if (r == 0 || r == a || r == mod - a) return false;
    }
    return true;
}

bool check_modulus(const Partition& p, int k, int a) {
    return check_modulus(p.parts(), k, a);
}

PairSingletonForm decompose(const Partition& p) {
    PairSingletonForm f;
    const auto parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t mult = j - i;
        if (mult > 2) throw MultiplicityTooHigh(parts[i]);
        (mult == 2 ? f.pairs : f.singletons).push_back(parts[i]);
        i = j;
    }
    return f;
}

Partition recompose(const PairSingletonForm& f) {
    auto check_strict = [](const std::vector<int>& v, const char* what) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 0)
                throw std::invalid_argument(std::string(what) + " values must be positive");
            if (i > 0 && v[i - 1] <= v[i])
                throw std::invalid_argument(std::string(what) +
                                            " values must be strictly decreasing");
        }
    };
    check_strict(f.pairs, "pair");
    check_strict(f.singletons, "singleton");

    std::vector<int> parts;
    parts.reserve(2 * f.pairs.size() + f.singletons.size());
    std::size_t ip = 0, is = 0;
    while (ip < f.pairs.size() || is < f.singletons.size()) {
        if (ip < f.pairs.size() && is < f.singletons.size() &&
            f.pairs[ip] == f.singletons[is])
            throw OverlapError(f.pairs[ip]);
        if (is == f.singletons.size() ||
            (ip < f.pairs.size() && f.pairs[ip] > f.singletons[is])) {
            parts.push_back(f.pairs[ip]);
            parts.push_back(f.pairs[ip]);
            ++ip;
        } else {
            parts.push_back(f.singletons[is]);
            ++is;
        }
    }
    return Partition(std::move(parts));
}

}  // namespace rrg
