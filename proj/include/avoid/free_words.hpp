#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "avoid/freeness.hpp"
#include "avoid/word.hpp"

namespace avoid {

struct EnumerationStats {
    uint64_t count = 0;
    size_t max_depth_reached = 0;
    uint64_t nodes_visited = 0;
};

/// Backtracking enumeration of the (beta^+, n)-free words of exactly the given
/// length, in lexicographic order. A word is extended only if the extension
/// introduces no violation ending at the new last position; everything earlier
/// was already checked at a shallower depth, so the pruning is exact.
///
/// The visitor may return false to stop the enumeration early.
inline EnumerationStats enumerate_free(Alphabet alphabet, const FreenessSpec& spec, size_t length,
                                       const std::function<bool(const Word&)>& visit) {
    if (length < 1) throw std::invalid_argument("enumerate_free: length must be >= 1");
    EnumerationStats stats;
    Word current({}, alphabet);
    bool stopped = false;
    auto dfs = [&](auto&& self) -> void {
        if (stopped) return;
        if (current.size() == length) {
            ++stats.count;
            if (!visit(current)) stopped = true;
            return;
        }
        for (int c = 0; c < alphabet.size && !stopped; ++c) {
            current.append(static_cast<uint8_t>(c));
            ++stats.nodes_visited;
            if (!violation_ending_at_last(current, spec)) {
                stats.max_depth_reached = std::max(stats.max_depth_reached, current.size());
                self(self);
            }
            current.pop_back();
        }
    };
    dfs(dfs);
    return stats;
}

inline std::vector<Word> all_free_words(Alphabet alphabet, const FreenessSpec& spec,
                                        size_t length) {
    std::vector<Word> out;
    enumerate_free(alphabet, spec, length, [&](const Word& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

inline uint64_t count_free(Alphabet alphabet, const FreenessSpec& spec, size_t length) {
    return enumerate_free(alphabet, spec, length, [](const Word&) { return true; }).count;
}

/// Lexicographically least free word of the given length; empty optional when
/// the backtracking tree is exhausted without reaching the length.
inline std::optional<Word> lex_least_free(Alphabet alphabet, const FreenessSpec& spec,
                                          size_t length) {
    std::optional<Word> found;
    enumerate_free(alphabet, spec, length, [&](const Word& w) {
        found = w;
        return false;
    });
    return found;
}

/// Random free word of the given length: backtracking descent with a shuffled
/// letter order at every node. Biased towards early extendable branches, which
/// is fine for its smoke-testing role. Empty when no free word exists.
inline std::optional<Word> sample_free(Alphabet alphabet, const FreenessSpec& spec, size_t length,
                                       uint64_t seed) {
    std::mt19937_64 rng(seed);
    Word current({}, alphabet);
    std::optional<Word> found;
    auto dfs = [&](auto&& self) -> bool {
        if (current.size() == length) {
            found = current;
            return true;
        }
        std::vector<int> order(alphabet.size);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int c : order) {
            current.append(static_cast<uint8_t>(c));
            if (!violation_ending_at_last(current, spec) && self(self)) return true;
            current.pop_back();
        }
        return false;
    };
    dfs(dfs);
    return found;
}

} // namespace avoid
