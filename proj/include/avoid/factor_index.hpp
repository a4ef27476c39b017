#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "avoid/word.hpp"

namespace avoid {

/// Substring membership index over a fixed word, built as a suffix automaton.
/// contains(f) runs in O(|f|); the automaton state after matching a factor can
/// be carried around and extended letter by letter, which the occurrence
/// search uses to test fragment prefixes incrementally.
class FactorIndex {
public:
    using State = int32_t;
    static constexpr State kDead = -1;

    explicit FactorIndex(const Word& w) : alphabet_(w.alphabet()) {
        nodes_.reserve(2 * w.size() + 2);
        root_ = new_node(0, -1);
        last_ = root_;
        for (uint8_t c : w.letters()) extend(c);
    }

    State root() const { return root_; }

    /// Extends a matched factor by one letter; kDead if no such factor exists.
    State step(State s, uint8_t letter) const {
        if (s == kDead) return kDead;
        return nodes_[s].next[letter];
    }

    /// Walks a whole word from `s`.
    State walk(State s, const Word& f) const {
        for (uint8_t c : f.letters()) {
            s = step(s, c);
            if (s == kDead) return kDead;
        }
        return s;
    }

    bool contains(const Word& f) const { return walk(root_, f) != kDead; }

private:
    struct Node {
        std::array<State, Alphabet::kMaxSize> next;
        int32_t len;
        State link;
    };

    State new_node(int32_t len, State link) {
        Node n;
        n.next.fill(kDead);
        n.len = len;
        n.link = link;
        nodes_.push_back(n);
        return static_cast<State>(nodes_.size() - 1);
    }

    void extend(uint8_t c) {
        State cur = new_node(nodes_[last_].len + 1, -1);
        State p = last_;
        while (p != kDead && nodes_[p].next[c] == kDead) {
            nodes_[p].next[c] = cur;
            p = nodes_[p].link;
        }
        if (p == kDead) {
            nodes_[cur].link = root_;
        } else {
            State q = nodes_[p].next[c];
            if (nodes_[p].len + 1 == nodes_[q].len) {
                nodes_[cur].link = q;
            } else {
                State clone = new_node(nodes_[p].len + 1, nodes_[q].link);
                nodes_[clone].next = nodes_[q].next;
                while (p != kDead && nodes_[p].next[c] == q) {
                    nodes_[p].next[c] = clone;
                    p = nodes_[p].link;
                }
                nodes_[q].link = clone;
                nodes_[cur].link = clone;
            }
        }
        last_ = cur;
    }

    std::vector<Node> nodes_;
    State root_ = 0;
    State last_ = 0;
    Alphabet alphabet_;
};

inline FactorIndex build_factor_index(const Word& w) { return FactorIndex(w); }

} // namespace avoid
