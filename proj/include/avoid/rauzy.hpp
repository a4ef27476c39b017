#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "avoid/factor_index.hpp"
#include "avoid/formula.hpp"
#include "avoid/word.hpp"

namespace avoid {

/// Order-1 Rauzy graph: vertices are the letters occurring in w, with an arc
/// (u, v) for every length-2 factor uv. Loops and digons allowed.
struct RauzyGraph {
    std::set<int> vertices;
    std::set<std::pair<int, int>> arcs;

    bool has_arc(int u, int v) const { return arcs.count({u, v}) > 0; }
};

inline RauzyGraph rauzy_graph(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("rauzy_graph: word must have length >= 2");
    RauzyGraph g;
    for (uint8_t c : w.letters()) g.vertices.insert(c);
    for (size_t i = 0; i + 1 < w.size(); ++i) g.arcs.insert({w[i], w[i + 1]});
    return g;
}

/// Vertices in cyclic order; consecutive pairs (wrapping) are arcs.
struct Circuit {
    std::vector<int> vertices;
    size_t length() const { return vertices.size(); }
};

/// Minimum-length circuit, lexicographically least vertex sequence among the
/// minimum-length ones (the sequence starts at its smallest vertex). Empty
/// for an acyclic graph, which finite words can produce.
inline std::optional<Circuit> shortest_circuit(const RauzyGraph& g) {
    std::vector<int> verts(g.vertices.begin(), g.vertices.end());
    for (size_t len = 1; len <= verts.size(); ++len) {
        std::vector<int> path;
        std::set<int> used;
        // The start is the minimum of the circuit, so later vertices exceed it.
        auto extend = [&](auto&& self) -> bool {
            if (path.size() == len)
                return g.has_arc(path.back(), path.front());
            for (int v : verts) {
                if (v <= path.front() || used.count(v)) continue;
                if (!g.has_arc(path.back(), v)) continue;
                path.push_back(v);
                used.insert(v);
                if (self(self)) return true;
                path.pop_back();
                used.erase(v);
            }
            return false;
        };
        for (int start : verts) {
            path = {start};
            used = {start};
            if (extend(extend)) return Circuit{path};
        }
    }
    return std::nullopt;
}

inline long long lcm_upto(int b) {
    if (b < 1) throw std::invalid_argument("lcm_upto: b must be >= 1");
    long long k = 1;
    for (int i = 2; i <= b; ++i) k = std::lcm(k, static_cast<long long>(i));
    return k;
}

/// The circuit-based occurrence h(x_j) = c_{j mod i} of phi_k in w, where
/// k = max(lcm(1..b), 2) so that every circuit length i <= b divides k.
/// Verified against the formula machinery before returning; empty when the
/// (finite-word) Rauzy graph has no circuit.
inline std::optional<Assignment> construct_phi_occurrence(const Word& w, int b) {
    auto circuit = shortest_circuit(rauzy_graph(w));
    if (!circuit) return std::nullopt;
    long long k = std::max(lcm_upto(b), 2LL);
    Formula f = phi(static_cast<int>(k));
    size_t i = circuit->length();
    Assignment a;
    for (long long j = 0; j < k; ++j) {
        int letter = circuit->vertices[static_cast<size_t>(j) % i];
        a.images["x" + std::to_string(j)] =
            Word({static_cast<uint8_t>(letter)}, w.alphabet());
    }
    FactorIndex index(w);
    const auto& fragments = f.fragments();
    for (size_t fi = 0; fi < fragments.size(); ++fi)
        if (!index.contains(instantiate(fragments[fi], fi, a)))
            throw std::logic_error("construct_phi_occurrence: circuit arcs not factors");
    return a;
}

} // namespace avoid
