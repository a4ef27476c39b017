#pragma once

#include <optional>
#include <stdexcept>

#include "avoid/rational.hpp"
#include "avoid/word.hpp"

namespace avoid {

/// (beta^+, n)-freeness: no factor with exponent strictly greater than beta
/// and period at least n. Exponent exactly beta is allowed.
struct FreenessSpec {
    Rational beta;
    int min_period = 1;

    FreenessSpec(Rational b, int n) : beta(b), min_period(n) {
        if (beta < Rational(1)) throw std::invalid_argument("FreenessSpec: beta must be >= 1");
        if (min_period < 1) throw std::invalid_argument("FreenessSpec: min_period must be >= 1");
    }
};

/// A factor u = w[start, start+length) having period `period`, with
/// exponent = length/period.
struct RepetitionWitness {
    size_t start;
    size_t length;
    size_t period;

    Rational exponent() const {
        return Rational(static_cast<long long>(length), static_cast<long long>(period));
    }
};

/// Finds a repetition with period >= spec.min_period and exponent > spec.beta,
/// or nothing if w is (beta^+, n)-free. Tie-break: smallest start, then
/// smallest period; length is the maximal extension at that (start, period).
///
/// For each period p we scan the match array w[i] == w[i+p] once, so the whole
/// check is O(n^2).
inline std::optional<RepetitionWitness> max_exponent_violation(const Word& w,
                                                               const FreenessSpec& spec) {
    if (w.empty()) throw std::invalid_argument("max_exponent_violation: empty word");
    const size_t n = w.size();
    std::optional<RepetitionWitness> best;
    for (size_t p = static_cast<size_t>(spec.min_period); p <= n; ++p) {
        // A factor starting at s with period p extends to length p + t where t
        // is the run of matches w[i] == w[i+p] from i = s.
        size_t i = 0;
        while (i + p < n) {
            if (w[i] != w[i + p]) { ++i; continue; }
            size_t j = i;
            while (j + p < n && w[j] == w[j + p]) ++j;
            size_t run = j - i; // maximal match run starting at i
            // Violation at start s in [i, j) needs (p + (j - s)) / p > beta,
            // i.e. j - s > (beta - 1) * p.
            // Smallest such s is i when the run is long enough.
            Rational need = (spec.beta - Rational(1)) * Rational(static_cast<long long>(p));
            long long t_needed = need.floor() + 1; // least integer strictly above need
            if (static_cast<long long>(run) >= t_needed) {
                size_t s = i;
                if (!best || s < best->start) {
                    best = RepetitionWitness{s, p + run, p};
                }
            }
            i = j + 1;
        }
        if (best && best->start == 0) break; // cannot improve: periods ascend
    }
    return best;
}

inline bool is_free(const Word& w, const FreenessSpec& spec) {
    return !max_exponent_violation(w, spec).has_value();
}

/// Incremental check used by the backtracking generator: is there a violating
/// repetition whose factor ends exactly at the last position of w?
inline bool violation_ending_at_last(const Word& w, const FreenessSpec& spec) {
    const size_t n = w.size();
    if (n == 0) return false;
    for (size_t p = static_cast<size_t>(spec.min_period); p < n; ++p) {
        // Longest suffix with period p: p + backward match run.
        size_t t = 0;
        while (t + p < n && w[n - 1 - t] == w[n - 1 - t - p]) ++t;
        if (Rational(static_cast<long long>(p + t), static_cast<long long>(p)) > spec.beta)
            return true;
    }
    return false;
}

/// Directedness violation: a length-d factor f whose mirror image also occurs.
struct DirectednessViolation {
    Word factor;
    size_t pos_factor;
    size_t pos_reverse;
};

/// Empty result means w is d-directed: no length-d factor of w occurs together
/// with its reverse. A palindromic length-d factor violates by itself.
/// Deterministic: the violating factor with the smallest position, then the
/// smallest reverse position.
inline std::optional<DirectednessViolation> is_d_directed(const Word& w, int d) {
    if (d < 1) throw std::invalid_argument("is_d_directed: d must be >= 1");
    const size_t n = w.size();
    if (n < static_cast<size_t>(d)) return std::nullopt;
    for (size_t i = 0; i + d <= n; ++i) {
        Word f = w.subword(i, d);
        Word r = reverse(f);
        for (size_t j = 0; j + d <= n; ++j) {
            bool match = true;
            for (int t = 0; t < d; ++t)
                if (w[j + t] != r[t]) { match = false; break; }
            if (match) return DirectednessViolation{f, i, j};
        }
    }
    return std::nullopt;
}

} // namespace avoid
