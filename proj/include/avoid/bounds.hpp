#pragma once

#include <optional>
#include <stdexcept>

#include "avoid/rational.hpp"

namespace avoid {

/// r = (beta - 1) / (2 - beta): when a repetition forces
/// |h(x)| * (2 - beta) <= (beta - 1) * |h(rest)|, the mutual amplification
/// coefficient between the two long variables. Requires 1 < beta < 2.
inline Rational amplification_ratio(const Rational& beta) {
    if (!(Rational(1) < beta && beta < Rational(2)))
        throw std::invalid_argument("amplification_ratio: beta must lie in (1,2)");
    return (beta - Rational(1)) / (Rational(2) - beta);
}

/// Least B with B = c + r*B, i.e. c / (1 - r); empty when r >= 1 (no finite
/// bound).
inline std::optional<Rational> solve_symmetric_system(const Rational& c, const Rational& r) {
    if (r < Rational(0) || c < Rational(0))
        throw std::invalid_argument("solve_symmetric_system: c and r must be nonnegative");
    if (Rational(1) <= r) return std::nullopt;
    return c / (Rational(1) - r);
}

/// The two fragment shapes whose bound chains the library derives:
///   Thm2Shape: long variables wrap y z y   (x ... x around yzy)
///   Thm3Shape: long variables wrap y z     (x ... x around yz)
enum class BoundTemplate { Thm2Shape, Thm3Shape };

struct BoundReport {
    BoundTemplate shape;
    Rational beta;
    int directedness_d;
    Rational r;            // mutual coefficient
    Rational c;            // additive constant
    int short_var_max;     // d - 1, from the y.y^R (resp. z.z^R) fragment
    bool finite;           // false when r >= 1
    long long long_var_max = 0;  // floor(c / (1 - r)), valid when finite
    std::optional<int> paper_long_cap;   // stated in the source when parameters match
    std::optional<int> paper_short_cap;
};

/// Derives the variable-length caps for the two paper-shaped chains: the short
/// variable is capped at d-1 by directedness, the long variables satisfy the
/// symmetric system B = c + r*B with r = (beta-1)/(2-beta) and c = r times the
/// short contribution (twice the short cap for the yzy shape, once for yz).
inline BoundReport derive_caps(BoundTemplate shape, const Rational& beta, int directedness_d) {
    if (directedness_d < 2) throw std::invalid_argument("derive_caps: d must be >= 2");
    BoundReport report;
    report.shape = shape;
    report.beta = beta;
    report.directedness_d = directedness_d;
    report.short_var_max = directedness_d - 1;
    report.r = amplification_ratio(beta);
    int short_occurrences = shape == BoundTemplate::Thm2Shape ? 2 : 1;
    report.c = report.r * Rational(short_occurrences * report.short_var_max);
    auto fixed_point = solve_symmetric_system(report.c, report.r);
    report.finite = fixed_point.has_value();
    if (report.finite) report.long_var_max = fixed_point->floor();
    if (shape == BoundTemplate::Thm2Shape && beta == Rational(22, 15) && directedness_d == 11) {
        report.paper_long_cap = 140;
        report.paper_short_cap = 10;
    }
    if (shape == BoundTemplate::Thm3Shape && beta == Rational(131, 90) && directedness_d == 4) {
        // The source derives c = 129/49 where direct evaluation of
        // (41/49)*|h(yz)| with the short cap 3 gives 123/49, hence long cap
        // 16 there versus 15 here. Both are reported; pipelines take the
        // looser cap.
        report.paper_long_cap = 16;
        report.paper_short_cap = 3;
    }
    return report;
}

} // namespace avoid
