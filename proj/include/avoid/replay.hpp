#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "avoid/bounds.hpp"
#include "avoid/formula.hpp"
#include "avoid/free_words.hpp"
#include "avoid/freeness.hpp"
#include "avoid/morphism.hpp"
#include "avoid/occurrence.hpp"
#include "avoid/rauzy.hpp"
#include "avoid/word.hpp"

namespace avoid {

enum class Verdict { Corroborated, Violated, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Corroborated: return "corroborated";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of one replay pipeline run. Violated always carries a witness.
struct ReplayReport {
    std::string pipeline;
    nlohmann::json params;
    Verdict verdict = Verdict::Inconclusive;
    std::string regime = "desk";  // "desk" or "paper"
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json stats = nlohmann::json::object();

    nlohmann::json to_json() const {
        return {{"pipeline", pipeline}, {"params", params},
                {"verdict", verdict_name(verdict)}, {"regime", regime},
                {"witnesses", witnesses}, {"stats", stats}};
    }

    int exit_code() const {
        switch (verdict) {
        case Verdict::Corroborated: return 0;
        case Verdict::Violated: return 1;
        case Verdict::Inconclusive: return 2;
        }
        return 2;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json assignment_json(const Assignment& a) {
    nlohmann::json images = nlohmann::json::object();
    for (const auto& [v, im] : a.images) images[v] = im.str();
    nlohmann::json orientations = nlohmann::json::array();
    for (const auto& [pos, o] : a.orientations)
        orientations.push_back({pos.fragment, pos.position,
                                o == Orientation::Forward ? "F" : "B"});
    return {{"images", images}, {"orientations", orientations}};
}

/// Runs fn(i) over [0, n) on `threads` workers and returns the smallest index
/// where fn reported a hit, keeping witness selection canonical.
template <class Fn>
std::optional<size_t> first_hit_parallel(size_t n, int threads, Fn fn) {
    threads = std::max(1, threads);
    std::atomic<size_t> next{0};
    std::atomic<size_t> best{n};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n || i >= best.load()) break;
            if (fn(i)) {
                size_t prev = best.load();
                while (i < prev && !best.compare_exchange_weak(prev, i)) {}
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    size_t b = best.load();
    if (b == n) return std::nullopt;
    return b;
}

} // namespace detail

/// Theorem 1 upper bound: the periodic word over k+1 letters is 2-directed
/// and avoids phi_k under the given uniform cap.
inline ReplayReport replay_theorem1_upper(int k, int prefix_len, size_t cap) {
    if (k < 2) throw std::invalid_argument("replay_theorem1_upper: k must be >= 2");
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "thm1-upper";
    report.params = {{"k", k}, {"prefix_len", prefix_len}, {"cap", cap}};
    Word w = periodic_word(k, prefix_len);
    Formula f = phi(k);
    auto directed = is_d_directed(w, 2);
    auto occ = find_occurrence(w, f, VarBounds::uniform(f, cap));
    if (!directed && occ.outcome == SearchOutcome::NotFound) {
        report.verdict = Verdict::Corroborated;
    } else {
        report.verdict = Verdict::Violated;
        if (directed)
            report.witnesses.push_back({{"kind", "directedness"},
                                        {"factor", directed->factor.str()},
                                        {"pos_factor", directed->pos_factor},
                                        {"pos_reverse", directed->pos_reverse}});
        if (occ.outcome == SearchOutcome::Found)
            report.witnesses.push_back({{"kind", "occurrence"},
                                        {"assignment", detail::assignment_json(*occ.assignment)}});
    }
    report.stats = {{"word", w.str()}, {"nodes", occ.stats.nodes},
                    {"wall_time_s", timer.seconds()}};
    return report;
}

/// Variant of the upper-bound pipeline running on a caller-provided word
/// (used to confirm the check really rejects bad words).
inline ReplayReport replay_theorem1_upper_on(const Word& w, int k, size_t cap) {
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "thm1-upper";
    report.params = {{"k", k}, {"cap", cap}, {"word", w.str()}};
    Formula f = phi(k);
    auto directed = is_d_directed(w, 2);
    auto occ = find_occurrence(w, f, VarBounds::uniform(f, cap));
    report.verdict = (!directed && occ.outcome == SearchOutcome::NotFound)
                         ? Verdict::Corroborated
                         : Verdict::Violated;
    if (occ.outcome == SearchOutcome::Found)
        report.witnesses.push_back({{"kind", "occurrence"},
                                    {"assignment", detail::assignment_json(*occ.assignment)}});
    report.stats = {{"wall_time_s", timer.seconds()}};
    return report;
}

/// Theorem 1 lower bound: exhaustive search over words on b letters confirms
/// that no word of length max_len avoids phi_{max(lcm(1..b),2)}. A Rauzy
/// circuit in a candidate prefix certifies an occurrence immediately.
inline ReplayReport replay_theorem1_lower(int b, size_t max_len, uint64_t budget = 1000000000) {
    if (b < 1) throw std::invalid_argument("replay_theorem1_lower: b must be >= 1");
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "thm1-lower";
    report.params = {{"b", b}, {"max_len", max_len}, {"budget", budget}};
    long long k = std::max(lcm_upto(b), 2LL);
    Formula f = phi(static_cast<int>(k));
    Alphabet alphabet(b);
    uint64_t nodes = 0;
    bool budget_hit = false;
    std::optional<Word> survivor;
    Word current({}, alphabet);
    // phi_k is letter-symmetric, so the first letter can be fixed.
    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (current.size() == max_len) {
            survivor = current;
            return true;
        }
        for (int c = 0; c < alphabet.size; ++c) {
            if (depth == 0 && c > 0) break;
            current.append(static_cast<uint8_t>(c));
            if (++nodes > budget) { budget_hit = true; current.pop_back(); return false; }
            bool contains = false;
            if (current.size() >= 2 && construct_phi_occurrence(current, b)) {
                contains = true;
            } else {
                auto occ = find_occurrence(current, f,
                                           VarBounds::uniform(f, current.size()), budget);
                if (occ.outcome == SearchOutcome::BudgetExhausted) budget_hit = true;
                contains = occ.outcome == SearchOutcome::Found;
            }
            if (!contains && !budget_hit) {
                if (self(self, depth + 1)) return true;
            }
            current.pop_back();
            if (budget_hit) return false;
        }
        return false;
    };
    bool found_survivor = dfs(dfs, 0);
    if (budget_hit) {
        report.verdict = Verdict::Inconclusive;
        report.stats["note"] = "node budget exhausted before the search completed";
    } else if (found_survivor) {
        report.verdict = Verdict::Inconclusive;
        report.stats["note"] = "a word of length max_len still avoids the formula; "
                               "the desk-scale length is too small to certify the bound";
        report.witnesses.push_back({{"kind", "avoiding_word"}, {"word", survivor->str()}});
    } else {
        report.verdict = Verdict::Corroborated;
    }
    report.stats["k"] = k;
    report.stats["nodes"] = nodes;
    report.stats["wall_time_s"] = timer.seconds();
    return report;
}

/// Freeness/directedness transfer: the image of every (source_spec)-free word
/// of length source_len is (target_spec)-free and d-directed.
inline ReplayReport replay_transfer(const UniformMorphism& m, const FreenessSpec& source_spec,
                                    size_t source_len, const FreenessSpec& target_spec, int d,
                                    int threads = 1) {
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "transfer";
    report.params = {{"width", m.width()}, {"source_beta", source_spec.beta.str()},
                     {"source_min_period", source_spec.min_period}, {"source_len", source_len},
                     {"target_beta", target_spec.beta.str()},
                     {"target_min_period", target_spec.min_period}, {"d", d}};
    auto sources = all_free_words(m.source_alphabet(), source_spec, source_len);
    std::mutex witness_mutex;
    nlohmann::json first_witness;
    size_t witness_idx = sources.size();
    auto check = [&](size_t i) {
        Word image = m.apply(sources[i]);
        auto rep = max_exponent_violation(image, target_spec);
        auto dir = is_d_directed(image, d);
        if (!rep && !dir) return false;
        nlohmann::json wj = {{"source", sources[i].str()}, {"image", image.str()}};
        if (rep)
            wj["repetition"] = {{"start", rep->start}, {"length", rep->length},
                                {"period", rep->period}, {"exponent", rep->exponent().str()}};
        if (dir)
            wj["directedness"] = {{"factor", dir->factor.str()},
                                  {"pos_factor", dir->pos_factor},
                                  {"pos_reverse", dir->pos_reverse}};
        std::lock_guard<std::mutex> lock(witness_mutex);
        if (i < witness_idx) { witness_idx = i; first_witness = wj; }
        return true;
    };
    auto hit = detail::first_hit_parallel(sources.size(), threads, check);
    if (hit) {
        report.verdict = Verdict::Violated;
        report.witnesses.push_back(first_witness);
    } else {
        report.verdict = Verdict::Corroborated;
    }
    report.stats = {{"source_words", sources.size()}, {"wall_time_s", timer.seconds()}};
    return report;
}

/// Exhaustive non-occurrence: no occurrence of f within the caps exists in the
/// image of any (source_spec)-free word of length source_len. Identical images
/// are checked once. The regime is "paper" when the source window covers the
/// longest fragment the caps allow.
inline ReplayReport replay_formula_nonoccurrence(const UniformMorphism& m, const Formula& f,
                                                 const VarBounds& caps,
                                                 const FreenessSpec& source_spec,
                                                 size_t source_len,
                                                 uint64_t budget = 1000000000,
                                                 int threads = 1) {
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "formula-nonoccurrence";
    nlohmann::json caps_json = nlohmann::json::object();
    for (const auto& [v, c] : caps.max_len) caps_json[v] = c;
    report.params = {{"width", m.width()}, {"formula", f.str()}, {"caps", caps_json},
                     {"source_beta", source_spec.beta.str()},
                     {"source_min_period", source_spec.min_period},
                     {"source_len", source_len}, {"budget", budget}};
    size_t window = 0;
    for (const auto& fr : f.fragments()) {
        size_t len = 0;
        for (const auto& occ : fr.occurrences) len += caps.at(occ.variable);
        window = std::max(window, len);
    }
    size_t paper_len = (window + m.width() - 1) / m.width() + 1;
    report.regime = source_len >= paper_len ? "paper" : "desk";
    report.stats["window"] = window;
    report.stats["paper_scale_source_len"] = paper_len;

    auto sources = all_free_words(m.source_alphabet(), source_spec, source_len);
    // Distinct image windows only: morphic images repeat heavily.
    std::vector<size_t> todo;
    {
        std::unordered_set<std::string> seen;
        for (size_t i = 0; i < sources.size(); ++i)
            if (seen.insert(m.apply(sources[i]).str()).second) todo.push_back(i);
    }
    std::mutex mu;
    nlohmann::json first_witness;
    size_t witness_idx = sources.size();
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    auto check = [&](size_t t) {
        size_t i = todo[t];
        Word image = m.apply(sources[i]);
        uint64_t used = nodes.load();
        if (used >= budget) { exhausted = true; return false; }
        auto occ = find_occurrence(image, f, caps, budget - used);
        nodes += occ.stats.nodes;
        if (occ.outcome == SearchOutcome::BudgetExhausted) { exhausted = true; return false; }
        if (occ.outcome != SearchOutcome::Found) return false;
        std::lock_guard<std::mutex> lock(mu);
        if (i < witness_idx) {
            witness_idx = i;
            first_witness = {{"source", sources[i].str()}, {"image", image.str()},
                             {"assignment", detail::assignment_json(*occ.assignment)}};
        }
        return true;
    };
    auto hit = detail::first_hit_parallel(todo.size(), threads, check);
    if (hit) {
        report.verdict = Verdict::Violated;
        report.witnesses.push_back(first_witness);
    } else if (exhausted) {
        report.verdict = Verdict::Inconclusive;
        report.stats["note"] = "node budget exhausted";
    } else {
        report.verdict = Verdict::Corroborated;
    }
    report.stats["source_words"] = sources.size();
    report.stats["distinct_images"] = todo.size();
    report.stats["nodes"] = nodes.load();
    report.stats["wall_time_s"] = timer.seconds();
    return report;
}

/// Conjecture exploration for psi_k: images of (7/4^+)-free ternary words
/// under the (k+3)-uniform morphism, empirical directedness, caps from the
/// directedness measurement, bounded occurrence search.
inline ReplayReport replay_psi(int k, size_t source_len, size_t x_cap,
                               uint64_t budget = 1000000000, int threads = 1) {
    if (k < 3) throw std::invalid_argument("replay_psi: k must be >= 3");
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "psi";
    report.params = {{"k", k}, {"source_len", source_len}, {"x_cap", x_cap}};
    report.stats["note"] = "conjecture exploration, not a theorem replay";
    UniformMorphism m = psi_morphism(k);
    FreenessSpec source_spec(Rational(7, 4), 1);
    auto sources = all_free_words(Alphabet(3), source_spec, source_len);
    std::vector<Word> images;
    for (const auto& s : sources) images.push_back(m.apply(s));
    // Smallest d for which every tested image is d-directed.
    int d = 1;
    for (;; ++d) {
        bool all_ok = true;
        for (const auto& im : images)
            if (is_d_directed(im, d)) { all_ok = false; break; }
        if (all_ok) break;
        if (static_cast<size_t>(d) > m.width() * source_len) {
            report.verdict = Verdict::Inconclusive;
            report.stats["note"] = "no directedness level found";
            return report;
        }
    }
    report.stats["empirical_d"] = d;
    Formula f = psi(k);
    VarBounds caps;
    caps.max_len["x"] = x_cap;
    for (int j = 1; j <= k; ++j) caps.max_len["y" + std::to_string(j)] = d - 1;
    std::mutex mu;
    nlohmann::json first_witness;
    size_t witness_idx = sources.size();
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};
    auto check = [&](size_t i) {
        uint64_t used = nodes.load();
        if (used >= budget) { exhausted = true; return false; }
        auto occ = find_occurrence(images[i], f, caps, budget - used);
        nodes += occ.stats.nodes;
        if (occ.outcome == SearchOutcome::BudgetExhausted) { exhausted = true; return false; }
        if (occ.outcome != SearchOutcome::Found) return false;
        std::lock_guard<std::mutex> lock(mu);
        if (i < witness_idx) {
            witness_idx = i;
            first_witness = {{"source", sources[i].str()}, {"image", images[i].str()},
                             {"assignment", detail::assignment_json(*occ.assignment)}};
        }
        return true;
    };
    auto hit = detail::first_hit_parallel(sources.size(), threads, check);
    if (hit) {
        report.verdict = Verdict::Violated;
        report.witnesses.push_back(first_witness);
    } else if (exhausted) {
        report.verdict = Verdict::Inconclusive;
    } else {
        report.verdict = Verdict::Corroborated;
    }
    report.stats["source_words"] = sources.size();
    report.stats["nodes"] = nodes.load();
    report.stats["wall_time_s"] = timer.seconds();
    return report;
}

/// The binary non-2-avoidability check: backtracking finds the longest binary
/// word avoiding xyzy^Ux.zy^Uxy^Uz, corroborating that the formula is not
/// 2-avoidable when the search dies out below max_len.
inline ReplayReport replay_nonavoid2(size_t max_len) {
    detail::Stopwatch timer;
    ReplayReport report;
    report.pipeline = "nonavoid2";
    report.params = {{"max_len", max_len}};
    Formula f = parse_formula("xyzy^Ux.zy^Uxy^Uz");
    auto result = longest_avoiding(f, Alphabet(2), max_len);
    if (result.exceeded_max_len) {
        report.verdict = Verdict::Inconclusive;
        report.stats["note"] = "a word of length max_len still avoids the formula";
        report.witnesses.push_back({{"kind", "avoiding_word"}, {"word", result.witness.str()}});
    } else {
        report.verdict = Verdict::Corroborated;
        report.witnesses.push_back({{"kind", "longest_avoiding_word"},
                                    {"length", result.length},
                                    {"word", result.witness.str()}});
        report.stats["max_avoiding_length"] = result.length;
    }
    report.stats["nodes"] = result.stats.nodes;
    report.stats["wall_time_s"] = timer.seconds();
    return report;
}

/// The two undirected formulas whose simultaneous-avoidance theorems the
/// thm2/thm3 pipelines replay.
inline Formula formula_thm2() { return parse_formula("xyzy^Ux.zy^Uxy^Uz.y^R"); }
inline Formula formula_thm3() { return parse_formula("xyzx.yz^Uxy.z^R"); }

enum class CapChoice { PaperCaps, DerivedCaps, PointwiseMax };

namespace detail {

struct TheoremSetup {
    UniformMorphism morphism;
    Formula formula;
    FreenessSpec target;
    int d;
    BoundTemplate shape;
    Rational beta;
    std::array<const char*, 3> vars;  // long, short, long
};

inline VarBounds theorem_caps(const TheoremSetup& setup, CapChoice choice) {
    BoundReport derived = derive_caps(setup.shape, setup.beta, setup.d);
    long long paper_long = derived.paper_long_cap ? *derived.paper_long_cap : 0;
    long long paper_short = derived.paper_short_cap ? *derived.paper_short_cap : 0;
    long long long_cap = 0, short_cap = 0;
    switch (choice) {
    case CapChoice::PaperCaps: long_cap = paper_long; short_cap = paper_short; break;
    case CapChoice::DerivedCaps: long_cap = derived.long_var_max; short_cap = derived.short_var_max; break;
    case CapChoice::PointwiseMax:
        long_cap = std::max(paper_long, derived.long_var_max);
        short_cap = std::max<long long>(paper_short, derived.short_var_max);
        break;
    }
    VarBounds caps;
    caps.max_len[setup.vars[0]] = static_cast<size_t>(long_cap);
    caps.max_len[setup.vars[1]] = static_cast<size_t>(short_cap);
    caps.max_len[setup.vars[2]] = static_cast<size_t>(long_cap);
    return caps;
}

inline ReplayReport replay_theorem(const char* name, const TheoremSetup& setup,
                                   size_t source_len, CapChoice choice, uint64_t budget,
                                   int threads) {
    FreenessSpec source(Rational(7, 4), 1);
    ReplayReport transfer =
        replay_transfer(setup.morphism, source, source_len, setup.target, setup.d, threads);
    VarBounds caps = theorem_caps(setup, choice);
    ReplayReport nonocc = replay_formula_nonoccurrence(setup.morphism, setup.formula, caps,
                                                       source, source_len, budget, threads);
    ReplayReport report;
    report.pipeline = name;
    report.params = {{"source_len", source_len},
                     {"caps", nonocc.params["caps"]},
                     {"budget", budget}};
    report.regime = nonocc.regime;
    report.verdict = Verdict::Corroborated;
    for (const auto* part : {&transfer, &nonocc}) {
        if (part->verdict == Verdict::Violated) report.verdict = Verdict::Violated;
        else if (part->verdict == Verdict::Inconclusive && report.verdict != Verdict::Violated)
            report.verdict = Verdict::Inconclusive;
        for (const auto& w : part->witnesses) report.witnesses.push_back(w);
    }
    report.stats = {{"transfer", transfer.to_json()}, {"nonoccurrence", nonocc.to_json()}};
    return report;
}

} // namespace detail

/// Full replay of the binary 21-uniform construction: transfer check at
/// (22/15^+, 85) with 11-directedness plus exhaustive non-occurrence of
/// xyzy^Ux.zy^Uxy^Uz.y^R within the caps.
inline ReplayReport replay_thm2(size_t source_len, CapChoice choice = CapChoice::PointwiseMax,
                                uint64_t budget = 1000000000, int threads = 1) {
    detail::TheoremSetup setup{paper_morphism_21(), formula_thm2(),
                               FreenessSpec(Rational(22, 15), 85), 11,
                               BoundTemplate::Thm2Shape, Rational(22, 15),
                               {"x", "y", "z"}};
    return detail::replay_theorem("thm2", setup, source_len, choice, budget, threads);
}

/// Full replay of the ternary 9-uniform construction: transfer check at
/// (131/90^+, 28) with 4-directedness plus exhaustive non-occurrence of
/// xyzx.yz^Uxy.z^R within the caps.
inline ReplayReport replay_thm3(size_t source_len, CapChoice choice = CapChoice::PointwiseMax,
                                uint64_t budget = 1000000000, int threads = 1) {
    detail::TheoremSetup setup{paper_morphism_9(), formula_thm3(),
                               FreenessSpec(Rational(131, 90), 28), 4,
                               BoundTemplate::Thm3Shape, Rational(131, 90),
                               {"x", "z", "y"}};
    return detail::replay_theorem("thm3", setup, source_len, choice, budget, threads);
}

} // namespace avoid
