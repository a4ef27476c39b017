#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avoid/factor_index.hpp"
#include "avoid/formula.hpp"
#include "avoid/word.hpp"

namespace avoid {

/// Per-variable cap on image length.
struct VarBounds {
    std::map<std::string, size_t> max_len;

    static VarBounds uniform(const Formula& f, size_t cap) {
        VarBounds b;
        for (const auto& v : f.variables()) b.max_len[v] = cap;
        return b;
    }

    size_t at(const std::string& v) const {
        auto it = max_len.find(v);
        if (it == max_len.end())
            throw std::invalid_argument("VarBounds: no bound for variable " + v);
        return it->second;
    }
};

struct SearchStats {
    uint64_t nodes = 0;
    uint64_t pruned = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        pruned += o.pruned;
        return *this;
    }
};

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

struct OccurrenceResult {
    SearchOutcome outcome;
    std::optional<Assignment> assignment;
    SearchStats stats;
};

namespace detail {

/// Backtracking occurrence search. Variables are assigned in formula order;
/// candidate images are the distinct factors of w (plus reversed factors for
/// variables that never occur plain), shortest first, lexicographic within a
/// length. A fragment prefix whose variables are all assigned is matched
/// incrementally in the suffix automaton, over every orientation combination
/// of its undirected occurrences; an empty state set prunes the branch.
class OccurrenceSearcher {
public:
    OccurrenceSearcher(const Word& w, const Formula& f, const VarBounds& bounds, uint64_t budget,
                       const std::map<std::string, Word>* pinned = nullptr)
        : w_(w), f_(f), bounds_(bounds), budget_(budget), index_(w), pinned_(pinned) {}

    OccurrenceResult run() {
        vars_ = f_.variables_in_order();
        if (w_.empty()) return {SearchOutcome::NotFound, std::nullopt, stats_};
        build_candidates();
        images_.clear();
        frag_states_.assign(f_.fragments().size(), {index_.root()});
        frag_depth_.assign(f_.fragments().size(), 0);
        exhausted_ = false;
        if (dfs(0)) return {SearchOutcome::Found, build_assignment(), stats_};
        return {exhausted_ ? SearchOutcome::BudgetExhausted : SearchOutcome::NotFound,
                std::nullopt, stats_};
    }

private:
    using State = FactorIndex::State;

    // Distinct candidate images per variable, capped by the bound and by
    // fragment length feasibility (all images in a fragment must fit in w).
    void build_candidates() {
        for (const auto& v : vars_) {
            if (pinned_ && pinned_->count(v)) {
                candidates_[v] = {pinned_->at(v)};
                continue;
            }
            size_t cap = std::min(bounds_.at(v), w_.size());
            for (const auto& fr : f_.fragments()) {
                size_t cnt = 0;
                for (const auto& occ : fr.occurrences) cnt += occ.variable == v;
                if (cnt == 0) continue;
                size_t others = fr.occurrences.size() - cnt;
                if (others >= w_.size()) { cap = 0; break; }
                cap = std::min(cap, (w_.size() - others) / cnt);
            }
            bool occurs_plain = false;
            for (const auto& fr : f_.fragments())
                for (const auto& occ : fr.occurrences)
                    if (occ.variable == v && occ.decoration == Decoration::Plain)
                        occurs_plain = true;
            std::set<Word> images;
            for (size_t pos = 0; pos < w_.size(); ++pos)
                for (size_t len = 1; len <= cap && pos + len <= w_.size(); ++len)
                    images.insert(w_.subword(pos, len));
            if (!occurs_plain) {
                // The image itself need not be a factor, only its mirror.
                std::set<Word> extra;
                for (const auto& im : images) extra.insert(reverse(im));
                images.insert(extra.begin(), extra.end());
            }
            std::vector<Word> sorted(images.begin(), images.end());
            std::stable_sort(sorted.begin(), sorted.end(), [](const Word& a, const Word& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
            });
            candidates_[v] = std::move(sorted);
        }
    }

    bool dfs(size_t var_idx) {
        if (var_idx == vars_.size()) return true;
        const std::string& v = vars_[var_idx];
        auto saved_states = frag_states_;
        auto saved_depth = frag_depth_;
        for (const Word& image : candidates_[v]) {
            if (++stats_.nodes > budget_) { exhausted_ = true; return false; }
            images_[v] = image;
            if (advance_fragments()) {
                if (dfs(var_idx + 1)) return true;
                if (exhausted_) return false;
            } else {
                ++stats_.pruned;
            }
            frag_states_ = saved_states;
            frag_depth_ = saved_depth;
        }
        images_.erase(v);
        return false;
    }

    // Extends every fragment's matched prefix as far as the current partial
    // assignment allows. Returns false if some fragment can no longer occur.
    bool advance_fragments() {
        const auto& fragments = f_.fragments();
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            const auto& occs = fragments[fi].occurrences;
            size_t d = frag_depth_[fi];
            while (d < occs.size() && images_.count(occs[d].variable)) {
                const Word& im = images_.at(occs[d].variable);
                std::vector<State> next;
                auto push = [&](State s) {
                    if (s != FactorIndex::kDead &&
                        std::find(next.begin(), next.end(), s) == next.end())
                        next.push_back(s);
                };
                for (State s : frag_states_[fi]) {
                    switch (occs[d].decoration) {
                    case Decoration::Plain: push(index_.walk(s, im)); break;
                    case Decoration::Reversed: push(index_.walk(s, reverse(im))); break;
                    case Decoration::Undirected:
                        push(index_.walk(s, im));
                        push(index_.walk(s, reverse(im)));
                        break;
                    }
                }
                if (next.empty()) return false;
                frag_states_[fi] = std::move(next);
                ++d;
            }
            frag_depth_[fi] = d;
        }
        return true;
    }

    // All fragments matched; recover the first valid orientation combination
    // per fragment (positions left to right, forward before backward).
    Assignment build_assignment() const {
        Assignment a;
        a.images = images_;
        const auto& fragments = f_.fragments();
        for (size_t fi = 0; fi < fragments.size(); ++fi) {
            const auto& occs = fragments[fi].occurrences;
            std::vector<size_t> upos;
            for (size_t p = 0; p < occs.size(); ++p)
                if (occs[p].decoration == Decoration::Undirected) upos.push_back(p);
            bool found = false;
            for (uint64_t mask = 0; mask < (uint64_t{1} << upos.size()) && !found; ++mask) {
                Assignment trial = a;
                for (size_t t = 0; t < upos.size(); ++t)
                    trial.orientations[UPosition{fi, upos[t]}] =
                        (mask >> t) & 1 ? Orientation::Backward : Orientation::Forward;
                if (index_.contains(instantiate(fragments[fi], fi, trial))) {
                    for (size_t t = 0; t < upos.size(); ++t)
                        a.orientations[UPosition{fi, upos[t]}] =
                            trial.orientations.at(UPosition{fi, upos[t]});
                    found = true;
                }
            }
            // The state sets guarantee some combination works.
        }
        return a;
    }

    const Word& w_;
    const Formula& f_;
    const VarBounds& bounds_;
    uint64_t budget_;
    FactorIndex index_;
    std::vector<std::string> vars_;
    std::map<std::string, std::vector<Word>> candidates_;
    std::map<std::string, Word> images_;
    std::vector<std::vector<State>> frag_states_;
    std::vector<size_t> frag_depth_;
    SearchStats stats_;
    bool exhausted_ = false;
    const std::map<std::string, Word>* pinned_;
};

/// Occurrence search restricted to assignments in which some instantiated
/// fragment is a suffix of w. When every proper prefix of w avoids f, this
/// restriction is complete: a fresh occurrence must use a factor that is new
/// at the last position, and such a factor is a suffix.
class SuffixAnchoredChecker {
public:
    SuffixAnchoredChecker(const Word& w, const Formula& f) : w_(w), f_(f), index_(w) {}

    bool run() {
        const auto& fragments = f_.fragments();
        for (size_t af = 0; af < fragments.size(); ++af) {
            const auto& occs = fragments[af].occurrences;
            for (size_t s = occs.size(); s <= w_.size(); ++s) {
                suffix_ = w_.subword(w_.size() - s, s);
                images_.clear();
                if (dfs_slots(occs, 0, occs.size() - 1, 0, s)) return true;
            }
        }
        return false;
    }

    const SearchStats& stats() const { return stats_; }

private:
    // Splits the suffix across the anchor fragment's slots; slot contents
    // determine variable images directly, so mismatches prune immediately.
    // Slots are consumed from both ends: an end slot whose variable is known
    // has a fixed position and is checked before any further enumeration.
    bool dfs_slots(const std::vector<VarOccurrence>& occs, size_t lo, size_t hi, size_t lo_pos,
                   size_t hi_pos) {
        if (lo > hi) return lo_pos == hi_pos && verify_pinned();
        if (hi_pos - lo_pos < hi - lo + 1) return false;
        // Consume assigned end slots first, right end before left so that the
        // trailing border of the suffix prunes before interior enumeration.
        for (bool from_right : {true, false}) {
            const auto& occ = occs[from_right ? hi : lo];
            auto it = images_.find(occ.variable);
            if (it == images_.end()) continue;
            const Word& u = it->second;
            if (hi_pos - lo_pos < u.size() + (hi - lo)) return false;
            size_t at = from_right ? hi_pos - u.size() : lo_pos;
            ++stats_.nodes;
            bool ok = false;
            switch (occ.decoration) {
            case Decoration::Plain: ok = slice_equals(at, u, false); break;
            case Decoration::Reversed: ok = slice_equals(at, u, true); break;
            case Decoration::Undirected:
                ok = slice_equals(at, u, false) || slice_equals(at, u, true);
                break;
            }
            if (!ok) { ++stats_.pruned; return false; }
            return from_right ? dfs_slots(occs, lo, hi - 1, lo_pos, at)
                              : dfs_slots(occs, lo + 1, hi, at + u.size(), hi_pos);
        }
        // Both end variables are new; enumerate the left one. Remaining
        // occurrences of the same variable consume the same length, assigned
        // variables a known one, and other free slots at least one letter.
        // With no other free slots the length is forced.
        const auto& occ = occs[lo];
        size_t assigned_sum = 0, same_var = 0, free_slots = 0;
        for (size_t j = lo + 1; j <= hi; ++j) {
            if (occs[j].variable == occ.variable) {
                ++same_var;
            } else if (auto jt = images_.find(occs[j].variable); jt != images_.end()) {
                assigned_sum += jt->second.size();
            } else {
                ++free_slots;
            }
        }
        size_t budget = hi_pos - lo_pos;
        if (budget < assigned_sum + free_slots + same_var + 1) return false;
        size_t avail = budget - assigned_sum - free_slots;
        size_t max_len = avail / (same_var + 1);
        size_t min_len = 1;
        if (free_slots == 0) {
            if (avail % (same_var + 1) != 0) return false;
            min_len = max_len;
        }
        for (size_t len = min_len; len <= max_len; ++len) {
            ++stats_.nodes;
            Word slice = suffix_.subword(lo_pos, len);
            Word forward = occ.decoration == Decoration::Reversed ? reverse(slice) : slice;
            images_[occ.variable] = forward;
            if (dfs_slots(occs, lo + 1, hi, lo_pos + len, hi_pos)) return true;
            if (occ.decoration == Decoration::Undirected) {
                Word mirrored = reverse(slice);
                if (mirrored != forward) {
                    images_[occ.variable] = mirrored;
                    if (dfs_slots(occs, lo + 1, hi, lo_pos + len, hi_pos)) return true;
                }
            }
            images_.erase(occ.variable);
        }
        return false;
    }

    bool slice_equals(size_t pos, const Word& u, bool mirrored) const {
        for (size_t i = 0; i < u.size(); ++i)
            if (suffix_[pos + i] != (mirrored ? u[u.size() - 1 - i] : u[i])) return false;
        return true;
    }

    // The anchor fixed images for its own variables; when it mentions every
    // variable the remaining fragments are checked by direct state walks,
    // otherwise the leftover variables are searched over all factors as usual.
    bool verify_pinned() {
        if (images_.size() == f_.variables().size()) {
            for (const auto& fr : f_.fragments()) {
                std::vector<FactorIndex::State> states = {index_.root()};
                for (const auto& occ : fr.occurrences) {
                    const Word& im = images_.at(occ.variable);
                    std::vector<FactorIndex::State> next;
                    auto push = [&](FactorIndex::State s) {
                        if (s != FactorIndex::kDead &&
                            std::find(next.begin(), next.end(), s) == next.end())
                            next.push_back(s);
                    };
                    for (auto s : states) {
                        ++stats_.nodes;
                        switch (occ.decoration) {
                        case Decoration::Plain: push(index_.walk(s, im)); break;
                        case Decoration::Reversed: push(index_.walk(s, reverse(im))); break;
                        case Decoration::Undirected:
                            push(index_.walk(s, im));
                            push(index_.walk(s, reverse(im)));
                            break;
                        }
                    }
                    if (next.empty()) return false;
                    states = std::move(next);
                }
            }
            return true;
        }
        VarBounds bounds = VarBounds::uniform(f_, w_.size());
        OccurrenceSearcher searcher(w_, f_, bounds, std::numeric_limits<uint64_t>::max(),
                                    &images_);
        auto r = searcher.run();
        stats_ += r.stats;
        return r.outcome == SearchOutcome::Found;
    }

    const Word& w_;
    const Formula& f_;
    FactorIndex index_;
    Word suffix_ = Word({}, Alphabet(1));
    std::map<std::string, Word> images_;
    SearchStats stats_;
};

} // namespace detail

/// True iff w contains an occurrence of f in which some instantiated fragment
/// ends at the last letter of w. Given that the prefix of w without its last
/// letter avoids f, this decides whether w avoids f (see the checker's note).
inline bool has_suffix_anchored_occurrence(const Word& w, const Formula& f,
                                           SearchStats* stats = nullptr) {
    detail::SuffixAnchoredChecker checker(w, f);
    bool found = checker.run();
    if (stats) *stats += checker.stats();
    return found;
}

/// First occurrence of f in w within the per-variable bounds, in deterministic
/// search order, or nothing. A budget caps the number of candidate trials.
inline OccurrenceResult find_occurrence(const Word& w, const Formula& f, const VarBounds& bounds,
                                        uint64_t budget = std::numeric_limits<uint64_t>::max()) {
    detail::OccurrenceSearcher searcher(w, f, bounds, budget);
    return searcher.run();
}

inline bool avoids(const Word& w, const Formula& f, const VarBounds& bounds) {
    auto r = find_occurrence(w, f, bounds);
    if (r.outcome == SearchOutcome::BudgetExhausted)
        throw std::runtime_error("avoids: search budget exhausted");
    return r.outcome == SearchOutcome::NotFound;
}

struct LongestAvoidingResult {
    bool exceeded_max_len;
    size_t length;  // meaningful when !exceeded_max_len
    Word witness;   // longest avoiding word found (or the length-max_len one)
    SearchStats stats;
};

/// Maximum length L <= max_len of a word over the alphabet all of whose
/// prefixes avoid f (bounds = word length), by depth-first backtracking with
/// the first letter fixed to 0. Reports exceeded_max_len when some word of
/// length max_len still avoids f.
inline LongestAvoidingResult longest_avoiding(const Formula& f, Alphabet alphabet,
                                              size_t max_len) {
    if (max_len < 1) throw std::invalid_argument("longest_avoiding: max_len must be >= 1");
    LongestAvoidingResult result{false, 0, Word({}, alphabet), {}};
    Word current({}, alphabet);
    // Every explored word's proper prefixes avoid f, so a fresh occurrence
    // after an extension must use a fragment image ending at the new last
    // letter; the suffix-anchored check is therefore exact and far cheaper
    // than a full re-search per node.
    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (current.size() > result.length ||
            (current.size() == result.length && result.witness.empty())) {
            result.length = current.size();
            result.witness = current;
        }
        if (current.size() == max_len) return true; // exceeds
        for (int c = 0; c < alphabet.size; ++c) {
            if (depth == 0 && c > 0) break; // first letter fixed by symmetry
            current.append(static_cast<uint8_t>(c));
            if (!has_suffix_anchored_occurrence(current, f, &result.stats)) {
                if (self(self, depth + 1)) return true;
            }
            current.pop_back();
        }
        return false;
    };
    result.exceeded_max_len = dfs(dfs, 0);
    return result;
}

} // namespace avoid
