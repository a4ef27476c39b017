#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "avoid/word.hpp"

namespace avoid {

enum class Decoration { Plain, Reversed, Undirected };

struct VarOccurrence {
    std::string variable;
    Decoration decoration = Decoration::Plain;

    friend bool operator==(const VarOccurrence&, const VarOccurrence&) = default;
};

/// One dot-separated piece of a formula.
struct Fragment {
    std::vector<VarOccurrence> occurrences;

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

class FormulaSyntaxError : public std::runtime_error {
public:
    FormulaSyntaxError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

/// A formula with reversal: an ordered list of fragments over decorated
/// variable occurrences. Grammar:
///   formula  := fragment ('.' fragment)*
///   fragment := varocc+
///   varocc   := var ('^R' | '^U')?
///   var      := [a-w] | ('x'|'y'|'z') [0-9]+
/// Single-letter variables x, y, z are also accepted when not followed by a
/// digit; indexed and single-letter variables may not be mixed.
class Formula {
public:
    explicit Formula(std::vector<Fragment> fragments) : fragments_(std::move(fragments)) {
        if (fragments_.empty()) throw std::invalid_argument("Formula: no fragments");
        for (const auto& fr : fragments_) {
            if (fr.occurrences.empty()) throw std::invalid_argument("Formula: empty fragment");
            for (const auto& occ : fr.occurrences) variables_.insert(occ.variable);
        }
    }

    const std::vector<Fragment>& fragments() const { return fragments_; }
    const std::set<std::string>& variables() const { return variables_; }

    /// Variables in order of first appearance.
    std::vector<std::string> variables_in_order() const {
        std::vector<std::string> out;
        for (const auto& fr : fragments_)
            for (const auto& occ : fr.occurrences)
                if (std::find(out.begin(), out.end(), occ.variable) == out.end())
                    out.push_back(occ.variable);
        return out;
    }

    bool has_decorations() const {
        for (const auto& fr : fragments_)
            for (const auto& occ : fr.occurrences)
                if (occ.decoration != Decoration::Plain) return true;
        return false;
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < fragments_.size(); ++i) {
            if (i) s += '.';
            for (const auto& occ : fragments_[i].occurrences) {
                s += occ.variable;
                if (occ.decoration == Decoration::Reversed) s += "^R";
                else if (occ.decoration == Decoration::Undirected) s += "^U";
            }
        }
        return s;
    }

    friend bool operator==(const Formula& a, const Formula& b) {
        return a.fragments_ == b.fragments_;
    }

private:
    std::vector<Fragment> fragments_;
    std::set<std::string> variables_;
};

inline Formula parse_formula(const std::string& text) {
    std::vector<Fragment> fragments;
    Fragment current;
    std::set<char> bare_xyz, indexed_base;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '.') {
            if (current.occurrences.empty())
                throw FormulaSyntaxError("empty fragment", i);
            fragments.push_back(std::move(current));
            current = Fragment{};
            ++i;
            continue;
        }
        if (c < 'a' || c > 'z')
            throw FormulaSyntaxError(std::string("unexpected character '") + c + "'", i);
        std::string var(1, c);
        ++i;
        if ((c == 'x' || c == 'y' || c == 'z') && i < n && text[i] >= '0' && text[i] <= '9') {
            while (i < n && text[i] >= '0' && text[i] <= '9') var += text[i++];
            indexed_base.insert(c);
        } else if (c == 'x' || c == 'y' || c == 'z') {
            bare_xyz.insert(c);
        }
        Decoration dec = Decoration::Plain;
        if (i < n && text[i] == '^') {
            ++i;
            if (i >= n || (text[i] != 'R' && text[i] != 'U'))
                throw FormulaSyntaxError("expected R or U after '^'", i);
            dec = text[i] == 'R' ? Decoration::Reversed : Decoration::Undirected;
            ++i;
        }
        current.occurrences.push_back(VarOccurrence{var, dec});
    }
    if (current.occurrences.empty())
        throw FormulaSyntaxError("empty fragment", n);
    fragments.push_back(std::move(current));
    for (char c : bare_xyz)
        if (indexed_base.count(c))
            throw FormulaSyntaxError(std::string("variable '") + c +
                                         "' used both bare and indexed",
                                     0);
    return Formula(std::move(fragments));
}

/// phi_k = x0x1 . x1x2 . ... . x{k-1}x0 . x0^R . ... . x{k-1}^R
inline Formula phi(int k) {
    if (k < 2) throw std::invalid_argument("phi: k must be >= 2");
    std::vector<Fragment> fragments;
    for (int j = 0; j < k; ++j) {
        Fragment fr;
        fr.occurrences.push_back({"x" + std::to_string(j), Decoration::Plain});
        fr.occurrences.push_back({"x" + std::to_string((j + 1) % k), Decoration::Plain});
        fragments.push_back(std::move(fr));
    }
    for (int j = 0; j < k; ++j)
        fragments.push_back(Fragment{{{"x" + std::to_string(j), Decoration::Reversed}}});
    return Formula(std::move(fragments));
}

/// psi_k = x y1 y2 ... yk x . y1^R . y2^R . ... . yk^R
inline Formula psi(int k) {
    if (k < 1) throw std::invalid_argument("psi: k must be >= 1");
    std::vector<Fragment> fragments;
    Fragment first;
    first.occurrences.push_back({"x", Decoration::Plain});
    for (int j = 1; j <= k; ++j)
        first.occurrences.push_back({"y" + std::to_string(j), Decoration::Plain});
    first.occurrences.push_back({"x", Decoration::Plain});
    fragments.push_back(std::move(first));
    for (int j = 1; j <= k; ++j)
        fragments.push_back(Fragment{{{"y" + std::to_string(j), Decoration::Reversed}}});
    return Formula(std::move(fragments));
}

/// Erases every R/U decoration, yielding a classical formula.
inline Formula flatten(const Formula& f) {
    std::vector<Fragment> fragments = f.fragments();
    for (auto& fr : fragments)
        for (auto& occ : fr.occurrences) occ.decoration = Decoration::Plain;
    return Formula(std::move(fragments));
}

enum class Orientation { Forward, Backward };

/// Position of one undirected occurrence: fragment index plus position within.
struct UPosition {
    size_t fragment;
    size_t position;
    friend auto operator<=>(const UPosition&, const UPosition&) = default;
};

/// Realizes an occurrence: a nonempty image per variable plus an orientation
/// choice for every undirected occurrence (each one independent).
struct Assignment {
    std::map<std::string, Word> images;
    std::map<UPosition, Orientation> orientations;
};

/// Concatenation of images along a fragment; reversed occurrences contribute
/// the mirror image, undirected ones follow the recorded orientation.
inline Word instantiate(const Fragment& fragment, size_t fragment_index, const Assignment& a) {
    Word out;
    for (size_t p = 0; p < fragment.occurrences.size(); ++p) {
        const auto& occ = fragment.occurrences[p];
        auto it = a.images.find(occ.variable);
        if (it == a.images.end())
            throw std::invalid_argument("instantiate: missing image for " + occ.variable);
        if (it->second.empty())
            throw std::invalid_argument("instantiate: empty image for " + occ.variable);
        bool reversed = false;
        switch (occ.decoration) {
        case Decoration::Plain: break;
        case Decoration::Reversed: reversed = true; break;
        case Decoration::Undirected: {
            auto o = a.orientations.find(UPosition{fragment_index, p});
            if (o == a.orientations.end())
                throw std::invalid_argument("instantiate: missing orientation");
            reversed = o->second == Orientation::Backward;
            break;
        }
        }
        out = out + (reversed ? reverse(it->second) : it->second);
    }
    return out;
}

} // namespace avoid
