#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "avoid/word.hpp"

namespace avoid {

/// Letter-to-word substitution with all images of the same length (width).
class UniformMorphism {
public:
    UniformMorphism(Alphabet source, Alphabet target, std::vector<Word> images)
        : source_(source), target_(target), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != source_.size)
            throw std::invalid_argument("UniformMorphism: one image per source letter required");
        if (images_.empty() || images_[0].empty())
            throw std::invalid_argument("UniformMorphism: images must be nonempty");
        width_ = images_[0].size();
        for (const auto& im : images_) {
            if (im.size() != width_)
                throw std::invalid_argument("UniformMorphism: images must have equal length");
            for (uint8_t c : im.letters())
                if (c >= target_.size)
                    throw std::invalid_argument("UniformMorphism: image letter outside target");
        }
    }

    Alphabet source_alphabet() const { return source_; }
    Alphabet target_alphabet() const { return target_; }
    size_t width() const { return width_; }
    const Word& image(int letter) const {
        if (letter < 0 || letter >= source_.size)
            throw std::out_of_range("UniformMorphism: letter outside source alphabet");
        return images_[letter];
    }

    Word apply(const Word& w) const {
        std::vector<uint8_t> out;
        out.reserve(w.size() * width_);
        for (uint8_t c : w.letters()) {
            if (c >= source_.size)
                throw std::invalid_argument("UniformMorphism: word letter outside source");
            const auto& im = images_[c].letters();
            out.insert(out.end(), im.begin(), im.end());
        }
        return Word(std::move(out), target_);
    }

    /// File format: one "<letter> -> <image>" line per source letter in
    /// order; blank lines and '#' comments ignored.
    static UniformMorphism parse(std::istream& in) {
        std::vector<Word> images;
        std::vector<int> letters;
        std::string line;
        int max_target = 1;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            auto arrow = line.find("->");
            if (arrow == std::string::npos)
                throw std::invalid_argument("morphism file: expected '<letter> -> <image>'");
            auto strip = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            std::string lhs = strip(line.substr(0, arrow));
            std::string rhs = strip(line.substr(arrow + 2));
            if (lhs.size() != 1 || rhs.empty())
                throw std::invalid_argument("morphism file: bad line '" + line + "'");
            letters.push_back(Alphabet::char_to_letter(lhs[0]));
            for (char c : rhs) max_target = std::max(max_target, Alphabet::char_to_letter(c) + 1);
            images.push_back(Word::parse(rhs, Alphabet(Alphabet::kMaxSize)));
        }
        if (images.empty()) throw std::invalid_argument("morphism file: no images");
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i] != static_cast<int>(i))
                throw std::invalid_argument("morphism file: lines must be in source-letter order");
        Alphabet target(max_target);
        std::vector<Word> reimaged;
        for (const auto& im : images) reimaged.push_back(Word(im.letters(), target));
        return UniformMorphism(Alphabet(static_cast<int>(images.size())), target,
                               std::move(reimaged));
    }

    static UniformMorphism parse(const std::string& text) {
        std::istringstream in(text);
        return parse(in);
    }

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
    size_t width_;
};

/// The 21-uniform binary morphism on four letters.
inline UniformMorphism paper_morphism_21() {
    Alphabet target(2);
    return UniformMorphism(Alphabet(4), target,
                           {Word::parse("000010111000111100111", target),
                            Word::parse("000010110011011110011", target),
                            Word::parse("000010110001111010011", target),
                            Word::parse("000010110001001101111", target)});
}

/// The 9-uniform ternary morphism on four letters.
inline UniformMorphism paper_morphism_9() {
    Alphabet target(3);
    return UniformMorphism(Alphabet(4), target,
                           {Word::parse("011122202", target), Word::parse("010121202", target),
                            Word::parse("001112122", target), Word::parse("000101120", target)});
}

/// The (k+3)-uniform ternary-source morphism over five letters, k = 3t+i with
/// t >= 1 and 0 <= i <= 2:
///   0 -> (012)^{t+1-i} (0123)^i
///   1 -> (013)^{t+1-i} (0134)^i
///   2 -> (014)^{t+1-i} (0142)^i
inline UniformMorphism psi_morphism(int k) {
    if (k < 3) throw std::invalid_argument("psi_morphism: k must be >= 3");
    int i = k % 3;
    int t = (k - i) / 3;
    Alphabet target(5);
    auto build = [&](const std::string& tri, const std::string& quad) {
        std::string s;
        for (int r = 0; r < t + 1 - i; ++r) s += tri;
        for (int r = 0; r < i; ++r) s += quad;
        return Word::parse(s, target);
    };
    return UniformMorphism(Alphabet(3), target,
                           {build("012", "0123"), build("013", "0134"), build("014", "0142")});
}

} // namespace avoid
