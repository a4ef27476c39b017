#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace avoid {

/// Letters are 0..size-1; they serialize as characters 0-9 then a-z.
struct Alphabet {
    int size = 2;

    static constexpr int kMaxSize = 36;

    Alphabet() = default;
    explicit Alphabet(int s) : size(s) {
        if (s < 1 || s > kMaxSize)
            throw std::invalid_argument("Alphabet: size must be in [1,36]");
    }

    static char letter_to_char(int letter) {
        return letter < 10 ? static_cast<char>('0' + letter)
                           : static_cast<char>('a' + letter - 10);
    }
    static int char_to_letter(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'z') return c - 'a' + 10;
        throw std::invalid_argument(std::string("Alphabet: bad letter character '") + c + "'");
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// A finite word over a small integer alphabet. Immutable in spirit: every
/// operation returns a fresh value.
class Word {
public:
    Word() = default;
    Word(std::vector<uint8_t> letters, Alphabet alphabet)
        : letters_(std::move(letters)), alphabet_(alphabet) {
        for (uint8_t c : letters_)
            if (c >= alphabet_.size)
                throw std::invalid_argument("Word: letter outside alphabet");
    }

    /// Parses the 0-9a-z text encoding.
    static Word parse(const std::string& text, Alphabet alphabet) {
        std::vector<uint8_t> letters;
        letters.reserve(text.size());
        for (char c : text) {
            int l = Alphabet::char_to_letter(c);
            letters.push_back(static_cast<uint8_t>(l));
        }
        return Word(std::move(letters), alphabet);
    }

    /// Parses with the alphabet inferred as {0..max letter}.
    static Word parse(const std::string& text) {
        int max_letter = 1;
        for (char c : text) max_letter = std::max(max_letter, Alphabet::char_to_letter(c) + 1);
        return Word::parse(text, Alphabet(max_letter));
    }

    const std::vector<uint8_t>& letters() const { return letters_; }
    Alphabet alphabet() const { return alphabet_; }
    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    uint8_t operator[](size_t i) const { return letters_[i]; }

    Word subword(size_t pos, size_t len) const {
        if (pos + len > letters_.size()) throw std::out_of_range("Word::subword");
        return Word(std::vector<uint8_t>(letters_.begin() + pos, letters_.begin() + pos + len),
                    alphabet_);
    }

    Word& append(uint8_t letter) {
        if (letter >= alphabet_.size) throw std::invalid_argument("Word: letter outside alphabet");
        letters_.push_back(letter);
        return *this;
    }
    void pop_back() { letters_.pop_back(); }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<uint8_t> letters(a.letters_);
        letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
        Alphabet alpha(std::max(a.alphabet_.size, b.alphabet_.size));
        return Word(std::move(letters), alpha);
    }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (uint8_t c : letters_) s.push_back(Alphabet::letter_to_char(c));
        return s;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    std::vector<uint8_t> letters_;
    Alphabet alphabet_;
};

/// Mirror image.
inline Word reverse(const Word& w) {
    std::vector<uint8_t> letters(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(letters), w.alphabet());
}

/// Prefix of length `length` of the periodic word (01...k)^omega over k+1 letters.
inline Word periodic_word(int k, int length) {
    if (k < 1) throw std::invalid_argument("periodic_word: k must be >= 1");
    if (length < 1) throw std::invalid_argument("periodic_word: length must be >= 1");
    std::vector<uint8_t> letters(length);
    for (int i = 0; i < length; ++i) letters[i] = static_cast<uint8_t>(i % (k + 1));
    return Word(std::move(letters), Alphabet(k + 1));
}

} // namespace avoid
