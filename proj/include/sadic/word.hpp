#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sadic/alphabet.hpp"

namespace sadic {

using Letters = std::vector<std::int32_t>;

// A finite word over a declared alphabet. The empty word is allowed.
class Word {
public:
    Word(Alphabet alphabet, Letters letters)
        : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
        for (auto x : letters_)
            if (x < 0 || static_cast<std::size_t>(x) >= alphabet_.size())
                throw std::invalid_argument("letter index out of range");
    }

    static Word empty(Alphabet alphabet) { return Word(std::move(alphabet), {}); }

    // Single-character alphabets read letter-per-character; otherwise names
    // are separated by '.'.
    static Word parse(const Alphabet& alphabet, const std::string& text) {
        Letters letters;
        if (text.empty()) return Word(alphabet, {});
        if (alphabet.single_char()) {
            letters.reserve(text.size());
            for (char c : text) letters.push_back(alphabet.require(std::string(1, c)));
        } else {
            std::size_t start = 0;
            while (start <= text.size()) {
                auto dot = text.find('.', start);
                auto piece = text.substr(start, dot == std::string::npos ? dot : dot - start);
                letters.push_back(alphabet.require(piece));
                if (dot == std::string::npos) break;
                start = dot + 1;
            }
        }
        return Word(alphabet, std::move(letters));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::int32_t operator[](std::size_t i) const { return letters_[i]; }

    Word subword(std::size_t pos, std::size_t len) const {
        if (pos + len > size()) throw std::invalid_argument("subword out of range");
        return Word(alphabet_, Letters(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                       letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i && !alphabet_.single_char()) out += '.';
            out += alphabet_.name(letters_[i]);
        }
        return out;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    Alphabet alphabet_;
    Letters letters_;
};

// |w|_u with overlaps. The empty pattern has no agreed convention and is
// rejected.
inline std::size_t count_occurrences(const Word& w, const Word& u) {
    if (u.empty()) throw std::invalid_argument("occurrence pattern must be non-empty");
    if (w.alphabet() != u.alphabet()) throw std::invalid_argument("alphabet mismatch");
    if (u.size() > w.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (w[i + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

inline std::size_t count_occurrences(const Letters& w, const Letters& u) {
    if (u.empty()) throw std::invalid_argument("occurrence pattern must be non-empty");
    if (u.size() > w.size()) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (w[i + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

// Occurrences of u in the periodic word w^inf whose start position lies in
// the first period. This is the cylinder weight of the characteristic
// measure of w.
inline std::size_t cyclic_occurrences(const Letters& w, const Letters& u) {
    if (w.empty()) throw std::invalid_argument("periodic word must be non-empty");
    if (u.empty()) throw std::invalid_argument("occurrence pattern must be non-empty");
    std::size_t count = 0;
    for (std::size_t start = 0; start < w.size(); ++start) {
        bool hit = true;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (w[(start + j) % w.size()] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

// Shortest prefix p of w with w = p^(|w|/|p|).
inline Letters primitive_root(const Letters& w) {
    if (w.empty()) throw std::invalid_argument("primitive root of the empty word");
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return Letters(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    }
    return w;  // unreachable
}

inline Word primitive_root(const Word& w) { return Word(w.alphabet(), primitive_root(w.letters())); }

inline bool is_proper_power(const Letters& w) { return primitive_root(w).size() < w.size(); }
inline bool is_proper_power(const Word& w) { return is_proper_power(w.letters()); }

// True when b is a cyclic rotation of a.
inline bool is_rotation_of(const Letters& a, const Letters& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    Letters doubled = a;
    doubled.insert(doubled.end(), a.begin(), a.end());
    return count_occurrences(doubled, b) > 0;
}

}  // namespace sadic
