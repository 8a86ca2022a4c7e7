#pragma once

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/errors.hpp"
#include "sadic/morphism.hpp"

namespace sadic {

// Admitted factors of each length up to a bound, as seen at a fixed level of
// a directive sequence up to a finite generation depth. Factor-closed by
// construction; the stabilization flag records whether the last depth step
// still added words, never a completeness claim.
class LanguageTable {
public:
    LanguageTable(Alphabet alphabet, std::size_t max_len)
        : alphabet_(std::move(alphabet)), max_len_(max_len), by_len_(max_len + 1) {
        if (max_len == 0) throw std::invalid_argument("length bound must be >= 1");
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t max_len() const { return max_len_; }
    std::size_t depth_used() const { return depth_used_; }
    bool stabilized() const { return stabilized_; }

    bool contains(const Letters& w) const {
        return w.size() >= 1 && w.size() <= max_len_ && by_len_[w.size()].count(w) > 0;
    }
    bool contains(const Word& w) const { return w.alphabet() == alphabet_ && contains(w.letters()); }

    const std::set<Letters>& words_of_length(std::size_t n) const {
        if (n < 1 || n > max_len_) throw std::invalid_argument("length out of range");
        return by_len_[n];
    }

    // True when anything was new.
    bool insert_factors(const Letters& w) {
        bool changed = false;
        for (std::size_t len = 1; len <= std::min(max_len_, w.size()); ++len)
            for (std::size_t i = 0; i + len <= w.size(); ++i)
                changed |= by_len_[len]
                               .insert(Letters(w.begin() + static_cast<std::ptrdiff_t>(i),
                                               w.begin() + static_cast<std::ptrdiff_t>(i + len)))
                               .second;
        return changed;
    }

    void set_generation_info(std::size_t depth, bool stabilized) {
        depth_used_ = depth;
        stabilized_ = stabilized;
    }

    std::size_t total_words() const {
        std::size_t n = 0;
        for (const auto& s : by_len_) n += s.size();
        return n;
    }

private:
    Alphabet alphabet_;
    std::size_t max_len_;
    std::vector<std::set<Letters>> by_len_;
    std::size_t depth_used_ = 0;
    bool stabilized_ = false;
};

// All factors of length <= L of sigma_[n,m)(a) for n < m <= N, a in A_m.
// Throws DepthExhaustedError when no factor of length L showed up, which
// signals insufficient growth at this depth.
inline LanguageTable generate_language(const DirectiveSequence& seq, std::size_t level,
                                       std::size_t L, std::size_t N) {
    if (N <= level) throw std::invalid_argument("generation depth must exceed the level");
    if (N > seq.max_depth())
        throw DepthExhaustedError("generation depth beyond materializable depth", seq.max_depth());
    LanguageTable table(seq.alphabet(level), L);
    bool changed_last_step = false;
    for (std::size_t m = level + 1; m <= N; ++m) {
        bool changed = false;
        const Morphism& t = seq.telescope(level, m);
        for (std::size_t a = 0; a < t.source().size(); ++a)
            changed |= table.insert_factors(t.image(static_cast<std::int32_t>(a)).letters());
        if (m == N) changed_last_step = changed;
    }
    table.set_generation_info(N, !changed_last_step);
    if (table.words_of_length(L).empty())
        throw DepthExhaustedError(
            "no factor of length " + std::to_string(L) + " up to depth " + std::to_string(N), N);
    return table;
}

// Every word over the alphabet, up to length L.
inline LanguageTable full_shift_language(const Alphabet& alphabet, std::size_t L) {
    LanguageTable table(alphabet, L);
    std::vector<Letters> current{{}};
    for (std::size_t len = 1; len <= L; ++len) {
        std::vector<Letters> next;
        for (const auto& w : current)
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                Letters v = w;
                v.push_back(static_cast<std::int32_t>(a));
                table.insert_factors(v);  // inserts v and (re-)inserts its factors
                next.push_back(std::move(v));
            }
        current = std::move(next);
    }
    table.set_generation_info(0, true);
    return table;
}

// Factors of length <= L' of sigma-images of admitted words. Input length is
// capped so the output is complete up to L'.
inline LanguageTable image_language(const Morphism& sigma, const LanguageTable& table,
                                    std::size_t out_len) {
    if (table.alphabet() != sigma.source())
        throw std::invalid_argument("language table not over morphism source");
    std::size_t cap = 1;
    if (out_len >= 2)
        cap = (out_len - 2 + sigma.min_image_length() - 1) / sigma.min_image_length() + 2;
    if (table.max_len() < cap)
        throw CoverageError("language table too short for requested output length", cap);
    LanguageTable out(sigma.target(), out_len);
    for (std::size_t len = 1; len <= cap; ++len)
        for (const auto& w : table.words_of_length(len))
            out.insert_factors(sigma.apply(Word(table.alphabet(), w)).letters());
    out.set_generation_info(table.depth_used(), table.stabilized());
    return out;
}

// p_X(n) together with the entropy estimate log p(n) / n (natural log).
inline std::pair<std::size_t, double> complexity(const LanguageTable& table, std::size_t n) {
    if (n < 1 || n > table.max_len()) throw std::invalid_argument("complexity length out of range");
    std::size_t p = table.words_of_length(n).size();
    double est = p == 0 ? 0.0 : std::log(static_cast<double>(p)) / static_cast<double>(n);
    return {p, est};
}

struct EntropyBound {
    double value = 0.0;          // min over n of log(card A_n) / beta_-(n), natural log
    std::size_t level = 0;       // the minimizing level
    std::size_t alphabet_size = 0;
    Int beta_minus;              // exact data behind the value
    std::size_t depth_used = 0;
};

inline EntropyBound entropy_upper_bound(const DirectiveSequence& seq, std::size_t N) {
    if (N < 1 || N > seq.max_depth()) throw std::invalid_argument("entropy bound depth out of range");
    EntropyBound best;
    best.depth_used = N;
    for (std::size_t n = 1; n <= N; ++n) {
        std::size_t card = seq.alphabet(n).size();
        Int beta = seq.beta_minus(n);
        double value = std::log(static_cast<double>(card)) / to_double(beta);
        if (n == 1 || value < best.value) {
            best.value = value;
            best.level = n;
            best.alphabet_size = card;
            best.beta_minus = beta;
        }
    }
    return best;
}

}  // namespace sadic
