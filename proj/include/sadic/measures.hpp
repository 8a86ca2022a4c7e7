#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sadic/errors.hpp"
#include "sadic/morphism.hpp"
#include "sadic/rational.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Letter frequency vector: one exact rational per letter, in alphabet order.
struct FrequencyVector {
    Alphabet alphabet;
    std::vector<Rational> coords;

    Rational total() const {
        Rational t(0);
        for (const auto& c : coords) t += c;
        return t;
    }

    friend bool operator==(const FrequencyVector& a, const FrequencyVector& b) {
        return a.alphabet == b.alphabet && a.coords == b.coords;
    }
};

// Exact cylinder weights mu([w]) for 1 <= |w| <= L. A finite stand-in for an
// invariant measure: zero weights are not stored, absent means 0. The table
// only deserves the name when it passes the Kirchhoff check.
class WeightTable {
public:
    WeightTable(Alphabet alphabet, std::size_t max_len, Rational mass = Rational(0))
        : alphabet_(std::move(alphabet)), max_len_(max_len), mass_(std::move(mass)) {
        if (max_len == 0) throw std::invalid_argument("length bound must be >= 1");
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t max_len() const { return max_len_; }
    const Rational& mass() const { return mass_; }
    void set_mass(Rational m) { mass_ = std::move(m); }

    Rational weight(const Letters& w) const {
        auto it = weights_.find(w);
        return it == weights_.end() ? Rational(0) : it->second;
    }
    Rational weight(const Word& w) const {
        if (w.alphabet() != alphabet_) throw std::invalid_argument("word over wrong alphabet");
        return weight(w.letters());
    }

    void set_weight(const Letters& w, Rational value) {
        if (w.empty() || w.size() > max_len_) throw std::invalid_argument("word length out of range");
        if (value < 0) throw std::invalid_argument("negative weight");
        if (value == 0)
            weights_.erase(w);
        else
            weights_[w] = std::move(value);
    }

    void add_weight(const Letters& w, const Rational& value) { set_weight(w, weight(w) + value); }

    const std::map<Letters, Rational>& entries() const { return weights_; }

    friend bool operator==(const WeightTable& a, const WeightTable& b) {
        return a.alphabet_ == b.alphabet_ && a.max_len_ == b.max_len_ && a.mass_ == b.mass_ &&
               a.weights_ == b.weights_;
    }

    // Equality of the stored weight functions on all cylinders up to len.
    bool agrees_with(const WeightTable& other, std::size_t len) const {
        if (alphabet_ != other.alphabet_) return false;
        for (const auto& [w, v] : weights_)
            if (w.size() <= len && other.weight(w) != v) return false;
        for (const auto& [w, v] : other.weights_)
            if (w.size() <= len && weight(w) != v) return false;
        return true;
    }

private:
    Alphabet alphabet_;
    std::size_t max_len_;
    Rational mass_;
    std::map<Letters, Rational> weights_;
};

// mu_w: cylinder weights of the characteristic measure of the periodic word
// w^inf, i.e. occurrences counted from start positions inside one period.
// Proper powers w = u^m automatically come out as m * mu_u. Total mass |w|.
inline WeightTable characteristic_measure(const Word& w, std::size_t L) {
    if (w.empty()) throw std::invalid_argument("characteristic measure of the empty word");
    WeightTable table(w.alphabet(), L, Rational(static_cast<long>(w.size())));
    const Letters& period = w.letters();
    std::set<Letters> seen;
    for (std::size_t len = 1; len <= L; ++len) {
        for (std::size_t start = 0; start < period.size(); ++start) {
            Letters u(len);
            for (std::size_t j = 0; j < len; ++j) u[j] = period[(start + j) % period.size()];
            if (!seen.insert(u).second) continue;
            table.set_weight(u, Rational(static_cast<long>(cyclic_occurrences(period, u))));
        }
    }
    return table;
}

struct KirchhoffViolation {
    Letters word;
    Rational mu;
    Rational left_sum;   // sum over a of mu(aw)
    Rational right_sum;  // sum over a of mu(wa)
};

struct KirchhoffReport {
    std::vector<KirchhoffViolation> violations;
    bool mass_consistent = true;  // sum of letter weights equals the stored mass
    Rational letter_sum;
    bool ok() const { return violations.empty() && mass_consistent; }
};

// Exact check of mu(w) = sum_a mu(aw) = sum_a mu(wa) for all |w| <= L-1.
// Words missing from the table count as 0; violations are data, not errors.
inline KirchhoffReport check_kirchhoff(const WeightTable& table) {
    KirchhoffReport report;
    for (std::size_t a = 0; a < table.alphabet().size(); ++a)
        report.letter_sum += table.weight(Letters{static_cast<std::int32_t>(a)});
    report.mass_consistent = (report.letter_sum == table.mass());

    // Candidate words: stored words of length <= L-1, plus cores of stored
    // words of length k+1 (a positive extension forces a check even when the
    // core itself has weight 0).
    std::set<Letters> candidates;
    for (const auto& [w, v] : table.entries()) {
        if (w.size() + 1 <= table.max_len()) candidates.insert(w);
        if (w.size() >= 2) {
            candidates.insert(Letters(w.begin() + 1, w.end()));
            candidates.insert(Letters(w.begin(), w.end() - 1));
        }
    }
    for (const auto& w : candidates) {
        if (w.size() + 1 > table.max_len()) continue;
        Rational left(0), right(0);
        for (std::size_t a = 0; a < table.alphabet().size(); ++a) {
            Letters aw;
            aw.reserve(w.size() + 1);
            aw.push_back(static_cast<std::int32_t>(a));
            aw.insert(aw.end(), w.begin(), w.end());
            left += table.weight(aw);
            Letters wa = w;
            wa.push_back(static_cast<std::int32_t>(a));
            right += table.weight(wa);
        }
        Rational mu = table.weight(w);
        if (mu != left || mu != right)
            report.violations.push_back({w, mu, left, right});
    }
    return report;
}

// Probability view: divides by the total mass. Never applied implicitly;
// the transfer map does not preserve probability.
inline WeightTable normalized(const WeightTable& table) {
    if (table.mass() <= 0) throw std::invalid_argument("cannot normalize a zero-mass table");
    WeightTable out(table.alphabet(), table.max_len(), Rational(1));
    for (const auto& [w, v] : table.entries()) out.set_weight(w, v / table.mass());
    return out;
}

inline FrequencyVector letter_frequency(const WeightTable& table) {
    FrequencyVector v{table.alphabet(), {}};
    v.coords.reserve(table.alphabet().size());
    for (std::size_t a = 0; a < table.alphabet().size(); ++a)
        v.coords.push_back(table.weight(Letters{static_cast<std::int32_t>(a)}));
    return v;
}

// Summation length bound of the transfer formula: words longer than
// ceil((|w'|-2)/<sigma>)+2 cannot carry essential occurrences of w'.
inline std::size_t transfer_input_bound(const Morphism& sigma, std::size_t out_word_len) {
    if (out_word_len < 2) return 1;
    std::size_t s = sigma.min_image_length();
    return (out_word_len - 2 + s - 1) / s + 2;
}

// The measure transfer: for |w'| >= 2,
//   mu^sigma([w']) = sum over w_j of essential occurrences of w' in
//   sigma(w_j), weighted by mu([w_j]),
// and for letters mu^sigma([b]) = sum_a |sigma(a)|_b mu([a]). Total mass
// follows the image-length formula; transfer does not preserve probability.
inline WeightTable transfer_measure(const Morphism& sigma, const WeightTable& table,
                                    std::size_t out_len) {
    if (table.alphabet() != sigma.source())
        throw std::invalid_argument("weight table not over morphism source");
    std::size_t required = transfer_input_bound(sigma, out_len);
    if (table.max_len() < required)
        throw CoverageError("weight table too short for requested output length", required);

    WeightTable out(sigma.target(), out_len);

    // letters
    for (std::size_t b = 0; b < sigma.target().size(); ++b) {
        Rational v(0);
        for (std::size_t a = 0; a < sigma.source().size(); ++a) {
            std::size_t count = count_occurrences(
                sigma.image(static_cast<std::int32_t>(a)).letters(), Letters{static_cast<std::int32_t>(b)});
            if (count)
                v += Rational(static_cast<long>(count)) * table.weight(Letters{static_cast<std::int32_t>(a)});
        }
        if (v != 0) out.set_weight(Letters{static_cast<std::int32_t>(b)}, v);
    }

    // candidate target words: factors of images of stored source words
    std::set<Letters> candidates;
    for (const auto& [w, v] : table.entries()) {
        if (w.size() > transfer_input_bound(sigma, out_len)) continue;
        Word image = sigma.apply(Word(table.alphabet(), w));
        for (std::size_t len = 2; len <= std::min(out_len, image.size()); ++len)
            for (std::size_t i = 0; i + len <= image.size(); ++i)
                candidates.insert(Letters(image.letters().begin() + static_cast<std::ptrdiff_t>(i),
                                          image.letters().begin() + static_cast<std::ptrdiff_t>(i + len)));
    }
    for (const auto& wp : candidates) {
        Rational v(0);
        std::size_t bound = transfer_input_bound(sigma, wp.size());
        Word target_word(sigma.target(), wp);
        for (const auto& [wj, mu] : table.entries()) {
            if (wj.size() > bound) continue;
            std::size_t ess = essential_occurrences(sigma, Word(table.alphabet(), wj), target_word);
            if (ess) v += Rational(static_cast<long>(ess)) * mu;
        }
        if (v != 0) out.set_weight(wp, v);
    }

    // total mass: sum_a |sigma(a)| * mu(a)
    Rational mass(0);
    for (std::size_t a = 0; a < sigma.source().size(); ++a)
        mass += Rational(static_cast<long>(sigma.image(static_cast<std::int32_t>(a)).size())) *
                table.weight(Letters{static_cast<std::int32_t>(a)});
    out.set_mass(mass);
    return out;
}

struct TransferPropertyReport {
    bool mass_formula_ok = false;        // (a)
    bool frequency_commutes = false;     // (b)  zeta(mu^sigma) = M(sigma) zeta(mu)
    bool cylinder_inequality_ok = false; // (c)  mu^sigma([sigma(w)]) >= mu([w])
    std::vector<Letters> inequality_failures;
    std::optional<bool> characteristic_coherent;  // (d), when a defining word is supplied
    bool ok() const {
        return mass_formula_ok && frequency_commutes && cylinder_inequality_ok &&
               (!characteristic_coherent || *characteristic_coherent);
    }
};

// Exact verification of the transfer identities on a concrete table.
inline TransferPropertyReport transfer_property_report(
    const Morphism& sigma, const WeightTable& table, std::size_t out_len,
    const std::optional<Word>& characteristic_of = std::nullopt) {
    TransferPropertyReport report;
    WeightTable out = transfer_measure(sigma, table, out_len);

    Rational expected_mass(0);
    for (std::size_t a = 0; a < sigma.source().size(); ++a)
        expected_mass += Rational(static_cast<long>(sigma.image(static_cast<std::int32_t>(a)).size())) *
                         table.weight(Letters{static_cast<std::int32_t>(a)});
    report.mass_formula_ok = (out.mass() == expected_mass);

    FrequencyVector in_freq = letter_frequency(table);
    FrequencyVector out_freq = letter_frequency(out);
    report.frequency_commutes = (incidence_matrix(sigma).apply(in_freq.coords) == out_freq.coords);

    report.cylinder_inequality_ok = true;
    for (const auto& [w, mu] : table.entries()) {
        Word image = sigma.apply(Word(table.alphabet(), w));
        if (image.size() > out_len) continue;
        if (out.weight(image.letters()) < mu) {
            report.cylinder_inequality_ok = false;
            report.inequality_failures.push_back(w);
        }
    }

    if (characteristic_of) {
        WeightTable expected = characteristic_measure(sigma.apply(*characteristic_of), out_len);
        report.characteristic_coherent = out.agrees_with(expected, out_len) &&
                                         out.mass() == expected.mass();
    }
    return report;
}

}  // namespace sadic
