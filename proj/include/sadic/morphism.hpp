#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sadic/alphabet.hpp"
#include "sadic/matrix.hpp"
#include "sadic/word.hpp"

namespace sadic {

// A non-erasing free monoid morphism, determined by its letter images.
class Morphism {
public:
    Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_.size())
            throw std::invalid_argument("need exactly one image per source letter");
        for (const auto& im : images_) {
            if (im.empty()) throw std::invalid_argument("erasing morphisms are rejected");
            if (im.alphabet() != target_) throw std::invalid_argument("image over wrong alphabet");
        }
    }

    // Images given as text, in source letter order.
    static Morphism parse(const Alphabet& source, const Alphabet& target,
                          const std::vector<std::string>& images) {
        std::vector<Word> ws;
        ws.reserve(images.size());
        for (const auto& s : images) ws.push_back(Word::parse(target, s));
        return Morphism(source, target, std::move(ws));
    }

    static Morphism identity(const Alphabet& a) {
        std::vector<Word> images;
        for (std::size_t i = 0; i < a.size(); ++i)
            images.push_back(Word(a, {static_cast<std::int32_t>(i)}));
        return Morphism(a, a, std::move(images));
    }

    const Alphabet& source() const { return source_; }
    const Alphabet& target() const { return target_; }
    const Word& image(std::int32_t letter) const { return images_.at(static_cast<std::size_t>(letter)); }
    const std::vector<Word>& images() const { return images_; }

    // <sigma>: the minimal letter image length (>= 1).
    std::size_t min_image_length() const {
        std::size_t m = images_[0].size();
        for (const auto& im : images_) m = std::min(m, im.size());
        return m;
    }

    std::size_t max_image_length() const {
        std::size_t m = 0;
        for (const auto& im : images_) m = std::max(m, im.size());
        return m;
    }

    bool is_letter_to_letter() const { return max_image_length() == 1; }

    Word apply(const Word& w) const {
        if (w.alphabet() != source_) throw std::invalid_argument("word not over morphism source");
        Letters out;
        std::size_t total = 0;
        for (auto x : w.letters()) total += image(x).size();
        out.reserve(total);
        for (auto x : w.letters()) {
            const auto& im = image(x).letters();
            out.insert(out.end(), im.begin(), im.end());
        }
        return Word(target_, std::move(out));
    }

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
};

// M(sigma): entry (b_i, a_j) = |sigma(a_j)|_{b_i}. Columns sum to image
// lengths; no zero column since sigma is non-erasing.
inline IntMatrix incidence_matrix(const Morphism& sigma) {
    IntMatrix m(sigma.target().size(), sigma.source().size());
    for (std::size_t j = 0; j < sigma.source().size(); ++j)
        for (auto b : sigma.image(static_cast<std::int32_t>(j)).letters())
            m.at(static_cast<std::size_t>(b), j) += 1;
    return m;
}

// (sigma2 . sigma1)(a) = sigma2(sigma1(a)).
inline Morphism compose(const Morphism& sigma2, const Morphism& sigma1) {
    if (sigma1.target() != sigma2.source())
        throw std::invalid_argument("morphisms do not compose: alphabet mismatch");
    std::vector<Word> images;
    images.reserve(sigma1.source().size());
    for (std::size_t a = 0; a < sigma1.source().size(); ++a)
        images.push_back(sigma2.apply(sigma1.image(static_cast<std::int32_t>(a))));
    return Morphism(sigma1.source(), sigma2.target(), std::move(images));
}

// Essential occurrences of u in sigma(w): occurrences whose first letter
// falls in the image of w's first letter and whose last letter falls in the
// image of w's last letter. The counting unit of the transfer formula.
inline std::size_t essential_occurrences(const Morphism& sigma, const Word& w, const Word& u) {
    if (w.empty() || u.empty()) throw std::invalid_argument("essential occurrences need non-empty words");
    if (w.alphabet() != sigma.source()) throw std::invalid_argument("word not over morphism source");
    if (u.alphabet() != sigma.target()) throw std::invalid_argument("pattern not over morphism target");
    Word image = sigma.apply(w);
    if (u.size() > image.size()) return 0;
    std::size_t first_block_end = sigma.image(w[0]).size();                 // exclusive
    std::size_t last_block_begin = image.size() - sigma.image(w[w.size() - 1]).size();
    std::size_t count = 0;
    for (std::size_t s = 0; s + u.size() <= image.size(); ++s) {
        if (s >= first_block_end) break;
        std::size_t e = s + u.size() - 1;
        if (e < last_block_begin) continue;
        bool hit = true;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (image[s + j] != u[j]) { hit = false; break; }
        if (hit) ++count;
    }
    return count;
}

}  // namespace sadic
