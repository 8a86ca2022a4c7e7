#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sadic/morphism.hpp"

namespace sadic {

// The decomposition sigma = collapse . subdivide through the subdivision
// alphabet of pairs a_i(k), 1 <= k <= |sigma(a_i)|. The collapse map is
// letter-to-letter.
struct SubdivisionDecomposition {
    Alphabet subdivision_alphabet;
    Morphism subdivide;  // pi_sigma : A* -> A_sigma*
    Morphism collapse;   // alpha_sigma : A_sigma* -> B*
    // block(s) = source letter of the s-th subdivision letter,
    // offset(s) = its 0-based position inside that letter's image.
    std::vector<std::int32_t> block;
    std::vector<std::size_t> offset;
};

inline SubdivisionDecomposition subdivision_decomposition(const Morphism& sigma) {
    std::vector<std::string> sub_names;
    std::vector<std::int32_t> block;
    std::vector<std::size_t> offset;
    for (std::size_t a = 0; a < sigma.source().size(); ++a) {
        const auto& im = sigma.image(static_cast<std::int32_t>(a));
        for (std::size_t k = 0; k < im.size(); ++k) {
            sub_names.push_back(sigma.source().name(static_cast<std::int32_t>(a)) + "(" +
                                std::to_string(k + 1) + ")");
            block.push_back(static_cast<std::int32_t>(a));
            offset.push_back(k);
        }
    }
    Alphabet sub(std::move(sub_names));

    std::vector<Word> pi_images;
    std::size_t next = 0;
    for (std::size_t a = 0; a < sigma.source().size(); ++a) {
        const auto& im = sigma.image(static_cast<std::int32_t>(a));
        Letters ls;
        for (std::size_t k = 0; k < im.size(); ++k) ls.push_back(static_cast<std::int32_t>(next++));
        pi_images.push_back(Word(sub, std::move(ls)));
    }
    Morphism pi(sigma.source(), sub, std::move(pi_images));

    std::vector<Word> alpha_images;
    for (std::size_t s = 0; s < sub.size(); ++s) {
        const auto& im = sigma.image(block[s]);
        alpha_images.push_back(Word(sigma.target(), {im[offset[s]]}));
    }
    Morphism alpha(sub, sigma.target(), std::move(alpha_images));

    return SubdivisionDecomposition{sub, std::move(pi), std::move(alpha), std::move(block),
                                    std::move(offset)};
}

// The shortest word hat(w) over the source alphabet whose subdivided image
// contains w as a factor, or nullopt when none exists. Subdivision letters
// carry their block and offset, so the parse is forced: the first letter
// fixes the enclosing block and every following letter must either continue
// that block or start a new one at offset 0.
inline std::optional<Word> hat_word(const SubdivisionDecomposition& d, const Word& w) {
    if (w.empty()) throw std::invalid_argument("hat word of the empty word");
    if (w.alphabet() != d.subdivision_alphabet)
        throw std::invalid_argument("word not over the subdivision alphabet");
    Letters hat;
    std::int32_t cur_block = d.block[static_cast<std::size_t>(w[0])];
    std::size_t cur_offset = d.offset[static_cast<std::size_t>(w[0])];
    std::size_t cur_len = d.subdivide.image(cur_block).size();
    hat.push_back(cur_block);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::int32_t b = d.block[static_cast<std::size_t>(w[i])];
        std::size_t k = d.offset[static_cast<std::size_t>(w[i])];
        if (cur_offset + 1 < cur_len) {
            // must continue inside the current block
            if (b != cur_block || k != cur_offset + 1) return std::nullopt;
            cur_offset = k;
        } else {
            // current block exhausted; a new block must start
            if (k != 0) return std::nullopt;
            cur_block = b;
            cur_offset = 0;
            cur_len = d.subdivide.image(cur_block).size();
            hat.push_back(cur_block);
        }
    }
    return Word(d.subdivide.source(), std::move(hat));
}

}  // namespace sadic
