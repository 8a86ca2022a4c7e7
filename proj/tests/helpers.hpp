#pragma once

#include <random>
#include <string>
#include <vector>

#include "sadic/morphism.hpp"

namespace testutil {

inline sadic::Alphabet random_alphabet(std::mt19937& rng, std::size_t max_size,
                                       const std::string& pool) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::size_t n = size_dist(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, pool.at(i));
    return sadic::Alphabet(std::move(names));
}

inline sadic::Word random_word(std::mt19937& rng, const sadic::Alphabet& a, std::size_t min_len,
                               std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::int32_t> letter_dist(0, static_cast<std::int32_t>(a.size()) - 1);
    sadic::Letters w(len_dist(rng));
    for (auto& x : w) x = letter_dist(rng);
    return sadic::Word(a, std::move(w));
}

inline sadic::Morphism random_morphism(std::mt19937& rng, const sadic::Alphabet& source,
                                       const sadic::Alphabet& target, std::size_t max_image_len) {
    std::vector<sadic::Word> images;
    for (std::size_t i = 0; i < source.size(); ++i)
        images.push_back(random_word(rng, target, 1, max_image_len));
    return sadic::Morphism(source, target, std::move(images));
}

}  // namespace testutil
