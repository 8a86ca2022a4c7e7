#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sadic/errors.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"
#include "sadic/word.hpp"

namespace sadic {

// A desubstitution marker: the image-shift origin sits at the given offset
// inside the image of the given source letter, with the radius-R image
// context around it.
struct MarkerConfig {
    std::int32_t letter = 0;
    std::size_t offset = 0;
    Word left_context;   // R letters before the marked position
    Word right_context;  // R letters after it (marked letter included at front)
};

struct RecognizabilityWitness {
    MarkerConfig first;
    MarkerConfig second;
    Word shared_window;  // the common radius-R image window
    Word source_first;   // admitted source words realizing each reading
    Word source_second;
};

struct RecognizabilityVerdict {
    enum class Kind { Witness, Clear, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t radius = 0;
    std::optional<RecognizabilityWitness> witness;
    bool is_witness() const { return kind == Kind::Witness; }
    bool is_clear() const { return kind == Kind::Clear; }
};

namespace detail {

// Minimal period of a word (classic failure function).
inline std::size_t minimal_period(const Letters& w) {
    std::vector<std::size_t> fail(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return w.size() - fail[w.size()];
}

inline bool looks_periodic(const Letters& w) {
    std::size_t p = minimal_period(w);
    return 2 * p <= w.size();
}

}  // namespace detail

// Bounded-window recognizability scan. Enumerates all (letter, offset)
// markers over admitted source windows, collects the radius-R image contexts
// each marker can produce, and compares them pairwise. Two distinct markers
// sharing a context give a Witness; full separation gives Clear(R). In
// aperiodic-only mode collisions whose shared window looks periodic are
// discarded; if only such collisions existed the verdict is Unknown(R).
inline RecognizabilityVerdict recognizability_scan(const Morphism& sigma,
                                                   const LanguageTable& table, std::size_t radius,
                                                   bool aperiodic_only = false) {
    if (table.alphabet() != sigma.source())
        throw std::invalid_argument("language table not over morphism source");
    std::size_t margin = (radius + sigma.min_image_length() - 1) / sigma.min_image_length();
    std::size_t window_len = 2 * margin + 2;  // marked letter at index `margin`
    if (table.max_len() < window_len)
        throw CoverageError("language table too short for this radius", window_len);

    struct Marker {
        std::int32_t letter;
        std::size_t offset;
    };
    auto marker_less = [](const Marker& a, const Marker& b) {
        return a.letter != b.letter ? a.letter < b.letter : a.offset < b.offset;
    };
    // marker -> (context word -> one realizing source window)
    std::map<Marker, std::map<Letters, Letters>, decltype(marker_less)> contexts(marker_less);

    const auto& windows = table.words_of_length(window_len);
    if (windows.empty())
        throw CoverageError("no admitted source windows of the required length", window_len);
    for (const auto& w : windows) {
        Word source(table.alphabet(), w);
        Word image = sigma.apply(source);
        std::size_t marked = margin;
        std::size_t block_start = 0;
        for (std::size_t j = 0; j < marked; ++j) block_start += sigma.image(w[j]).size();
        std::int32_t a = w[marked];
        for (std::size_t k = 0; k < sigma.image(a).size(); ++k) {
            std::size_t pos = block_start + k;
            if (pos < radius || pos + radius >= image.size()) continue;
            Letters ctx(image.letters().begin() + static_cast<std::ptrdiff_t>(pos - radius),
                        image.letters().begin() + static_cast<std::ptrdiff_t>(pos + radius + 1));
            contexts[{a, k}].emplace(std::move(ctx), w);
        }
    }

    bool discarded_periodic = false;
    for (auto it1 = contexts.begin(); it1 != contexts.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != contexts.end(); ++it2) {
            for (const auto& [ctx, src1] : it1->second) {
                auto hit = it2->second.find(ctx);
                if (hit == it2->second.end()) continue;
                if (aperiodic_only && detail::looks_periodic(ctx)) {
                    discarded_periodic = true;
                    continue;
                }
                auto make_config = [&](const Marker& m, const Letters&) {
                    Word window(sigma.target(), ctx);
                    return MarkerConfig{m.letter, m.offset, window.subword(0, radius),
                                        window.subword(radius + 1, ctx.size() - radius - 1)};
                };
                RecognizabilityWitness witness{
                    make_config(it1->first, src1), make_config(it2->first, hit->second),
                    Word(sigma.target(), ctx), Word(table.alphabet(), src1),
                    Word(table.alphabet(), hit->second)};
                return {RecognizabilityVerdict::Kind::Witness, radius, std::move(witness)};
            }
        }
    }
    if (discarded_periodic) return {RecognizabilityVerdict::Kind::Unknown, radius, std::nullopt};
    return {RecognizabilityVerdict::Kind::Clear, radius, std::nullopt};
}

struct ShiftPeriodReport {
    bool input_proper_power = false;
    bool image_proper_power = false;
    bool preserved = true;  // violated when exactly one side is a proper power
    Word input_root;
    Word image_root;
};

// Shift-period preservation on the single periodic orbit of w.
inline ShiftPeriodReport shift_period_check(const Morphism& sigma, const Word& w) {
    if (w.empty()) throw std::invalid_argument("shift period check needs a non-empty word");
    Word image = sigma.apply(w);
    Word input_root = primitive_root(w);
    Word image_root = primitive_root(image);
    bool in_pp = input_root.size() < w.size();
    bool out_pp = image_root.size() < image.size();
    return ShiftPeriodReport{in_pp, out_pp, in_pp == out_pp, std::move(input_root),
                             std::move(image_root)};
}

struct OrbitCollisionReport {
    bool collision = false;  // sigma(w)^inf and sigma(w')^inf share a shift orbit
    Word image_root_first;
    Word image_root_second;
};

// Shift-orbit injectivity probe on a pair of periodic points. The inputs
// must lie in distinct orbits; a collision of the images is a witness
// against shift-orbit injectivity.
inline OrbitCollisionReport orbit_collision_on_periodic(const Morphism& sigma, const Word& w,
                                                        const Word& w_prime) {
    if (w.empty() || w_prime.empty()) throw std::invalid_argument("periodic words must be non-empty");
    if (w.alphabet() != w_prime.alphabet()) throw std::invalid_argument("alphabet mismatch");
    if (is_rotation_of(primitive_root(w.letters()), primitive_root(w_prime.letters())))
        throw std::invalid_argument("inputs already lie in the same shift orbit");
    Word first = primitive_root(sigma.apply(w));
    Word second = primitive_root(sigma.apply(w_prime));
    bool collision = is_rotation_of(first.letters(), second.letters());
    return OrbitCollisionReport{collision, std::move(first), std::move(second)};
}

}  // namespace sadic
