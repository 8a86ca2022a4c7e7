#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/towers.hpp"

namespace sadic {

inline Alphabet indexed_alphabet(std::size_t d) {
    std::vector<std::string> names;
    names.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) names.push_back("a" + std::to_string(i));
    return Alphabet(std::move(names));
}

// tau_d : A_(d+1)* -> A_(d)*, a_i -> a_i^2 for i <= d, a_{d+1} -> a_1...a_d.
// Incidence matrix 2 I_d with an appended all-ones column.
inline Morphism build_tau_d(std::size_t d) {
    if (d < 2) throw std::invalid_argument("tau_d needs d >= 2");
    Alphabet source = indexed_alphabet(d + 1);
    Alphabet target = indexed_alphabet(d);
    std::vector<Word> images;
    for (std::size_t i = 0; i < d; ++i)
        images.push_back(Word(target, {static_cast<std::int32_t>(i), static_cast<std::int32_t>(i)}));
    Letters all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(static_cast<std::int32_t>(i));
    images.push_back(Word(target, std::move(all)));
    return Morphism(std::move(source), std::move(target), std::move(images));
}

// A concrete morphism with incidence matrix ell*I_d + 1_{dxd}:
// a_i -> a_1 ... a_{i-1} a_i^{ell+1} a_{i+1} ... a_d. The letter arrangement
// is chosen so that a_i occurs in a run, which makes the distinguished-word
// desubstitution argument directly visible in the language.
inline Morphism build_sigma_ld(std::size_t ell, std::size_t d) {
    if (ell < 2 || d < 2) throw std::invalid_argument("sigma_{ell,d} needs ell >= 2 and d >= 2");
    Alphabet a = indexed_alphabet(d);
    std::vector<Word> images;
    for (std::size_t i = 0; i < d; ++i) {
        Letters w;
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i)
                for (std::size_t r = 0; r < ell + 1; ++r) w.push_back(static_cast<std::int32_t>(j));
            else
                w.push_back(static_cast<std::int32_t>(j));
        }
        images.push_back(Word(a, std::move(w)));
    }
    return Morphism(a, a, std::move(images));
}

// The alternating diagonal family: blocks sigma_{ell(k), d0+k} then tau_{d0+k},
// so level alphabets grow by one letter per tau block.
struct DiagonalFamilySpec {
    std::size_t d0 = 2;
    std::vector<std::size_t> ell;  // one value per block; all >= 2

    std::size_t blocks() const { return ell.size(); }
    std::size_t depth() const { return 2 * ell.size(); }

    void validate() const {
        if (d0 < 2) throw std::invalid_argument("diagonal family needs d0 >= 2");
        if (ell.empty()) throw std::invalid_argument("diagonal family needs at least one block");
        for (auto l : ell)
            if (l < 2) throw std::invalid_argument("diagonal family needs ell >= 2");
    }
};

inline DirectiveSequence build_diagonal_sequence(const DiagonalFamilySpec& spec) {
    spec.validate();
    auto ell = spec.ell;
    std::size_t d0 = spec.d0;
    return DirectiveSequence::from_rule(
        [ell, d0](std::size_t n) {
            std::size_t block = n / 2;
            std::size_t d = d0 + block;
            return n % 2 == 0 ? build_sigma_ld(ell.at(block), d) : build_tau_d(d);
        },
        spec.depth());
}

struct DiagonalTowerFamily {
    DirectiveSequence sequence;
    std::vector<VectorTower> towers;  // one per index i = 1..d
    std::size_t n0 = 0;               // certificate level 2d-2
    std::vector<std::pair<Rational, Rational>> lambda_schedule;  // (lambda1, lambda2) per level n0..top
};

// Builds the d towers v^i_n = lambda_1(n) e_i + lambda_2(n) c_n. The seed is
// placed at the certificate level n0 = 2d-2 and the coefficients are solved
// level-by-level toward the top by inverting the block action on the
// span{e_i, center} plane; both block families preserve that plane. The
// sigma-block inversion subtracts lambda_1/ell from the center coefficient,
// so a too-small ell drains lambda_2 below zero: that is the infeasibility
// reported here. Below n0 the vectors are pushed down by the matrices.
inline DiagonalTowerFamily build_diagonal_towers(const DiagonalFamilySpec& spec, std::size_t d,
                                                 Rational lambda1, Rational lambda2) {
    spec.validate();
    if (d < 2) throw std::invalid_argument("certificate block needs d >= 2");
    if (lambda1 < 0 || lambda2 <= 0)
        throw std::invalid_argument("seed needs lambda1 >= 0 and lambda2 > 0");
    std::size_t n0 = 2 * d - 2;
    DirectiveSequence seq = build_diagonal_sequence(spec);
    std::size_t top = seq.max_depth();
    if (n0 >= top)
        throw std::invalid_argument("certificate level 2d-2 not within the materializable depth");
    if (seq.alphabet(n0).size() < d)
        throw std::invalid_argument("certificate level alphabet smaller than d");

    // lambda schedule upward from n0
    std::vector<std::pair<Rational, Rational>> schedule;
    schedule.emplace_back(lambda1, lambda2);
    for (std::size_t n = n0; n < top; ++n) {
        auto [l1, l2] = schedule.back();
        Rational n1, n2;
        if (n % 2 == 0) {  // sigma block: lambda1 = ell*lambda1', lambda2 = lambda1' + (ell+s)*lambda2'
            std::size_t block = n / 2;
            Rational ell(static_cast<long>(spec.ell.at(block)));
            Rational s(static_cast<long>(seq.alphabet(n).size()));
            n1 = l1 / ell;
            n2 = (l2 - n1) / (ell + s);
            if (n2 <= 0)
                throw std::invalid_argument(
                    "lambda schedule infeasible at level " + std::to_string(n + 1) +
                    ": requested ell too small for the seed");
        } else {  // tau block: lambda1 = 2*lambda1', lambda2 = 3*lambda2'
            n1 = l1 / 2;
            n2 = l2 / 3;
        }
        schedule.emplace_back(std::move(n1), std::move(n2));
    }

    std::vector<VectorTower> towers;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<std::vector<Rational>> levels(top + 1);
        for (std::size_t n = n0; n <= top; ++n) {
            const auto& [l1, l2] = schedule[n - n0];
            std::vector<Rational> v(seq.alphabet(n).size(), l2);
            v[i] += l1;
            levels[n] = std::move(v);
        }
        for (std::size_t n = n0; n > 0; --n)
            levels[n - 1] = incidence_matrix(seq.level(n - 1)).apply(levels[n]);
        towers.push_back(VectorTower(std::move(levels)));
    }
    return DiagonalTowerFamily{std::move(seq), std::move(towers), n0, std::move(schedule)};
}

// Example: the two-periodic subshift with a hidden second measure. Level 0
// is reached through the exchange morphism a -> cd, b -> dc, level 1 through
// x -> aab, y -> bba, and all higher levels double letters. The letter
// frequency cone collapses to a single ray at the base while the measure
// cone stays two-dimensional; the apparent critical level is 1.
struct Example63 {
    DirectiveSequence sequence;
    Morphism sigma0;
    Morphism sigma1;
    Morphism doubling;
    Word period_word_first;   // sigma0(sigma1(x)) = cdcddc
    Word period_word_second;  // sigma0(sigma1(y)) = dcdccd
    std::size_t expected_cone_rank_level0 = 1;
    std::size_t expected_cone_rank_level1 = 2;
    std::size_t expected_critical_level = 1;
};

inline Example63 build_example_6_3(std::size_t depth = 16) {
    Alphabet base = Alphabet::from_letters("cd");
    Alphabet mid = Alphabet::from_letters("ab");
    Alphabet top = Alphabet::from_letters("xy");
    Morphism sigma0 = Morphism::parse(mid, base, {"cd", "dc"});
    Morphism sigma1 = Morphism::parse(top, mid, {"aab", "bba"});
    Morphism doubling = Morphism::parse(top, top, {"xx", "yy"});
    DirectiveSequence seq =
        DirectiveSequence::from_prefix_and_tail({sigma0, sigma1}, doubling, depth);
    Word first = sigma0.apply(sigma1.apply(Word::parse(top, "x")));
    Word second = sigma0.apply(sigma1.apply(Word::parse(top, "y")));
    return Example63{std::move(seq), std::move(sigma0),  std::move(sigma1), std::move(doubling),
                     std::move(first), std::move(second)};
}

// Stationary Fibonacci system a -> ab, b -> a.
inline DirectiveSequence fibonacci_sequence(std::size_t depth = 24) {
    Alphabet a = Alphabet::from_letters("ab");
    return DirectiveSequence::stationary(Morphism::parse(a, a, {"ab", "a"}), depth);
}

// Stationary exchange-doubling system a -> ab, b -> ba.
inline DirectiveSequence thue_morse_sequence(std::size_t depth = 16) {
    Alphabet a = Alphabet::from_letters("ab");
    return DirectiveSequence::stationary(Morphism::parse(a, a, {"ab", "ba"}), depth);
}

}  // namespace sadic
