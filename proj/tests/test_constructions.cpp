#include <catch_amalgamated.hpp>

#include "sadic/constructions.hpp"
#include "sadic/language.hpp"
#include "sadic/towers.hpp"

using namespace sadic;

namespace {
Rational r(long p, long q = 1) { return Rational(p, q); }
}

TEST_CASE("tau_d") {
    Morphism tau2 = build_tau_d(2);
    CHECK(tau2.source().size() == 3);
    CHECK(tau2.target().size() == 2);
    CHECK(tau2.image(0).str() == "a1.a1");
    CHECK(tau2.image(1).str() == "a2.a2");
    CHECK(tau2.image(2).str() == "a1.a2");

    for (std::size_t d = 2; d <= 5; ++d) {
        Morphism tau = build_tau_d(d);
        IntMatrix m = incidence_matrix(tau);
        REQUIRE(m.rows() == d);
        REQUIRE(m.cols() == d + 1);
        for (std::size_t j = 0; j < d; ++j) {
            Int colsum(0);
            for (std::size_t i = 0; i < d; ++i) {
                CHECK(m.at(i, j) == (i == j ? 2 : 0));
                colsum += m.at(i, j);
            }
            CHECK(colsum == 2);
        }
        for (std::size_t i = 0; i < d; ++i) CHECK(m.at(i, d) == 1);
    }
    CHECK_THROWS_AS(build_tau_d(1), std::invalid_argument);
}

TEST_CASE("sigma_ld") {
    Morphism s22 = build_sigma_ld(2, 2);
    CHECK(s22.image(0).str() == "a1.a1.a1.a2");
    CHECK(s22.image(1).str() == "a1.a2.a2.a2");
    IntMatrix m22 = incidence_matrix(s22);
    CHECK(m22.at(0, 0) == 3);
    CHECK(m22.at(0, 1) == 1);
    CHECK(m22.at(1, 0) == 1);
    CHECK(m22.at(1, 1) == 3);

    for (std::size_t d = 2; d <= 4; ++d)
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            IntMatrix m = incidence_matrix(build_sigma_ld(ell, d));
            CHECK(m.is_positive());
            for (std::size_t i = 0; i < d; ++i) {
                Int row_sum(0);
                for (std::size_t j = 0; j < d; ++j) {
                    CHECK(m.at(i, j) == (i == j ? Int(ell + 1) : Int(1)));
                    row_sum += m.at(i, j);
                }
                CHECK(row_sum == Int(ell + d));
            }
        }
    CHECK_THROWS_AS(build_sigma_ld(1, 2), std::invalid_argument);
}

TEST_CASE("diagonal sequence block structure") {
    DiagonalFamilySpec spec{2, {2, 3}};
    DirectiveSequence seq = build_diagonal_sequence(spec);
    CHECK(seq.max_depth() == 4);
    std::vector<std::size_t> sizes;
    for (std::size_t n = 0; n <= 4; ++n) sizes.push_back(seq.alphabet(n).size());
    CHECK(sizes == std::vector<std::size_t>{2, 2, 3, 3, 4});
    CHECK(seq.level(0) == build_sigma_ld(2, 2));
    CHECK(seq.level(1) == build_tau_d(2));
    CHECK(seq.level(2) == build_sigma_ld(3, 3));
    CHECK(seq.level(3) == build_tau_d(3));

    GrowthReport g = growth_report(seq, 3, 2);
    CHECK(g.everywhere_growing_up_to_depth);
}

TEST_CASE("every short factor recurs in every deep letter image") {
    // positivity of the telescoped matrices makes the base language look
    // minimal at finite depth
    DiagonalFamilySpec spec{2, {2, 3}};
    DirectiveSequence seq = build_diagonal_sequence(spec);
    LanguageTable table = generate_language(seq, 0, 3, 4);
    const Morphism& deep = seq.telescope(0, 4);
    for (const auto& w : table.words_of_length(3))
        for (std::size_t a = 0; a < deep.source().size(); ++a)
            CHECK(count_occurrences(deep.image(static_cast<std::int32_t>(a)).letters(), w) > 0);
}

TEST_CASE("entropy bound decreases along the diagonal schedule") {
    DiagonalFamilySpec spec{2, {2, 4, 8, 16}};
    DirectiveSequence seq = build_diagonal_sequence(spec);
    double prev = entropy_upper_bound(seq, 2).value;
    for (std::size_t n = 3; n <= seq.max_depth(); ++n) {
        double cur = entropy_upper_bound(seq, n).value;
        CHECK(cur <= prev);
        prev = cur;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("diagonal towers certificate for d = 2") {
    DiagonalFamilySpec spec{2, {4, 8}};
    auto family = build_diagonal_towers(spec, 2, r(1), r(1));
    CHECK(family.n0 == 2);
    REQUIRE(family.towers.size() == 2);
    for (const auto& tower : family.towers) CHECK(validate_tower(family.sequence, tower).valid);

    std::vector<std::vector<Rational>> at_n0;
    for (const auto& tower : family.towers) at_n0.push_back(tower.vec(2));
    CHECK(exact_rank_of_columns(at_n0) == 2);

    std::vector<std::vector<Rational>> at_base;
    for (const auto& tower : family.towers) at_base.push_back(tower.vec(0));
    CHECK(exact_rank_of_columns(at_base) == 2);

    // masses strictly decrease with the level
    for (const auto& tower : family.towers)
        for (std::size_t n = 0; n < tower.depth(); ++n)
            CHECK(tower.mass(n) > tower.mass(n + 1));
}

TEST_CASE("degenerate lambda1 = 0 collapses to the center ray") {
    DiagonalFamilySpec spec{2, {4, 8}};
    auto family = build_diagonal_towers(spec, 2, r(0), r(1));
    std::vector<std::vector<Rational>> at_n0;
    for (const auto& tower : family.towers) at_n0.push_back(tower.vec(family.n0));
    CHECK(exact_rank_of_columns(at_n0) == 1);
    // every level vector is a multiple of the all-ones vector
    for (const auto& tower : family.towers)
        for (std::size_t n = family.n0; n <= tower.depth(); ++n)
            for (const auto& x : tower.vec(n)) CHECK(x == tower.vec(n)[0]);
}

TEST_CASE("base pushforwards keep rank d when the family starts at block d") {
    DiagonalFamilySpec spec{3, {4, 8, 16}};
    auto family = build_diagonal_towers(spec, 3, r(1), r(1));
    CHECK(family.n0 == 4);
    std::vector<std::vector<Rational>> at_n0, at_base;
    for (const auto& tower : family.towers) {
        at_n0.push_back(tower.vec(family.n0));
        at_base.push_back(tower.vec(0));
    }
    CHECK(exact_rank_of_columns(at_n0) == 3);
    CHECK(exact_rank_of_columns(at_base) == 3);
}

TEST_CASE("infeasible lambda schedule reports the failing level") {
    // a tiny center seed drains below zero at the first sigma-block inversion
    DiagonalFamilySpec spec{2, {2, 2, 2}};
    CHECK_THROWS_AS(build_diagonal_towers(spec, 2, r(1), r(1, 3)), std::invalid_argument);
    try {
        build_diagonal_towers(spec, 2, r(1), r(1, 3));
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("level 3") != std::string::npos);
    }
}

TEST_CASE("example 6.3 annotations") {
    auto ex = build_example_6_3();
    CHECK(ex.period_word_first.str() == "cdcddc");
    CHECK(ex.period_word_second.str() == "dcdccd");
    IntMatrix m1 = incidence_matrix(ex.sigma1);
    CHECK(m1.at(0, 0) == 2);
    CHECK(m1.at(0, 1) == 1);
    CHECK(m1.at(1, 0) == 1);
    CHECK(m1.at(1, 1) == 2);
    IntMatrix mtail = incidence_matrix(ex.doubling);
    CHECK(mtail.at(0, 0) == 2);
    CHECK(mtail.at(0, 1) == 0);
    CHECK(ex.expected_cone_rank_level0 == 1);
    CHECK(ex.expected_critical_level == 1);
}
