#include <catch_amalgamated.hpp>

#include "helpers.hpp"
#include "sadic/constructions.hpp"
#include "sadic/serialize.hpp"

using namespace sadic;

TEST_CASE("rational strings") {
    CHECK(to_string(Rational(1, 3)) == "1/3");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("7/4") == Rational(7, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("morphism json round trip") {
    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        Alphabet src = testutil::random_alphabet(rng, 4, "abcd");
        Alphabet dst = testutil::random_alphabet(rng, 4, "wxyz");
        Morphism sigma = testutil::random_morphism(rng, src, dst, 5);
        Morphism back = morphism_from_json(morphism_to_json(sigma));
        CHECK(back == sigma);
    }
}

TEST_CASE("morphism json rejects bad input") {
    Json j = {{"source", {"a", "b"}}, {"target", {"c"}}, {"images", {{"a", "c"}, {"b", "c"}}}};
    CHECK_NOTHROW(morphism_from_json(j));
    j["extra"] = 1;
    CHECK_THROWS_AS(morphism_from_json(j), std::invalid_argument);

    Json missing = {{"source", {"a", "b"}}, {"target", {"c"}}, {"images", {{"a", "c"}}}};
    CHECK_THROWS_AS(morphism_from_json(missing), std::invalid_argument);
}

TEST_CASE("sequence descriptors") {
    Json stationary = {{"kind", "stationary"},
                       {"tail",
                        {{"source", {"a", "b"}},
                         {"target", {"a", "b"}},
                         {"images", {{"a", "ab"}, {"b", "a"}}}}},
                       {"depth", 12}};
    DirectiveSequence fib = sequence_from_json(stationary);
    CHECK(fib.max_depth() == 12);
    CHECK(fib.level(3).image(0).str() == "ab");

    Json diag = {{"kind", "parameterized"},
                 {"family", "diagonal"},
                 {"params", {{"d0", 2}, {"ell", {4, 8}}}}};
    DirectiveSequence d = sequence_from_json(diag);
    CHECK(d.max_depth() == 4);
    CHECK(d.level(0) == build_sigma_ld(4, 2));

    Json ex = {{"kind", "parameterized"}, {"family", "example-6-3"}, {"params", Json::object()}};
    CHECK(sequence_from_json(ex).telescope(0, 2).image(0).str() == "cdcddc");

    Json bad = {{"kind", "mystery"}};
    CHECK_THROWS_AS(sequence_from_json(bad), std::invalid_argument);
}

TEST_CASE("weight table round trip and determinism") {
    Alphabet ab = Alphabet::from_letters("ab");
    WeightTable mu = characteristic_measure(Word::parse(ab, "aab"), 5);
    Json j = weight_table_to_json(mu);
    WeightTable back = weight_table_from_json(j);
    CHECK(back == mu);
    CHECK(weight_table_to_json(back).dump(2) == j.dump(2));  // byte identical

    std::string csv = weight_table_to_csv(mu);
    CHECK(csv.rfind("word,weight\n", 0) == 0);
    CHECK(csv.find("aa,1\n") != std::string::npos);
    // lexicographically sorted rows
    auto pos_a = csv.find("\na,");
    auto pos_b = csv.find("\nb,");
    CHECK(pos_a < pos_b);
}

TEST_CASE("tower round trip") {
    DirectiveSequence fib = fibonacci_sequence(8);
    VectorTower t = characteristic_tower(fib, 5, 0);
    VectorTower back = tower_from_json(tower_to_json(t));
    CHECK(back.levels() == t.levels());
}

TEST_CASE("language and report emission are stable") {
    DirectiveSequence fib = fibonacci_sequence(16);
    LanguageTable table = generate_language(fib, 0, 4, 10);
    Json a = language_to_json(table);
    Json b = language_to_json(generate_language(fib, 0, 4, 10));
    CHECK(a.dump() == b.dump());

    std::string text = language_to_text(table);
    CHECK(text.find("aba\n") != std::string::npos);

    ConeReport cone = cone_at_level(fib, 0, 2);
    CHECK(cone_report_to_json(cone)["rank"] == 2);

    auto crit = critical_level_estimate(build_example_6_3().sequence, 4, 2);
    Json cj = critical_report_to_json(crit);
    CHECK(cj["apparent_critical_level"] == 1);
}
