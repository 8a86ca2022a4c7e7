// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sadic/sadic.hpp"

using namespace sadic;

namespace {

struct Result {
    int number;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

struct Checker {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
};

// Every weight table produced anywhere in the suite is registered here and
// must pass the Kirchhoff check with zero violations (criterion 5).
std::size_t g_tables_checked = 0;
std::size_t g_kirchhoff_failures = 0;

const WeightTable& registered(const WeightTable& t) {
    ++g_tables_checked;
    if (!check_kirchhoff(t).ok()) ++g_kirchhoff_failures;
    return t;
}

Rational r(long p, long q = 1) { return Rational(p, q); }

Alphabet ab = Alphabet::from_letters("ab");
Alphabet cd = Alphabet::from_letters("cd");

// ---------------------------------------------------------------------------
// criterion 1: Example 6.3 exact replication
void criterion_1(Checker& c) {
    auto ex = build_example_6_3();

    WeightTable mu_aab = registered(characteristic_measure(Word::parse(ab, "aab"), 8));
    WeightTable mu_bba = registered(characteristic_measure(Word::parse(ab, "bba"), 8));
    c.require(letter_frequency(mu_aab).coords == std::vector<Rational>{r(2), r(1)},
              "zeta(mu_aab) != (2,1)");
    c.require(letter_frequency(mu_bba).coords == std::vector<Rational>{r(1), r(2)},
              "zeta(mu_bba) != (1,2)");

    WeightTable t1 = registered(transfer_measure(ex.sigma0, mu_aab, 6));
    WeightTable t2 = registered(transfer_measure(ex.sigma0, mu_bba, 6));
    c.require(t1.agrees_with(characteristic_measure(ex.period_word_first, 6), 6),
              "transfer(mu_aab) != mu_cdcddc");
    c.require(t2.agrees_with(characteristic_measure(ex.period_word_second, 6), 6),
              "transfer(mu_bba) != mu_dcdccd");
    c.require(t1.weight(Word::parse(cd, "cd")) == r(2), "t1[cd] != 2");
    c.require(t1.weight(Word::parse(cd, "dc")) == r(2), "t1[dc] != 2");
    c.require(t2.weight(Word::parse(cd, "cd")) == r(2), "t2[cd] != 2");
    c.require(t2.weight(Word::parse(cd, "dc")) == r(2), "t2[dc] != 2");
    c.require(t1.weight(Word::parse(cd, "cdcddc")) == r(1), "t1[cdcddc] != 1");
    c.require(t2.weight(Word::parse(cd, "cdcddc")) == r(0), "t2[cdcddc] != 0");

    CriticalLevelReport crit = critical_level_estimate(ex.sequence, 4, 2);
    c.require(crit.ranks.size() == 5 && crit.ranks[0] == 1, "c_0 != 1");
    c.require(crit.ranks[1] == 2, "c_1 != 2");
    c.require(crit.apparent_critical_level == 1, "apparent critical level != 1");
}

// ---------------------------------------------------------------------------
// criteria 2 and 3 share the same 500 randomized transfers
struct RandomTransferResults {
    std::size_t runs = 0;
    std::size_t coherence_failures = 0;   // criterion 2
    std::size_t zeta_failures = 0;        // criterion 3
    std::size_t mass_failures = 0;        // criterion 3
    std::size_t inequality_failures = 0;  // criterion 3
    std::size_t inequality_checked = 0;
};

RandomTransferResults run_random_transfers() {
    RandomTransferResults out;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> src_size(1, 4), dst_size(1, 4), img_len(1, 5),
        word_len(1, 6);
    const std::string src_pool = "abcd", dst_pool = "wxyz";
    for (int run = 0; run < 500; ++run) {
        Alphabet src = [&] {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < src_size(rng); ++i) names.emplace_back(1, src_pool[i]);
            return Alphabet(names);
        }();
        Alphabet dst = [&] {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < dst_size(rng); ++i) names.emplace_back(1, dst_pool[i]);
            return Alphabet(names);
        }();
        std::uniform_int_distribution<std::int32_t> src_letter(0, static_cast<std::int32_t>(src.size()) - 1);
        std::uniform_int_distribution<std::int32_t> dst_letter(0, static_cast<std::int32_t>(dst.size()) - 1);
        std::vector<Word> images;
        for (std::size_t a = 0; a < src.size(); ++a) {
            Letters im(img_len(rng));
            for (auto& x : im) x = dst_letter(rng);
            images.push_back(Word(dst, std::move(im)));
        }
        Morphism sigma(src, dst, std::move(images));
        Letters wl(word_len(rng));
        for (auto& x : wl) x = src_letter(rng);
        Word w(src, std::move(wl));

        std::size_t out_len = 8;
        WeightTable mu = registered(characteristic_measure(w, transfer_input_bound(sigma, out_len)));
        WeightTable transferred = registered(transfer_measure(sigma, mu, out_len));
        WeightTable expected = registered(characteristic_measure(sigma.apply(w), out_len));

        ++out.runs;
        if (!(transferred.agrees_with(expected, out_len) && transferred.mass() == expected.mass()))
            ++out.coherence_failures;

        // criterion 3: zeta commutation, mass formula, cylinder inequality
        if (letter_frequency(transferred).coords !=
            incidence_matrix(sigma).apply(letter_frequency(mu).coords))
            ++out.zeta_failures;
        Rational mass_formula(0);
        for (std::size_t a = 0; a < src.size(); ++a)
            mass_formula += r(static_cast<long>(sigma.image(static_cast<std::int32_t>(a)).size())) *
                            mu.weight(Letters{static_cast<std::int32_t>(a)});
        if (transferred.mass() != mass_formula) ++out.mass_failures;
        for (const auto& [wj, v] : mu.entries()) {
            Word image = sigma.apply(Word(src, wj));
            if (image.size() > out_len) continue;
            ++out.inequality_checked;
            if (transferred.weight(image.letters()) < v) ++out.inequality_failures;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// criterion 4: functoriality on 100 randomized composable pairs
void criterion_4(Checker& c) {
    std::mt19937 rng(4096);
    Alphabet mid = Alphabet::from_letters("wxyz");
    Alphabet top = Alphabet::from_letters("pqrs");
    std::uniform_int_distribution<std::size_t> img_len(1, 4), word_len(1, 5);
    std::uniform_int_distribution<std::int32_t> a_letter(0, 1);
    for (int run = 0; run < 100; ++run) {
        auto random_morphism = [&](const Alphabet& s, const Alphabet& t) {
            std::uniform_int_distribution<std::int32_t> letter(0, static_cast<std::int32_t>(t.size()) - 1);
            std::vector<Word> images;
            for (std::size_t a = 0; a < s.size(); ++a) {
                Letters im(img_len(rng));
                for (auto& x : im) x = letter(rng);
                images.push_back(Word(t, std::move(im)));
            }
            return Morphism(s, t, std::move(images));
        };
        Morphism s1 = random_morphism(ab, mid);
        Morphism s2 = random_morphism(mid, top);
        Letters wl(word_len(rng));
        for (auto& x : wl) x = a_letter(rng);
        Word w(ab, std::move(wl));

        std::size_t out_len = 6;
        std::size_t mid_len = transfer_input_bound(s2, out_len);
        std::size_t in_len = transfer_input_bound(s1, mid_len);
        WeightTable mu = registered(characteristic_measure(w, in_len));
        WeightTable two_step =
            registered(transfer_measure(s2, registered(transfer_measure(s1, mu, mid_len)), out_len));
        WeightTable one_step = registered(transfer_measure(compose(s2, s1), mu, out_len));
        c.require(two_step.agrees_with(one_step, out_len) && two_step.mass() == one_step.mass(),
                  "functoriality failed on run " + std::to_string(run));
        if (!c.pass) return;
    }
    c.detail << "100 composable pairs";
}

// ---------------------------------------------------------------------------
// criterion 6: tower evaluation convergence on the balanced doubling tower
void criterion_6(Checker& c) {
    DirectiveSequence tm = thue_morse_sequence(14);
    VectorTower tower = eigenvector_tower(tm, 12, {r(1, 2), r(1, 2)}, r(2));

    Word a = Word::parse(ab, "a");
    for (std::size_t n = 1; n <= 12; ++n)
        c.require(evaluate_tower(tm, tower, a, n).value == r(1, 2),
                  "S_n(a) != 1/2 at n=" + std::to_string(n));

    Word aa = Word::parse(ab, "aa");
    Rational prev(0);
    for (std::size_t n = 1; n <= 12; ++n) {
        Rational cur = evaluate_tower(tm, tower, aa, n).value;
        c.require(cur >= prev, "S_n(aa) decreased at n=" + std::to_string(n));
        prev = cur;
    }
    TowerEvaluation e12 = evaluate_tower(tm, tower, aa, 12);
    c.require(e12.error_bound < r(1, 1000), "error bound at n=12 not below 1e-3");

    // independent brute force: expand the substitution by hand
    std::string wa = "a", wb = "b";
    for (int step = 0; step < 12; ++step) {
        auto expand = [](const std::string& w) {
            std::string out;
            for (char ch : w) out += (ch == 'a') ? "ab" : "ba";
            return out;
        };
        wa = expand(wa);
        wb = expand(wb);
    }
    auto count_aa = [](const std::string& w) {
        std::size_t n = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == 'a' && w[i + 1] == 'a') ++n;
        return n;
    };
    Rational s12_expected =
        (r(static_cast<long>(count_aa(wa))) + r(static_cast<long>(count_aa(wb)))) / r(8192);
    c.require(e12.value == s12_expected, "S_12(aa) does not match the brute-force expansion");

    Rational sixth = r(1, 6);
    Rational diff = e12.value > sixth ? e12.value - sixth : sixth - e12.value;
    c.require(diff < e12.error_bound, "S_12(aa) not within the error bound of 1/6");
    c.detail << "S_12(aa) = " << to_string(e12.value) << ", bound " << to_string(e12.error_bound);
}

// ---------------------------------------------------------------------------
// criterion 7: prolongation coherence on Fibonacci and Example 6.3
void criterion_7(Checker& c) {
    auto check_system = [&](const DirectiveSequence& seq, const Morphism& tau, std::size_t top,
                            const std::string& label) {
        for (std::size_t letter = 0; letter < seq.alphabet(top).size(); ++letter) {
            VectorTower tower = characteristic_tower(seq, top, static_cast<std::int32_t>(letter));
            auto [prolonged, new_tower] = prolong_tower(tau, seq, tower);
            WeightTable before = registered(levelwise_measures(seq, tower, 6).tables[0]);
            WeightTable pushed = registered(transfer_measure(tau, before, 6));
            WeightTable after = registered(levelwise_measures(prolonged, new_tower, 6).tables[0]);
            c.require(pushed.agrees_with(after, 6) && pushed.mass() == after.mass(),
                      label + ": transfer-of-evaluation != evaluation-of-prolongation");
        }
    };
    DirectiveSequence fib = fibonacci_sequence(12);
    check_system(fib, fib.level(0), 8, "fibonacci");
    auto ex = build_example_6_3();
    check_system(ex.sequence.truncate(1), ex.sigma0, 6, "example 6.3");
}

// ---------------------------------------------------------------------------
// criterion 8: diagonal family certificate
void criterion_8(Checker& c) {
    for (std::size_t d = 2; d <= 4; ++d) {
        DiagonalFamilySpec spec{d, {4, 8, 16, 32}};
        DiagonalTowerFamily family = [&] {
            try {
                return build_diagonal_towers(spec, d, r(1), r(1));
            } catch (const std::exception& e) {
                c.require(false, "d=" + std::to_string(d) + " build failed: " + e.what());
                throw;
            }
        }();
        std::vector<std::vector<Rational>> at_n0, at_base;
        for (const auto& tower : family.towers) {
            c.require(validate_tower(family.sequence, tower).valid,
                      "d=" + std::to_string(d) + ": invalid tower");
            at_n0.push_back(tower.vec(family.n0));
            at_base.push_back(tower.vec(0));
        }
        c.require(exact_rank_of_columns(at_n0) == d,
                  "d=" + std::to_string(d) + ": rank at n0 != " + std::to_string(d));
        c.require(exact_rank_of_columns(at_base) == d,
                  "d=" + std::to_string(d) + ": base pushforward rank != " + std::to_string(d));
        EntropyBound bound = entropy_upper_bound(family.sequence, family.sequence.max_depth());
        c.require(bound.value < 0.05,
                  "d=" + std::to_string(d) + ": entropy bound " + std::to_string(bound.value));
    }
    c.detail << "d = 2, 3, 4 with ell = (4, 8, 16, 32)";
}

// ---------------------------------------------------------------------------
// criterion 9: recognizability verdicts
void criterion_9(Checker& c) {
    Morphism collapse = Morphism::parse(ab, ab, {"ab", "ab"});
    LanguageTable full = full_shift_language(ab, 6);
    c.require(recognizability_scan(collapse, full, 1).is_witness(),
              "collapse morphism: no witness at radius 1");

    DirectiveSequence tm = thue_morse_sequence(12);
    LanguageTable table = generate_language(tm, 0, 12, 8);
    std::optional<std::size_t> clear_radius;
    for (std::size_t radius = 1; radius <= 8; ++radius) {
        if (recognizability_scan(tm.level(0), table, radius).is_clear()) {
            clear_radius = radius;
            break;
        }
    }
    c.require(clear_radius.has_value(), "exchange-doubling system not clear by radius 8");
    if (clear_radius) c.detail << "clear at radius " << *clear_radius;

    auto ex = build_example_6_3();
    OrbitCollisionReport no_hit =
        orbit_collision_on_periodic(ex.sigma0, Word::parse(ab, "aab"), Word::parse(ab, "bba"));
    c.require(!no_hit.collision, "(aab, bba) should not collide under sigma0");
    OrbitCollisionReport hit =
        orbit_collision_on_periodic(collapse, Word::parse(ab, "a"), Word::parse(ab, "b"));
    c.require(hit.collision, "(a, b) should collide under the collapse morphism");
}

// ---------------------------------------------------------------------------
// criterion 10: cone contraction on the Fibonacci system
void criterion_10(Checker& c) {
    DirectiveSequence fib = fibonacci_sequence(24);
    ConeReport c5 = cone_at_level(fib, 0, 5);
    ConeReport c10 = cone_at_level(fib, 0, 10);
    ConeReport c20 = cone_at_level(fib, 0, 20);
    c.require(c5.rank == 2 && c10.rank == 2 && c20.rank == 2, "cone rank != 2");
    c.require(c5.angular_width > c10.angular_width && c10.angular_width > c20.angular_width,
              "angular width not strictly decreasing");
    c.require(c20.angular_width < 1e-6, "angular width at m=20 not below 1e-6");

    // exact verification from the generator integers: |cross| = 1 and
    // cross^2 * 10^12 < |g1|^2 |g2|^2 certifies sin(theta) < 1e-6
    std::vector<Int> g1 = c20.generators.column(0);
    std::vector<Int> g2 = c20.generators.column(1);
    Int cross = g1[0] * g2[1] - g1[1] * g2[0];
    Int n1 = g1[0] * g1[0] + g1[1] * g1[1];
    Int n2 = g2[0] * g2[0] + g2[1] * g2[1];
    c.require(cross * cross == 1, "generator determinant != +-1");
    Int bound = cross * cross;
    for (int i = 0; i < 12; ++i) bound *= 10;
    c.require(bound < n1 * n2, "exact contraction certificate failed");
    std::ostringstream widths;
    widths << "widths " << c5.angular_width << " > " << c10.angular_width << " > "
           << c20.angular_width;
    c.detail << widths.str();
}

}  // namespace

int main() {
    std::vector<Result> results;
    auto timed = [&](int number, const std::string& name, const std::function<void(Checker&)>& fn) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back({number, name, c.pass, c.detail.str(), secs});
    };

    timed(1, "example 6.3 exact replication (< 1 s)", [](Checker& c) { criterion_1(c); });

    RandomTransferResults shared;
    timed(2, "characteristic coherence on 500 randomized transfers (< 30 s)", [&](Checker& c) {
        shared = run_random_transfers();
        c.require(shared.runs == 500, "did not complete 500 runs");
        c.require(shared.coherence_failures == 0,
                  std::to_string(shared.coherence_failures) + " coherence failures");
        c.detail << shared.runs << " transfers";
    });
    timed(3, "zeta commutation, mass formula and cylinder inequality", [&](Checker& c) {
        c.require(shared.zeta_failures == 0, "zeta commutation failed");
        c.require(shared.mass_failures == 0, "mass formula failed");
        c.require(shared.inequality_failures == 0, "cylinder inequality failed");
        c.detail << shared.inequality_checked << " inequality checks";
    });
    timed(4, "functoriality on 100 randomized composable pairs", [](Checker& c) { criterion_4(c); });
    timed(6, "tower evaluation convergence (< 10 s)", [](Checker& c) { criterion_6(c); });
    timed(7, "prolongation coherence on Fibonacci and example 6.3", [](Checker& c) { criterion_7(c); });
    timed(8, "diagonal family certificate (< 60 s)", [](Checker& c) { criterion_8(c); });
    timed(9, "recognizability verdicts (< 10 s)", [](Checker& c) { criterion_9(c); });
    timed(10, "fibonacci cone contraction", [](Checker& c) { criterion_10(c); });
    timed(5, "kirchhoff closure on every produced table", [](Checker& c) {
        c.require(g_tables_checked > 0, "no tables were produced");
        c.require(g_kirchhoff_failures == 0,
                  std::to_string(g_kirchhoff_failures) + " tables failed the check");
        c.detail << g_tables_checked << " tables checked";
    });

    // runtime limits from the criteria
    for (auto& res : results) {
        double limit = 0;
        if (res.number == 1) limit = 1.0;
        if (res.number == 2) limit = 30.0;
        if (res.number == 6 || res.number == 9) limit = 10.0;
        if (res.number == 8) limit = 60.0;
        if (limit > 0 && res.seconds >= limit) {
            res.pass = false;
            res.detail += (res.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
        }
    }

    std::sort(results.begin(), results.end(),
              [](const Result& a, const Result& b) { return a.number < b.number; });
    int failures = 0;
    for (const auto& res : results) {
        std::ostringstream line;
        line << (res.pass ? "[PASS]" : "[FAIL]") << " criterion " << res.number << ": " << res.name;
        if (!res.detail.empty()) line << " — " << res.detail;
        line << " (" << std::fixed << std::setprecision(2) << res.seconds << " s)";
        std::cout << line.str() << "\n";
        if (!res.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
