// Command line front end: loads a sequence descriptor, dispatches to the
// analyses, and writes deterministic JSON/CSV/text reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sadic/sadic.hpp"

namespace {

using sadic::Json;

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;     // malformed input, unknown subcommand
constexpr int kExitPrecondition = 2;  // math precondition violated
constexpr int kExitExhausted = 3;     // finite depth/coverage ran out

struct Output {
    std::string path;  // empty = stdout
    std::string format = "json";

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write output file: " + path);
        out << text;
    }

    void emit_json(const Json& j) const { write(j.dump(2) + "\n"); }
};

std::size_t depth_cap() {
    const char* env = std::getenv("SADIC_MAX_DEPTH");
    if (!env) return 256;
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // report line/column from the byte offset
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        throw nlohmann::json::other_error::create(
            100, path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what(),
            nullptr);
    }
}

sadic::DirectiveSequence load_sequence(const std::string& path) {
    // SADIC_MAX_DEPTH is a hard safety cap on the materializable depth
    std::size_t cap = depth_cap();
    return sadic::sequence_from_json(parse_json_file(path), std::min<std::size_t>(32, cap))
        .capped(cap);
}

Json complexity_rows(const sadic::LanguageTable& table) {
    Json rows = Json::array();
    for (std::size_t n = 1; n <= table.max_len(); ++n) {
        auto [p, est] = sadic::complexity(table, n);
        Json row;
        row["n"] = n;
        row["p"] = p;
        row["log_p_over_n"] = est;
        rows.push_back(row);
    }
    return rows;
}

Json example_6_3_report() {
    using namespace sadic;
    auto ex = build_example_6_3();
    Alphabet mid = ex.sigma0.source();
    Alphabet top = ex.sigma1.source();

    Json j;
    j["sequence"] = {{"sigma0", morphism_to_json(ex.sigma0)},
                     {"sigma1", morphism_to_json(ex.sigma1)},
                     {"tail", morphism_to_json(ex.doubling)}};
    j["telescoped_period_words"] = {ex.period_word_first.str(), ex.period_word_second.str()};

    WeightTable mu_w = characteristic_measure(Word::parse(mid, "aab"), 8);
    WeightTable mu_wp = characteristic_measure(Word::parse(mid, "bba"), 8);
    j["letter_frequencies"] = {{"aab", frequency_to_json(letter_frequency(mu_w))},
                               {"bba", frequency_to_json(letter_frequency(mu_wp))}};

    WeightTable t_w = transfer_measure(ex.sigma0, mu_w, 6);
    WeightTable t_wp = transfer_measure(ex.sigma0, mu_wp, 6);
    j["transferred_tables"] = {{"aab", weight_table_to_json(t_w)}, {"bba", weight_table_to_json(t_wp)}};

    auto crit = critical_level_estimate(ex.sequence, 4, 2);
    j["cone_ranks"] = crit.ranks;
    j["apparent_critical_level"] = crit.apparent_critical_level;
    j["thin"] = crit.thin;
    return j;
}

Json diagonal_report(std::size_t d, const std::vector<std::size_t>& ell) {
    using namespace sadic;
    DiagonalFamilySpec spec{d, ell};
    auto family = build_diagonal_towers(spec, d, Rational(1), Rational(1));
    Json j;
    j["d"] = d;
    j["ell"] = ell;
    j["blocks"] = spec.blocks();
    j["n0"] = family.n0;
    Json sched = Json::array();
    for (const auto& [l1, l2] : family.lambda_schedule)
        sched.push_back({{"lambda1", to_string(l1)}, {"lambda2", to_string(l2)}});
    j["lambda_schedule"] = sched;
    Json towers = Json::array();
    std::vector<std::vector<Rational>> at_n0, at_base;
    for (const auto& tower : family.towers) {
        towers.push_back(tower_to_json(tower));
        at_n0.push_back(tower.vec(family.n0));
        at_base.push_back(tower.vec(0));
    }
    j["towers"] = towers;
    j["rank_at_n0"] = exact_rank_of_columns(at_n0);
    j["rank_at_base"] = exact_rank_of_columns(at_base);
    auto bound = entropy_upper_bound(family.sequence, family.sequence.max_depth());
    j["entropy_upper_bound"] = {{"value", bound.value},
                                {"level", bound.level},
                                {"alphabet_size", bound.alphabet_size},
                                {"beta_minus", bound.beta_minus.str()},
                                {"log_base", "e"}};
    auto growth = growth_report(family.sequence, family.sequence.max_depth() - 1, 2);
    j["growth"] = growth_report_to_json(growth);
    return j;
}

std::vector<std::size_t> parse_ell(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stoull(piece));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact S-adic subshift toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string sequence_path, out_path, format = "json";
    app.add_option("--sequence", sequence_path, "sequence descriptor (JSON)");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* cmd_language = app.add_subcommand("language", "admitted factors at a level");
    std::size_t lang_level = 0, lang_len = 4, lang_depth = 8;
    cmd_language->add_option("--level", lang_level);
    cmd_language->add_option("--len", lang_len)->required();
    cmd_language->add_option("--depth", lang_depth)->required();

    auto* cmd_entropy = app.add_subcommand("entropy-bound", "letter-image-length entropy bound");
    std::size_t ent_depth = 8;
    cmd_entropy->add_option("--depth", ent_depth)->required();

    auto* cmd_transfer = app.add_subcommand("transfer", "measure transfer of a characteristic table");
    std::string transfer_word;
    std::size_t transfer_level = 0, transfer_len = 6;
    cmd_transfer->add_option("--word", transfer_word)->required();
    cmd_transfer->add_option("--level", transfer_level);
    cmd_transfer->add_option("--target-len", transfer_len)->required();

    auto* cmd_tower = app.add_subcommand("tower-eval", "evaluate a characteristic-style tower");
    std::string tower_letter, tower_word;
    std::size_t tower_top = 8, tower_level = 8;
    cmd_tower->add_option("--top-letter", tower_letter)->required();
    cmd_tower->add_option("--top", tower_top)->required();
    cmd_tower->add_option("--word", tower_word)->required();
    cmd_tower->add_option("--level", tower_level)->required();

    auto* cmd_cones = app.add_subcommand("cones", "letter frequency cone probe");
    std::size_t cone_level = 0, cone_probe = 2;
    cmd_cones->add_option("--level", cone_level)->required();
    cmd_cones->add_option("--probe", cone_probe)->required();

    auto* cmd_critical = app.add_subcommand("critical-level", "cone rank scan per level");
    std::size_t crit_depth = 4, crit_extra = 2;
    cmd_critical->add_option("--depth", crit_depth)->required();
    cmd_critical->add_option("--probe-extra", crit_extra);

    auto* cmd_recog = app.add_subcommand("recognizability", "bounded-window recognizability scan");
    std::size_t recog_level = 0, recog_radius = 1;
    std::size_t recog_table_depth = 0;  // 0 = pick automatically
    bool aperiodic_only = false;
    cmd_recog->add_option("--level", recog_level);
    cmd_recog->add_option("--radius", recog_radius)->required();
    cmd_recog->add_option("--table-depth", recog_table_depth);
    cmd_recog->add_flag("--aperiodic-only", aperiodic_only);

    auto* cmd_demo = app.add_subcommand("demo", "built-in constructions");
    auto* demo_ex = cmd_demo->add_subcommand("example-6-3", "two-periodic system with hidden measure");
    auto* demo_diag = cmd_demo->add_subcommand("diagonal", "alternating diagonal family");
    std::size_t demo_d = 2, demo_depth = 0;
    std::string demo_ell = "4,8";
    demo_diag->add_option("--d", demo_d);
    demo_diag->add_option("--ell", demo_ell);
    demo_diag->add_option("--depth", demo_depth);
    cmd_demo->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUserError;
    }

    Output out{out_path, format};

    try {
        auto sequence = [&]() -> sadic::DirectiveSequence {
            if (sequence_path.empty())
                throw std::invalid_argument("this subcommand needs --sequence");
            return load_sequence(sequence_path);
        };

        if (*cmd_language) {
            auto seq = sequence();
            auto table = sadic::generate_language(seq, lang_level, lang_len, lang_depth);
            if (format == "text") {
                std::string text;
                for (std::size_t n = 1; n <= table.max_len(); ++n) {
                    auto [p, est] = sadic::complexity(table, n);
                    text += "# n=" + std::to_string(n) + " p=" + std::to_string(p) + "\n";
                }
                text += sadic::language_to_text(table);
                out.write(text);
            } else {
                Json j = sadic::language_to_json(table);
                j["complexity"] = complexity_rows(table);
                out.emit_json(j);
            }
        } else if (*cmd_entropy) {
            auto seq = sequence();
            auto bound = sadic::entropy_upper_bound(seq, ent_depth);
            Json j;
            j["value"] = bound.value;
            j["level"] = bound.level;
            j["alphabet_size"] = bound.alphabet_size;
            j["beta_minus"] = bound.beta_minus.str();
            j["depth_used"] = bound.depth_used;
            j["log_base"] = "e";
            out.emit_json(j);
        } else if (*cmd_transfer) {
            auto seq = sequence();
            const auto& sigma = seq.level(transfer_level);
            auto w = sadic::Word::parse(sigma.source(), transfer_word);
            auto required = sadic::transfer_input_bound(sigma, transfer_len);
            auto table = sadic::characteristic_measure(w, required);
            auto result = sadic::transfer_measure(sigma, table, transfer_len);
            if (format == "csv")
                out.write(sadic::weight_table_to_csv(result));
            else
                out.emit_json(sadic::weight_table_to_json(result));
        } else if (*cmd_tower) {
            auto seq = sequence();
            auto letter = seq.alphabet(tower_top).require(tower_letter);
            auto tower = sadic::characteristic_tower(seq, tower_top, letter);
            auto w = sadic::Word::parse(seq.alphabet(0), tower_word);
            auto eval = sadic::evaluate_tower(seq, tower, w, tower_level);
            Json j;
            j["word"] = w.str();
            j["level"] = eval.level;
            j["value"] = sadic::to_string(eval.value);
            j["error_bound"] = sadic::to_string(eval.error_bound);
            out.emit_json(j);
        } else if (*cmd_cones) {
            auto seq = sequence();
            out.emit_json(sadic::cone_report_to_json(sadic::cone_at_level(seq, cone_level, cone_probe)));
        } else if (*cmd_critical) {
            auto seq = sequence();
            out.emit_json(sadic::critical_report_to_json(
                sadic::critical_level_estimate(seq, crit_depth, crit_extra)));
        } else if (*cmd_recog) {
            auto seq = sequence();
            const auto& sigma = seq.level(recog_level);
            std::size_t margin =
                (recog_radius + sigma.min_image_length() - 1) / sigma.min_image_length();
            std::size_t needed = 2 * margin + 2;
            std::size_t table_depth = recog_table_depth
                                          ? recog_table_depth
                                          : std::min(seq.max_depth(), recog_level + 1 + 12);
            auto table = sadic::generate_language(seq, recog_level + 1, needed, table_depth);
            auto verdict = sadic::recognizability_scan(sigma, table, recog_radius, aperiodic_only);
            if (format == "text")
                out.write(sadic::verdict_to_text(verdict, sigma));
            else
                out.emit_json(sadic::verdict_to_json(verdict));
        } else if (*cmd_demo) {
            if (*demo_ex) {
                out.emit_json(example_6_3_report());
            } else {
                auto ell = parse_ell(demo_ell);
                if (demo_depth != 0 && demo_depth != ell.size())
                    throw std::invalid_argument("--depth must match the number of --ell entries");
                out.emit_json(diagonal_report(demo_d, ell));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const sadic::DepthExhaustedError& e) {
        std::cerr << "depth exhausted: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const sadic::CoverageError& e) {
        std::cerr << "coverage: " << e.what() << " (required length " << e.required_length()
                  << ")\n";
        return kExitExhausted;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    }
    return kExitOk;
}
