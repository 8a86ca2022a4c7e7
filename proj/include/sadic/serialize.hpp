#pragma once

#include <json.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sadic/constructions.hpp"
#include "sadic/directive.hpp"
#include "sadic/language.hpp"
#include "sadic/measures.hpp"
#include "sadic/recognizability.hpp"
#include "sadic/towers.hpp"

namespace sadic {

// Reports use insertion-ordered JSON so identical inputs give byte-identical
// artifacts.
using Json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const Json& j, const std::set<std::string>& allowed,
                         const std::string& what) {
    if (!j.is_object()) throw std::invalid_argument(what + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument(what + ": unknown key '" + it.key() + "'");
}

inline Alphabet alphabet_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument(what + ": expected a letter array");
    std::vector<std::string> names;
    for (const auto& x : j) names.push_back(x.get<std::string>());
    return Alphabet(std::move(names));
}

}  // namespace detail

inline Json alphabet_to_json(const Alphabet& a) {
    Json j = Json::array();
    for (const auto& n : a.names()) j.push_back(n);
    return j;
}

inline Json morphism_to_json(const Morphism& m) {
    Json j;
    j["source"] = alphabet_to_json(m.source());
    j["target"] = alphabet_to_json(m.target());
    Json images = Json::object();
    for (std::size_t a = 0; a < m.source().size(); ++a)
        images[m.source().name(static_cast<std::int32_t>(a))] =
            m.image(static_cast<std::int32_t>(a)).str();
    j["images"] = images;
    return j;
}

inline Morphism morphism_from_json(const Json& j) {
    detail::require_keys(j, {"source", "target", "images"}, "morphism");
    Alphabet source = detail::alphabet_from_json(j.at("source"), "morphism source");
    Alphabet target = detail::alphabet_from_json(j.at("target"), "morphism target");
    const Json& images = j.at("images");
    if (!images.is_object()) throw std::invalid_argument("morphism: images must be an object");
    std::vector<std::string> texts(source.size());
    std::set<std::string> given;
    for (auto it = images.begin(); it != images.end(); ++it) {
        auto idx = source.index_of(it.key());
        if (!idx) throw std::invalid_argument("morphism: image for unknown letter '" + it.key() + "'");
        texts[static_cast<std::size_t>(*idx)] = it.value().get<std::string>();
        given.insert(it.key());
    }
    if (given.size() != source.size())
        throw std::invalid_argument("morphism: every source letter needs an image");
    return Morphism::parse(source, target, texts);
}

// Sequence descriptors:
//   {"kind":"stationary","tail":M,"depth":32}
//   {"kind":"prefix+stationary","prefix":[M...],"tail":M,"depth":32}
//   {"kind":"periodic","cycle":[M...],"depth":32}
//   {"kind":"parameterized","family":"diagonal","params":{"d0":2,"ell":[4,8]}}
//   {"kind":"parameterized","family":"example-6-3","params":{"depth":16}}
inline DirectiveSequence sequence_from_json(const Json& j, std::size_t default_depth = 32) {
    detail::require_keys(j, {"kind", "prefix", "tail", "cycle", "family", "params", "depth"},
                         "sequence");
    std::string kind = j.at("kind").get<std::string>();
    std::size_t depth = j.value("depth", default_depth);
    if (kind == "stationary") {
        return DirectiveSequence::stationary(morphism_from_json(j.at("tail")), depth);
    }
    if (kind == "prefix+stationary") {
        std::vector<Morphism> prefix;
        for (const auto& m : j.at("prefix")) prefix.push_back(morphism_from_json(m));
        return DirectiveSequence::from_prefix_and_tail(std::move(prefix),
                                                       morphism_from_json(j.at("tail")), depth);
    }
    if (kind == "periodic") {
        std::vector<Morphism> cycle;
        for (const auto& m : j.at("cycle")) cycle.push_back(morphism_from_json(m));
        return DirectiveSequence::periodic(std::move(cycle), depth);
    }
    if (kind == "parameterized") {
        std::string family = j.at("family").get<std::string>();
        Json params = j.value("params", Json::object());
        if (family == "diagonal") {
            detail::require_keys(params, {"d0", "ell"}, "diagonal params");
            DiagonalFamilySpec spec;
            spec.d0 = params.value("d0", std::size_t{2});
            for (const auto& l : params.at("ell")) spec.ell.push_back(l.get<std::size_t>());
            return build_diagonal_sequence(spec);
        }
        if (family == "example-6-3") {
            detail::require_keys(params, {"depth"}, "example-6-3 params");
            return build_example_6_3(params.value("depth", depth)).sequence;
        }
        throw std::invalid_argument("unknown parameterized family: " + family);
    }
    throw std::invalid_argument("unknown sequence kind: " + kind);
}

inline Json weight_table_to_json(const WeightTable& t) {
    Json j;
    j["alphabet"] = alphabet_to_json(t.alphabet());
    j["L"] = t.max_len();
    j["mass"] = to_string(t.mass());
    Json weights = Json::object();
    for (const auto& [w, v] : t.entries())
        weights[Word(t.alphabet(), w).str()] = to_string(v);
    j["weights"] = weights;
    return j;
}

inline WeightTable weight_table_from_json(const Json& j) {
    detail::require_keys(j, {"alphabet", "L", "mass", "weights"}, "weight table");
    Alphabet a = detail::alphabet_from_json(j.at("alphabet"), "weight table alphabet");
    WeightTable t(a, j.at("L").get<std::size_t>(), parse_rational(j.at("mass").get<std::string>()));
    for (auto it = j.at("weights").begin(); it != j.at("weights").end(); ++it)
        t.set_weight(Word::parse(a, it.key()).letters(),
                     parse_rational(it.value().get<std::string>()));
    return t;
}

// CSV export: (word, weight), sorted lexicographically by word text.
inline std::string weight_table_to_csv(const WeightTable& t) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [w, v] : t.entries())
        rows.emplace_back(Word(t.alphabet(), w).str(), to_string(v));
    std::sort(rows.begin(), rows.end());
    std::string out = "word,weight\n";
    for (const auto& [w, v] : rows) out += w + "," + v + "\n";
    return out;
}

inline Json frequency_to_json(const FrequencyVector& v) {
    Json j = Json::array();
    for (const auto& c : v.coords) j.push_back(to_string(c));
    return j;
}

inline Json tower_to_json(const VectorTower& t) {
    Json levels = Json::array();
    for (const auto& v : t.levels()) {
        Json lvl = Json::array();
        for (const auto& x : v) lvl.push_back(to_string(x));
        levels.push_back(lvl);
    }
    Json j;
    j["levels"] = levels;
    return j;
}

inline VectorTower tower_from_json(const Json& j) {
    detail::require_keys(j, {"levels"}, "tower");
    std::vector<std::vector<Rational>> levels;
    for (const auto& lvl : j.at("levels")) {
        std::vector<Rational> v;
        for (const auto& x : lvl) v.push_back(parse_rational(x.get<std::string>()));
        levels.push_back(std::move(v));
    }
    return VectorTower(std::move(levels));
}

inline Json language_to_json(const LanguageTable& t) {
    Json j;
    j["alphabet"] = alphabet_to_json(t.alphabet());
    j["L"] = t.max_len();
    j["depth_used"] = t.depth_used();
    j["stabilized"] = t.stabilized();
    Json words = Json::object();
    for (std::size_t len = 1; len <= t.max_len(); ++len) {
        Json arr = Json::array();
        for (const auto& w : t.words_of_length(len)) arr.push_back(Word(t.alphabet(), w).str());
        words[std::to_string(len)] = arr;
    }
    j["words"] = words;
    return j;
}

inline std::string language_to_text(const LanguageTable& t) {
    std::string out;
    for (std::size_t len = 1; len <= t.max_len(); ++len)
        for (const auto& w : t.words_of_length(len)) out += Word(t.alphabet(), w).str() + "\n";
    return out;
}

inline Json cone_report_to_json(const ConeReport& r) {
    Json j;
    j["level"] = r.level;
    j["probe"] = r.probe;
    Json gens = Json::array();
    for (std::size_t i = 0; i < r.generators.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < r.generators.cols(); ++k)
            row.push_back(r.generators.at(i, k).str());
        gens.push_back(row);
    }
    j["generators"] = gens;
    j["rank"] = r.rank;
    Json rays = Json::array();
    for (const auto& ray : r.extreme_rays) {
        Json rr = Json::array();
        for (const auto& x : ray) rr.push_back(x.str());
        rays.push_back(rr);
    }
    j["extreme_rays"] = rays;
    j["extreme_exact"] = r.extreme_exact;
    j["angular_width"] = r.angular_width;
    return j;
}

inline Json critical_report_to_json(const CriticalLevelReport& r) {
    Json j;
    j["ranks"] = r.ranks;
    j["probes"] = r.probes;
    j["apparent_critical_level"] = r.apparent_critical_level;
    j["thin"] = r.thin;
    j["invertible_shortcut"] = r.invertible_shortcut;
    j["depth_used"] = r.depth_used;
    j["probe_extra"] = r.probe_extra;
    return j;
}

inline Json growth_report_to_json(const GrowthReport& r) {
    Json j;
    Json beta = Json::array();
    for (const auto& lvl : r.levels) beta.push_back(lvl.beta_minus.str());
    j["beta_minus"] = beta;
    Json pos = Json::array();
    for (const auto& p : r.positivity) {
        if (p)
            pos.push_back(*p);
        else
            pos.push_back(nullptr);
    }
    j["first_positive_probe"] = pos;
    j["everywhere_growing_up_to_depth"] = r.everywhere_growing_up_to_depth;
    j["depth_used"] = r.depth_used;
    j["probe_used"] = r.probe_used;
    return j;
}

inline Json verdict_to_json(const RecognizabilityVerdict& v) {
    Json j;
    switch (v.kind) {
        case RecognizabilityVerdict::Kind::Witness: j["verdict"] = "WITNESS"; break;
        case RecognizabilityVerdict::Kind::Clear: j["verdict"] = "CLEAR"; break;
        case RecognizabilityVerdict::Kind::Unknown: j["verdict"] = "UNKNOWN"; break;
    }
    j["radius"] = v.radius;
    if (v.witness) {
        auto config = [](const MarkerConfig& c, const Word& src) {
            Json m;
            m["letter"] = c.letter;
            m["offset"] = c.offset;
            m["left_context"] = c.left_context.str();
            m["right_context"] = c.right_context.str();
            m["source_window"] = src.str();
            return m;
        };
        j["first"] = config(v.witness->first, v.witness->source_first);
        j["second"] = config(v.witness->second, v.witness->source_second);
        j["shared_window"] = v.witness->shared_window.str();
    }
    return j;
}

inline std::string verdict_to_text(const RecognizabilityVerdict& v, const Morphism& sigma) {
    std::string out;
    switch (v.kind) {
        case RecognizabilityVerdict::Kind::Witness: out = "WITNESS"; break;
        case RecognizabilityVerdict::Kind::Clear: out = "CLEAR"; break;
        case RecognizabilityVerdict::Kind::Unknown: out = "UNKNOWN"; break;
    }
    out += " at radius " + std::to_string(v.radius) + "\n";
    if (v.witness) {
        auto show = [&](const char* tag, const MarkerConfig& c, const Word& src) {
            std::string s(tag);
            s += ": letter " + sigma.source().name(c.letter) + " offset " +
                 std::to_string(c.offset) + ", context " + c.left_context.str() + " [" +
                 sigma.image(c.letter).str() + "] " + c.right_context.str() + ", source window " +
                 src.str() + "\n";
            return s;
        };
        out += show("marker 1", v.witness->first, v.witness->source_first);
        out += show("marker 2", v.witness->second, v.witness->source_second);
        out += "shared image window: " + v.witness->shared_window.str() + "\n";
    }
    return out;
}

}  // namespace sadic
