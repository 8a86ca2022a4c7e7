#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sadic {

// A finite ordered set of letter names. Declaration order is the canonical
// basis order of the associated vector space. Immutable; copies share state.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names) {
        if (names.empty()) throw std::invalid_argument("alphabet must be non-empty");
        auto index = std::make_shared<std::map<std::string, std::int32_t>>();
        bool single = true;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw std::invalid_argument("empty letter name");
            if (!index->emplace(names[i], static_cast<std::int32_t>(i)).second)
                throw std::invalid_argument("duplicate letter name: " + names[i]);
            if (names[i].size() != 1) single = false;
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
        index_ = std::move(index);
        single_char_ = single;
    }

    // Convenience: one letter per character, e.g. from_letters("ab").
    static Alphabet from_letters(const std::string& chars) {
        std::vector<std::string> names;
        names.reserve(chars.size());
        for (char c : chars) names.emplace_back(1, c);
        return Alphabet(std::move(names));
    }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::int32_t i) const { return names_->at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return *names_; }
    bool single_char() const { return single_char_; }

    std::optional<std::int32_t> index_of(const std::string& name) const {
        auto it = index_->find(name);
        if (it == index_->end()) return std::nullopt;
        return it->second;
    }

    std::int32_t require(const std::string& name) const {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("no such letter: " + name);
        return *i;
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
    std::shared_ptr<const std::map<std::string, std::int32_t>> index_;
    bool single_char_ = true;
};

}  // namespace sadic
