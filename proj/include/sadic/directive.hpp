#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sadic/errors.hpp"
#include "sadic/morphism.hpp"

namespace sadic {

// A finitely described directive sequence of level morphisms
// sigma_n : A*_{n+1} -> A*_n for 0 <= n < max_depth. Infinite sequences are
// represented by a rule plus an explicit materializable depth; every analysis
// reports the depth it used.
class DirectiveSequence {
public:
    using Rule = std::function<Morphism(std::size_t)>;

    static DirectiveSequence stationary(const Morphism& m, std::size_t depth) {
        if (m.source() != m.target())
            throw std::invalid_argument("stationary sequence needs an endomorphism");
        return DirectiveSequence([m](std::size_t) { return m; }, depth);
    }

    static DirectiveSequence from_prefix_and_tail(std::vector<Morphism> prefix,
                                                  const Morphism& tail, std::size_t depth) {
        if (tail.source() != tail.target())
            throw std::invalid_argument("stationary tail needs an endomorphism");
        auto pre = std::make_shared<const std::vector<Morphism>>(std::move(prefix));
        return DirectiveSequence(
            [pre, tail](std::size_t n) { return n < pre->size() ? (*pre)[n] : tail; }, depth);
    }

    static DirectiveSequence periodic(std::vector<Morphism> cycle, std::size_t depth) {
        if (cycle.empty()) throw std::invalid_argument("empty cycle");
        auto cyc = std::make_shared<const std::vector<Morphism>>(std::move(cycle));
        return DirectiveSequence([cyc](std::size_t n) { return (*cyc)[n % cyc->size()]; }, depth);
    }

    static DirectiveSequence from_rule(Rule rule, std::size_t depth) {
        return DirectiveSequence(std::move(rule), depth);
    }

    std::size_t max_depth() const { return state_->depth; }

    // The level morphism sigma_n, memoized. Consecutive alphabets must chain.
    const Morphism& level(std::size_t n) const {
        if (n >= state_->depth)
            throw DepthExhaustedError("level beyond materializable depth", state_->depth);
        std::lock_guard<std::mutex> lock(state_->mutex);
        auto it = state_->levels.find(n);
        if (it != state_->levels.end()) return it->second;
        Morphism m = state_->rule(n + state_->offset);
        auto prev = state_->levels.find(n - 1);
        if (n > 0 && prev != state_->levels.end() && prev->second.source() != m.target())
            throw std::invalid_argument("level alphabets do not chain");
        auto next = state_->levels.find(n + 1);
        if (next != state_->levels.end() && m.source() != next->second.target())
            throw std::invalid_argument("level alphabets do not chain");
        return state_->levels.emplace(n, std::move(m)).first->second;
    }

    // A_n: target of sigma_n, or the source of the deepest morphism at the top.
    Alphabet alphabet(std::size_t n) const {
        if (n < state_->depth) return level(n).target();
        if (n == state_->depth && state_->depth > 0) return level(n - 1).source();
        throw DepthExhaustedError("alphabet beyond materializable depth", state_->depth);
    }

    // sigma_[n,m) = sigma_n . sigma_{n+1} . ... . sigma_{m-1}; cached, with
    // reuse of previously composed spans.
    Morphism telescope(std::size_t n, std::size_t m) const {
        if (!(n < m)) throw std::invalid_argument("telescope needs n < m");
        if (m > state_->depth)
            throw DepthExhaustedError("telescope beyond materializable depth", state_->depth);
        {
            std::lock_guard<std::mutex> lock(state_->mutex);
            auto it = state_->telescopes.find({n, m});
            if (it != state_->telescopes.end()) return it->second;
        }
        Morphism result = [&] {
            if (m == n + 1) return level(n);
            Morphism acc = telescope(n, m - 1);
            return compose(acc, level(m - 1));
        }();
        std::lock_guard<std::mutex> lock(state_->mutex);
        return state_->telescopes.emplace(std::make_pair(n, m), std::move(result)).first->second;
    }

    // Same rule, materializable depth clamped to the cap.
    DirectiveSequence capped(std::size_t cap) const {
        if (cap >= state_->depth) return *this;
        DirectiveSequence out(state_->rule, cap);
        out.state_->offset = state_->offset;
        return out;
    }

    // (sigma_k)_{k>=n}, reindexed from 0. Shares the underlying rule.
    DirectiveSequence truncate(std::size_t n) const {
        if (n > state_->depth)
            throw std::invalid_argument("truncation level beyond materializable depth");
        DirectiveSequence out(state_->rule, state_->depth - n);
        out.state_->offset = state_->offset + n;
        return out;
    }

    // beta_-(n) = min over a in A_n of |sigma_[0,n)(a)|, for n >= 1.
    // Not guaranteed monotone.
    Int beta_minus(std::size_t n) const {
        if (n < 1) throw std::invalid_argument("beta_minus needs n >= 1");
        const Morphism& t = telescope(0, n);
        Int best = Int(t.image(0).size());
        for (std::size_t a = 1; a < t.source().size(); ++a)
            best = std::min(best, Int(t.image(static_cast<std::int32_t>(a)).size()));
        return best;
    }

private:
    struct State {
        Rule rule;
        std::size_t depth;
        std::size_t offset = 0;
        mutable std::mutex mutex;
        mutable std::map<std::size_t, Morphism> levels;
        mutable std::map<std::pair<std::size_t, std::size_t>, Morphism> telescopes;
    };

    DirectiveSequence(Rule rule, std::size_t depth) : state_(std::make_shared<State>()) {
        if (depth == 0) throw std::invalid_argument("sequence depth must be positive");
        state_->rule = std::move(rule);
        state_->depth = depth;
    }

    std::shared_ptr<State> state_;
};

struct GrowthLevel {
    Int beta_minus;
    bool nondecreasing;  // vs the previous level
};

// Finite-depth growth diagnostics: beta_- values plus the positivity
// criterion scan. Never a proof of "everywhere growing".
struct GrowthReport {
    std::vector<GrowthLevel> levels;  // index n = 1..N for beta; positivity indexed from n = 0
    std::vector<std::optional<std::size_t>> positivity;  // per level n in [0, N)
    bool everywhere_growing_up_to_depth = false;
    std::size_t depth_used = 0;
    std::size_t probe_used = 0;
};

inline GrowthReport growth_report(const DirectiveSequence& seq, std::size_t N, std::size_t P) {
    if (N > seq.max_depth() || N == 0)
        throw std::invalid_argument("growth report depth out of range");
    GrowthReport report;
    report.depth_used = N;
    report.probe_used = P;
    Int prev(0);
    for (std::size_t n = 1; n <= N; ++n) {
        GrowthLevel lvl;
        lvl.beta_minus = seq.beta_minus(n);
        lvl.nondecreasing = (n == 1) || lvl.beta_minus >= prev;
        prev = lvl.beta_minus;
        report.levels.push_back(std::move(lvl));
    }
    bool all_positive = true;
    for (std::size_t n = 0; n < N; ++n) {
        std::optional<std::size_t> found;
        std::size_t limit = std::min(seq.max_depth(), n + P);
        for (std::size_t m = n + 1; m <= limit; ++m) {
            if (incidence_matrix(seq.telescope(n, m)).is_positive()) { found = m; break; }
        }
        if (!found) all_positive = false;
        report.positivity.push_back(found);
    }
    report.everywhere_growing_up_to_depth = all_positive;
    return report;
}

}  // namespace sadic
