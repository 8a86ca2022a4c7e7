#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/matrix.hpp"
#include "sadic/measures.hpp"

namespace sadic {

// Nonnegative rational vectors v_0 .. v_N over the level alphabets of a
// directive sequence, finite-depth stand-in for an infinite vector tower.
// The defining compatibility is v_n = M(sigma_n) v_{n+1}.
class VectorTower {
public:
    explicit VectorTower(std::vector<std::vector<Rational>> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw std::invalid_argument("tower needs at least the base level");
        for (const auto& v : levels_)
            for (const auto& x : v)
                if (x < 0) throw std::invalid_argument("tower vectors must be nonnegative");
    }

    std::size_t depth() const { return levels_.size() - 1; }
    const std::vector<Rational>& vec(std::size_t n) const { return levels_.at(n); }
    const std::vector<std::vector<Rational>>& levels() const { return levels_; }

    Rational mass(std::size_t n) const {
        Rational m(0);
        for (const auto& x : vec(n)) m += x;
        return m;
    }

private:
    std::vector<std::vector<Rational>> levels_;
};

// Pushes a top vector down through the incidence matrices; compatibility
// holds by construction.
inline VectorTower tower_from_top(const DirectiveSequence& seq, std::size_t top,
                                  std::vector<Rational> v_top) {
    if (top > seq.max_depth()) throw std::invalid_argument("tower top beyond materializable depth");
    if (v_top.size() != seq.alphabet(top).size())
        throw std::invalid_argument("top vector has wrong dimension");
    std::vector<std::vector<Rational>> levels(top + 1);
    levels[top] = std::move(v_top);
    for (std::size_t n = top; n > 0; --n)
        levels[n - 1] = incidence_matrix(seq.level(n - 1)).apply(levels[n]);
    return VectorTower(std::move(levels));
}

// v_top = e_letter; evaluation of this tower reproduces characteristic
// measures of the telescoped letter images.
inline VectorTower characteristic_tower(const DirectiveSequence& seq, std::size_t top,
                                        std::int32_t letter) {
    std::vector<Rational> e(seq.alphabet(top).size(), Rational(0));
    e.at(static_cast<std::size_t>(letter)) = 1;
    return tower_from_top(seq, top, std::move(e));
}

// For a stationary sequence whose matrix has the exact rational eigenpair
// (lambda, v0): v_n = v0 / lambda^n.
inline VectorTower eigenvector_tower(const DirectiveSequence& seq, std::size_t top,
                                     const std::vector<Rational>& v0, const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("eigenvalue must be positive");
    IntMatrix m = incidence_matrix(seq.level(0));
    for (std::size_t n = 1; n < top; ++n)
        if (!(incidence_matrix(seq.level(n)) == m))
            throw std::invalid_argument("eigenvector tower needs constant incidence matrices");
    std::vector<Rational> image = m.apply(v0);
    for (std::size_t i = 0; i < v0.size(); ++i)
        if (image[i] != lambda * v0[i])
            throw std::invalid_argument("not an exact eigenpair of the level matrix");
    std::vector<std::vector<Rational>> levels(top + 1);
    Rational scale(1);
    for (std::size_t n = 0; n <= top; ++n) {
        levels[n].reserve(v0.size());
        for (const auto& x : v0) levels[n].push_back(x * scale);
        scale /= lambda;
    }
    return VectorTower(std::move(levels));
}

struct TowerValidation {
    bool valid = true;
    std::vector<std::size_t> violating_levels;  // n where v_n != M(sigma_n) v_{n+1}
    std::vector<Rational> masses;               // sum of coordinates per level
};

// Exact compatibility check plus the mass sequence (for infinite towers the
// masses tend to 0; here they are just reported).
inline TowerValidation validate_tower(const DirectiveSequence& seq, const VectorTower& tower) {
    TowerValidation result;
    for (std::size_t n = 0; n <= tower.depth(); ++n) {
        if (tower.vec(n).size() != seq.alphabet(n).size())
            throw std::invalid_argument("tower vector dimension mismatch at level " + std::to_string(n));
        result.masses.push_back(tower.mass(n));
    }
    for (std::size_t n = 0; n + 1 <= tower.depth(); ++n) {
        if (incidence_matrix(seq.level(n)).apply(tower.vec(n + 1)) != tower.vec(n)) {
            result.valid = false;
            result.violating_levels.push_back(n);
        }
    }
    return result;
}

struct TowerEvaluation {
    Rational value;        // S_n = sum_a v_n(a) |sigma_[0,n)(a)|_w, exact
    Rational error_bound;  // (|w|-1) * sum_a v_n(a); occurrences crossing
                           // block junctions are the only ones S_n can miss
    std::size_t level;
};

inline TowerEvaluation evaluate_tower(const DirectiveSequence& seq, const VectorTower& tower,
                                      const Word& w, std::size_t n) {
    if (n > tower.depth()) throw std::invalid_argument("evaluation level exceeds tower depth");
    if (w.empty()) throw std::invalid_argument("evaluation of the empty word");
    if (w.alphabet() != seq.alphabet(0)) throw std::invalid_argument("word not over the base alphabet");
    Rational value(0);
    const auto& v = tower.vec(n);
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] == 0) continue;
        Letters image = n == 0 ? Letters{static_cast<std::int32_t>(a)}
                               : seq.telescope(0, n).image(static_cast<std::int32_t>(a)).letters();
        std::size_t count = count_occurrences(image, w.letters());
        if (count) value += v[a] * Rational(static_cast<long>(count));
    }
    Rational bound = Rational(static_cast<long>(w.size() - 1)) * tower.mass(n);
    return {std::move(value), std::move(bound), n};
}

// One weight table per level, linked by exact measure transfer.
struct MeasureTower {
    std::vector<WeightTable> tables;       // level 0 .. N
    std::vector<Rational> error_bounds;    // per level: (L-1) * top mass of the tower
    std::size_t top_level = 0;
};

// Level-k tables obtained by evaluating the truncated tower at the deepest
// available level, with occurrences counted cyclically. Cyclic counting
// keeps every table exactly Kirchhoff and exactly letter-frequency-faithful
// (zeta(table_k) = v_k), while staying within the same junction error bound
// of the limit measure as the plain partial sums.
inline MeasureTower levelwise_measures(const DirectiveSequence& seq, const VectorTower& tower,
                                       std::size_t L) {
    std::size_t N = tower.depth();
    const auto& v_top = tower.vec(N);
    Rational top_mass = tower.mass(N);
    MeasureTower out;
    out.top_level = N;
    for (std::size_t k = 0; k <= N; ++k) {
        WeightTable table(seq.alphabet(k), L);
        Rational mass(0);
        for (std::size_t a = 0; a < v_top.size(); ++a) {
            if (v_top[a] == 0) continue;
            Word block = k == N ? Word(seq.alphabet(k), {static_cast<std::int32_t>(a)})
                                : seq.telescope(k, N).image(static_cast<std::int32_t>(a));
            WeightTable piece = characteristic_measure(block, L);
            for (const auto& [word, weight] : piece.entries())
                table.add_weight(word, v_top[a] * weight);
            mass += v_top[a] * piece.mass();
        }
        table.set_mass(mass);
        out.tables.push_back(std::move(table));
        out.error_bounds.push_back(L >= 1 ? Rational(static_cast<long>(L - 1)) * top_mass
                                          : Rational(0));
    }
    return out;
}

// Prepends tau to the sequence and pushes the base vector through M(tau).
inline std::pair<DirectiveSequence, VectorTower> prolong_tower(const Morphism& tau,
                                                               const DirectiveSequence& seq,
                                                               const VectorTower& tower) {
    if (tau.source() != seq.alphabet(0))
        throw std::invalid_argument("prolonging morphism does not match the base alphabet");
    DirectiveSequence prolonged = DirectiveSequence::from_rule(
        [tau, seq](std::size_t n) { return n == 0 ? tau : seq.level(n - 1); },
        seq.max_depth() + 1);
    std::vector<std::vector<Rational>> levels;
    levels.reserve(tower.depth() + 2);
    levels.push_back(incidence_matrix(tau).apply(tower.vec(0)));
    for (std::size_t n = 0; n <= tower.depth(); ++n) levels.push_back(tower.vec(n));
    return {std::move(prolonged), VectorTower(std::move(levels))};
}

namespace detail {

inline std::vector<Int> primitive_ray(std::vector<Int> v) {
    Int g(0);
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// Membership g in cone(generators), exact, by Caratheodory subsets of size
// up to the ambient dimension. Intended for small dimensions only.
inline bool in_cone(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& g,
                    std::size_t ambient_dim) {
    std::vector<Rational> target(g.begin(), g.end());
    bool zero = true;
    for (const auto& x : g) zero &= (x == 0);
    if (zero) return true;
    std::size_t k = generators.size();
    std::size_t max_size = std::min(ambient_dim, k);
    std::vector<std::size_t> idx;
    // enumerate subsets of size 1..max_size
    std::vector<std::size_t> stack;
    auto try_subset = [&](const std::vector<std::size_t>& subset) {
        std::vector<std::vector<Rational>> cols;
        for (auto i : subset) {
            cols.emplace_back(generators[i].begin(), generators[i].end());
        }
        auto x = solve_exact(cols, target);
        if (!x) return false;
        for (const auto& c : *x)
            if (c < 0) return false;
        return true;
    };
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) return try_subset(stack);
        for (std::size_t i = start; i + remaining <= k; ++i) {
            stack.push_back(i);
            if (rec(i + 1, remaining - 1)) { stack.pop_back(); return true; }
            stack.pop_back();
        }
        return false;
    };
    for (std::size_t size = 1; size <= max_size; ++size)
        if (rec(0, size)) return true;
    return false;
}

}  // namespace detail

// Finite-depth outer approximation of the letter frequency cone at a level:
// generators are the columns of the telescoped incidence matrix. The rank is
// exact; extreme rays are pruned exactly for ambient dimension <= 3 and left
// as the generator list otherwise. Angular width is a floating point
// diagnostic.
struct ConeReport {
    std::size_t level = 0;
    std::size_t probe = 0;
    IntMatrix generators{1, 1};
    std::size_t rank = 0;
    std::vector<std::vector<Int>> extreme_rays;
    bool extreme_exact = false;
    double angular_width = 0.0;
};

inline double angle_between(const std::vector<Int>& u, const std::vector<Int>& v) {
    double dot = 0, nu = 0, nv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += to_double(u[i]) * to_double(v[i]);
        nu += to_double(u[i]) * to_double(u[i]);
        nv += to_double(v[i]) * to_double(v[i]);
    }
    double cross_sq = nu * nv - dot * dot;
    return std::atan2(std::sqrt(std::max(0.0, cross_sq)), dot);
}

inline ConeReport cone_at_level(const DirectiveSequence& seq, std::size_t n, std::size_t m) {
    if (!(n < m)) throw std::invalid_argument("cone probe needs n < m");
    ConeReport report;
    report.level = n;
    report.probe = m;
    report.generators = incidence_matrix(seq.telescope(n, m));
    report.rank = exact_rank(report.generators);

    std::vector<std::vector<Int>> rays;
    std::set<std::vector<std::string>> seen;  // primitive rays, deduplicated
    for (std::size_t j = 0; j < report.generators.cols(); ++j) {
        auto ray = detail::primitive_ray(report.generators.column(j));
        std::vector<std::string> key;
        for (const auto& x : ray) key.push_back(x.str());
        if (seen.insert(key).second) rays.push_back(std::move(ray));
    }

    double width = 0.0;
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            width = std::max(width, angle_between(rays[i], rays[j]));
    report.angular_width = width;

    std::size_t ambient = report.generators.rows();
    if (ambient <= 3) {
        report.extreme_exact = true;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            std::vector<std::vector<Int>> others;
            for (std::size_t j = 0; j < rays.size(); ++j)
                if (j != i) others.push_back(rays[j]);
            if (others.empty() || !detail::in_cone(others, rays[i], ambient))
                report.extreme_rays.push_back(rays[i]);
        }
    } else {
        report.extreme_exact = false;
        report.extreme_rays = rays;  // unpruned generator list
    }
    return report;
}

struct CriticalLevelReport {
    std::vector<std::size_t> ranks;   // c_n at probe n + m_extra, for n = 0..N
    std::vector<std::size_t> probes;
    std::size_t apparent_critical_level = 0;
    bool thin = false;                 // apparent critical level 0
    bool invertible_shortcut = false;  // all level matrices square and nonsingular
    std::size_t depth_used = 0;
    std::size_t probe_extra = 0;
};

// c_n^(n+m_extra) for n <= N; the apparent critical level is the least n
// from which the scanned ranks no longer increase. A finite-depth upper
// bound diagnostic, never the limit value.
inline CriticalLevelReport critical_level_estimate(const DirectiveSequence& seq, std::size_t N,
                                                   std::size_t m_extra) {
    if (m_extra < 1) throw std::invalid_argument("probe must be >= 1");
    if (N + m_extra > seq.max_depth())
        throw DepthExhaustedError("critical level scan beyond materializable depth", seq.max_depth());
    CriticalLevelReport report;
    report.depth_used = N;
    report.probe_extra = m_extra;
    for (std::size_t n = 0; n <= N; ++n) {
        std::size_t m = n + m_extra;
        report.ranks.push_back(exact_rank(incidence_matrix(seq.telescope(n, m))));
        report.probes.push_back(m);
    }
    std::size_t n0 = N;
    while (n0 > 0 && report.ranks[n0 - 1] == report.ranks[N]) --n0;
    report.apparent_critical_level = n0;
    report.thin = (n0 == 0);
    report.invertible_shortcut = true;
    for (std::size_t n = 0; n < N + m_extra; ++n) {
        IntMatrix m = incidence_matrix(seq.level(n));
        if (!m.is_square() || exact_determinant(m) == 0) {
            report.invertible_shortcut = false;
            break;
        }
    }
    return report;
}

}  // namespace sadic
