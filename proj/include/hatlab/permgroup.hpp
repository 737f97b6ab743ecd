#pragma once

// Finitely generated permutation groups with a stabilizer chain (base and
// strong generating set). The chain is grown by a seeded random-word phase
// and then closed by a deterministic Schreier-Sims pass, which doubles as
// the verification step. Base points are chosen greedily as the smallest
// non-fixed point so that output is stable across runs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "perm.hpp"

namespace hatlab {

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDC0DEULL;

class PermGroup {
public:
    explicit PermGroup(int degree, std::vector<Permutation> generators = {},
                       std::uint64_t seed = kDefaultSeed)
        : degree_(degree) {
        for (auto& g : generators) {
            if (g.degree() != degree_)
                throw DegreeMismatch("PermGroup: generator degree mismatch");
            if (!g.is_identity())
                gens_.push_back(std::move(g));
        }
        build_chain(seed);
    }

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    std::int64_t order() const {
        std::int64_t ord = 1;
        for (const auto& lv : levels_)
            ord *= static_cast<std::int64_t>(lv.orbit.size());
        return ord;
    }

    bool contains(const Permutation& p) const {
        if (p.degree() != degree_)
            return false;
        auto [residue, level] = sift(p, 0);
        (void)level;
        return residue.is_identity();
    }

    std::vector<int> orbit(int point) const {
        if (point < 0 || point >= degree_)
            throw std::out_of_range("PermGroup::orbit: point out of range");
        std::vector<int> orb{point};
        std::vector<char> seen(degree_, 0);
        seen[point] = 1;
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (const auto& g : gens_) {
                int q = g(orb[k]);
                if (!seen[q]) {
                    seen[q] = 1;
                    orb.push_back(q);
                }
            }
        return orb;
    }

    std::vector<std::vector<int>> orbits() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(degree_, 0);
        for (int s = 0; s < degree_; ++s) {
            if (seen[s])
                continue;
            auto orb = orbit(s);
            for (int v : orb)
                seen[v] = 1;
            out.push_back(std::move(orb));
        }
        return out;
    }

    /// Visit every group element exactly once (product over chain transversals).
    template <class F>
    void for_each_element(F&& f) const {
        enumerate_rec(0, Permutation::identity(degree_), f);
    }

private:
    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;        // strong generators fixing base[0..l-1]
        std::vector<int> orbit;               // orbit of base_point under gens
        std::vector<int> orbit_pos;           // point -> index into orbit, or -1
        std::vector<Permutation> transversal; // transversal[k] maps base_point -> orbit[k]
    };

    int degree_;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;

    void recompute_orbit(Level& lv) const {
        lv.orbit.assign(1, lv.base_point);
        lv.orbit_pos.assign(degree_, -1);
        lv.orbit_pos[lv.base_point] = 0;
        lv.transversal.assign(1, Permutation::identity(degree_));
        for (std::size_t k = 0; k < lv.orbit.size(); ++k)
            for (const auto& s : lv.gens) {
                int q = s(lv.orbit[k]);
                if (lv.orbit_pos[q] < 0) {
                    lv.orbit_pos[q] = static_cast<int>(lv.orbit.size());
                    lv.orbit.push_back(q);
                    lv.transversal.push_back(lv.transversal[k].then(s));
                }
            }
    }

    /// Strips p through levels [from..): returns (residue, level reached).
    std::pair<Permutation, std::size_t> sift(const Permutation& p, std::size_t from) const {
        Permutation residue = p;
        for (std::size_t l = from; l < levels_.size(); ++l) {
            const Level& lv = levels_[l];
            int image = residue(lv.base_point);
            if (lv.orbit_pos[image] < 0)
                return {residue, l};
            residue = residue.then(lv.transversal[lv.orbit_pos[image]].inverse());
        }
        return {residue, levels_.size()};
    }

    void add_level(int base_point) {
        Level lv;
        lv.base_point = base_point;
        levels_.push_back(std::move(lv));
        recompute_orbit(levels_.back());
    }

    /// Places a nontrivial residue at chain level `at`, extending the base
    /// when it fixes every existing base point, then re-closes levels below.
    void insert_generator(const Permutation& h, std::size_t from, std::size_t at) {
        if (at == levels_.size())
            add_level(h.smallest_moved_point());
        for (std::size_t l = from; l <= at; ++l)
            levels_[l].gens.push_back(h);
        for (std::size_t l = at + 1; l-- > from;)
            complete_level(l);
    }

    /// Deterministic Schreier-Sims at one level; assumes deeper levels complete.
    void complete_level(std::size_t l) {
        Level& lv = levels_[l];
        recompute_orbit(lv);
        for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
            for (std::size_t si = 0; si < lv.gens.size(); ++si) {
                const Permutation& s = lv.gens[si];
                int p = lv.orbit[k];
                const Permutation& u_p = lv.transversal[k];
                const Permutation& u_ps = lv.transversal[lv.orbit_pos[s(p)]];
                Permutation schreier = u_p.then(s).then(u_ps.inverse());
                auto [residue, level] = sift(schreier, l + 1);
                if (!residue.is_identity())
                    insert_generator(residue, l + 1, level);
            }
        }
    }

    void build_chain(std::uint64_t seed) {
        if (gens_.empty())
            return;
        int b0 = degree_;
        for (const auto& g : gens_)
            b0 = std::min(b0, g.smallest_moved_point());
        add_level(b0);
        levels_[0].gens = gens_;
        recompute_orbit(levels_[0]);

        // Random-word phase: seeds deeper levels cheaply; the deterministic
        // closure pass below verifies and finishes the chain.
        std::uint64_t state = seed ? seed : 1;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        Permutation w = Permutation::identity(degree_);
        for (int round = 0; round < 32; ++round) {
            w = w.then(gens_[next() % gens_.size()]);
            auto [residue, level] = sift(w, 0);
            if (!residue.is_identity() && level > 0)
                insert_generator(residue, level, level);
        }

        complete_level(0);
    }

    template <class F>
    void enumerate_rec(std::size_t l, const Permutation& tail, F& f) const {
        if (l == levels_.size()) {
            f(tail);
            return;
        }
        for (const auto& u : levels_[l].transversal)
            enumerate_rec(l + 1, u.then(tail), f);
    }
};

/// True iff <p> has exactly m orbits, all of size n.
inline bool is_semiregular(const Permutation& p, int m, int n) {
    if (static_cast<std::int64_t>(m) * n != p.degree())
        throw DegreeMismatch("is_semiregular: m*n != degree");
    auto cycles = p.cycles();
    if (static_cast<int>(cycles.size()) != m)
        return false;
    for (const auto& c : cycles)
        if (static_cast<int>(c.size()) != n)
            return false;
    return true;
}

/// The exponent r with s^{-1} p s = p^r, if one exists. Requires the orbits
/// of p to all have size n (p fixed-point-free for n >= 2).
inline std::optional<i64> conjugation_exponent(const Permutation& p, const Permutation& s, i64 n) {
    Permutation q = s.inverse().then(p).then(s);
    int x = 0;
    i64 r = -1;
    int y = x;
    for (i64 k = 0; k < n; ++k) {
        if (y == q(x)) {
            r = k;
            break;
        }
        y = p(y);
    }
    if (r < 0)
        return std::nullopt;
    if (p.power(r) != q)
        return std::nullopt;
    return r;
}

} // namespace hatlab
