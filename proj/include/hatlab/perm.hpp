#pragma once

// Point permutations on {0..N-1}, stored as image tables.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hatlab {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int point) const { return img_[point]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i)
                return false;
        return true;
    }

    /// Apply *this first, then other: (a.then(b))(x) = b(a(x)).
    /// Matches right-action word order: x^(ab) = (x^a)^b.
    Permutation then(const Permutation& other) const {
        if (degree() != other.degree())
            throw std::invalid_argument("Permutation::then: degree mismatch");
        std::vector<int> img(degree());
        for (int i = 0; i < degree(); ++i)
            img[i] = other.img_[img_[i]];
        Permutation p;
        p.img_ = std::move(img);
        return p;
    }

    Permutation inverse() const {
        std::vector<int> img(degree());
        for (int i = 0; i < degree(); ++i)
            img[img_[i]] = i;
        Permutation p;
        p.img_ = std::move(img);
        return p;
    }

    Permutation power(std::int64_t k) const {
        Permutation base = k < 0 ? inverse() : *this;
        std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
        Permutation acc = identity(degree());
        while (e > 0) {
            if (e & 1)
                acc = acc.then(base);
            base = base.then(base);
            e >>= 1;
        }
        return acc;
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(degree(), 0);
        for (int s = 0; s < degree(); ++s) {
            if (seen[s])
                continue;
            std::vector<int> cyc;
            for (int x = s; !seen[x]; x = img_[x]) {
                seen[x] = 1;
                cyc.push_back(x);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    /// Order as lcm of cycle lengths.
    std::int64_t order() const {
        std::int64_t ord = 1;
        for (const auto& c : cycles())
            ord = std::lcm<std::int64_t>(ord, static_cast<std::int64_t>(c.size()));
        return ord;
    }

    int smallest_moved_point() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i)
                return i;
        return -1;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

} // namespace hatlab
