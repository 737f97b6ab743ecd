#pragma once

// Arithmetic in the residue ring Z_n: units, additive element orders,
// generated subgroups and CRT gluing. Residues are normalized to {0..n-1}
// at every boundary so that signed expressions like -r^{m-1}-t have one
// unambiguous value.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hatlab {

using i64 = std::int64_t;

struct CoprimeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The ring Z_n. n >= 1; n = 1 is the trivial ring.
struct ZnCtx {
    i64 n;

    explicit ZnCtx(i64 modulus) : n(modulus) {
        if (n < 1)
            throw std::invalid_argument("ZnCtx: modulus must be >= 1");
    }

    i64 normalize(i64 x) const {
        i64 r = x % n;
        return r < 0 ? r + n : r;
    }

    i64 add(i64 a, i64 b) const { return normalize(normalize(a) + normalize(b)); }
    i64 sub(i64 a, i64 b) const { return normalize(normalize(a) - normalize(b)); }

    i64 mul(i64 a, i64 b) const {
        // intermediate products can exceed 64 bits for large moduli
        __int128 p = static_cast<__int128>(normalize(a)) * normalize(b);
        return static_cast<i64>(p % n);
    }

    i64 pow(i64 base, i64 exp) const {
        if (exp < 0)
            throw std::invalid_argument("ZnCtx::pow: negative exponent");
        i64 result = normalize(1);
        i64 b = normalize(base);
        while (exp > 0) {
            if (exp & 1)
                result = mul(result, b);
            b = mul(b, b);
            exp >>= 1;
        }
        return result;
    }

    /// Multiplicative inverse; requires gcd(x, n) = 1.
    i64 inv(i64 x) const {
        i64 a = normalize(x), b = n;
        i64 u = 1, v = 0;
        while (b != 0) {
            i64 q = a / b;
            a -= q * b;
            std::swap(a, b);
            u -= q * v;
            std::swap(u, v);
        }
        if (a != 1)
            throw CoprimeViolation("ZnCtx::inv: element is not a unit");
        return normalize(u);
    }
};

inline bool is_unit(const ZnCtx& ctx, i64 x) {
    return std::gcd(ctx.normalize(x), ctx.n) == 1;
}

/// Additive order of x in Z_n: least d >= 1 with d*x = 0; equals n / gcd(x, n).
inline i64 elem_order(const ZnCtx& ctx, i64 x) {
    return ctx.n / std::gcd(ctx.normalize(x), ctx.n);
}

/// The additive subgroup <x> = {k*x mod n}, sorted ascending.
inline std::vector<i64> subgroup_generated(const ZnCtx& ctx, i64 x) {
    i64 g = std::gcd(ctx.normalize(x), ctx.n);
    if (g == 0)
        return {0}; // n = 1 or x = 0 in Z_1
    std::vector<i64> elems;
    elems.reserve(ctx.n / g);
    for (i64 v = 0; v < ctx.n; v += g)
        elems.push_back(v);
    return elems;
}

/// Membership in the additive subgroup <gen> without materializing it.
inline bool in_subgroup(const ZnCtx& ctx, i64 x, i64 gen) {
    i64 g = std::gcd(ctx.normalize(gen), ctx.n);
    if (g == 0)
        return ctx.normalize(x) == 0;
    return ctx.normalize(x) % g == 0;
}

/// Unique x mod n1*n2 with x = a1 (mod n1), x = a2 (mod n2); gcd(n1,n2) = 1.
inline i64 crt_combine(i64 n1, i64 a1, i64 n2, i64 a2) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("crt_combine: moduli must be >= 1");
    if (std::gcd(n1, n2) != 1)
        throw CoprimeViolation("crt_combine: moduli are not coprime");
    if (static_cast<__int128>(n1) * n2 > INT64_MAX)
        throw std::overflow_error("crt_combine: product modulus exceeds 64 bits");
    ZnCtx z1(n1), z2(n2), z(n1 * n2);
    a1 = z1.normalize(a1);
    a2 = z2.normalize(a2);
    // x = a1 + n1 * k with k = (a2 - a1) / n1 mod n2
    i64 k = z2.mul(z2.sub(a2, a1), z2.inv(n1));
    return z.add(a1, z.mul(n1, k));
}

/// 1 + r + r^2 + ... + r^{m-1} in Z_n.
inline i64 geometric_sum(const ZnCtx& ctx, i64 r, i64 m) {
    i64 acc = 0, term = ctx.normalize(1);
    for (i64 i = 0; i < m; ++i) {
        acc = ctx.add(acc, term);
        term = ctx.mul(term, r);
    }
    return acc;
}

inline bool is_prime(i64 p) {
    if (p < 2)
        return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline bool is_squarefree(i64 x) {
    if (x < 1)
        return false;
    for (i64 d = 2; d * d <= x; ++d) {
        if (x % (d * d) == 0)
            return false;
        while (x % d == 0)
            x /= d;
    }
    return true;
}

} // namespace hatlab
