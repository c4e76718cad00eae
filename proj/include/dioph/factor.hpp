#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "dioph/rational.hpp"

namespace dioph {

// Floor of the k-th root, binary search on bit length.
inline Int kth_root_floor(const Int& n, unsigned k) {
    if (n < 0) throw contract_error("kth_root_floor of negative integer");
    if (k == 0) throw contract_error("kth_root_floor with k = 0");
    if (n == 0 || k == 1) return n;
    unsigned bits = boost::multiprecision::msb(n) + 1;
    Int lo = 1, hi = Int(1) << (bits / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (int_pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

namespace detail {

inline Int rand_below(std::mt19937_64& rng, const Int& bound) {
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    Int r = 0;
    for (unsigned i = 0; i <= bits; i += 64) r = (r << 64) | Int(std::uint64_t(rng()));
    return r % bound;
}

// Brent's cycle variant of Pollard rho.  Caller guarantees n is odd,
// composite and not tiny; we only guarantee *some* nontrivial factor.
inline Int pollard_brent(const Int& n, std::mt19937_64& rng) {
    using boost::multiprecision::abs;
    while (true) {
        Int y = 1 + rand_below(rng, n - 1);
        Int c = 1 + rand_below(rng, n - 1);
        Int g = 1, r = 1, q = 1, x = 0, ys = 0;
        const long batch = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = r - k < batch ? r - k : Int(batch);
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += batch;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(Int n, std::map<Int, unsigned>& out, unsigned mult,
                        std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += mult;
        return;
    }
    // Perfect powers first: rho degenerates on them, roots are cheap.
    unsigned max_k = boost::multiprecision::msb(n) + 1;
    for (unsigned k = 2; k <= max_k; ++k) {
        Int r = kth_root_floor(n, k);
        if (r > 1 && int_pow(r, k) == n) {
            factor_into(r, out, mult * k, rng);
            return;
        }
    }
    Int d = pollard_brent(n, rng);
    factor_into(d, out, mult, rng);
    factor_into(n / d, out, mult, rng);
}

} // namespace detail

// Prime factorization of n >= 1.  Trial division clears everything a desk
// denominator usually contains; Pollard-Brent mops up the rest.  Seeded
// deterministically so identical inputs give identical runs.
inline std::map<Int, unsigned> factorize(Int n) {
    if (n < 1) throw contract_error("factorize requires n >= 1");
    std::map<Int, unsigned> out;
    for (Int p : {2, 3, 5}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    for (Int p = 7; p <= 100000 && p * p <= n; p += 6) {
        for (Int q : {p, Int(p + 4)}) {
            while (n % q == 0) {
                ++out[q];
                n /= q;
            }
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            ++out[n];
        } else {
            std::mt19937_64 rng(0xd10f4ac5eedULL);
            detail::factor_into(n, out, 1, rng);
        }
    }
    return out;
}

// Least m >= 1 with d dividing m^k: per prime, ceil(v_p(d)/k).
inline Int root_cover(const Int& d, unsigned k) {
    if (d < 1) throw contract_error("root_cover requires d >= 1");
    if (k == 0) throw contract_error("root_cover with k = 0");
    if (k == 1 || d == 1) return d;
    Int m = 1;
    for (const auto& [p, v] : factorize(d)) m *= int_pow(p, (v + k - 1) / k);
    return m;
}

} // namespace dioph
