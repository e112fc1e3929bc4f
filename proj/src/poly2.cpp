#include "sdpmds/poly2.hpp"

#include <algorithm>
#include <bit>

#include "sdpmds/error.hpp"

namespace sdpmds::poly2 {

int deg(std::uint64_t f) {
    return f == 0 ? -1 : 63 - std::countl_zero(f);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b != 0 && deg(a) + deg(b) > 63) {
        throw Error("poly2::mul: product degree exceeds 63");
    }
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return r;
}

DivMod divmod(std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw Error("poly2::divmod: division by zero polynomial");
    const int db = deg(b);
    std::uint64_t q = 0;
    while (deg(a) >= db) {
        const int shift = deg(a) - db;
        q ^= std::uint64_t{1} << shift;
        a ^= b << shift;
    }
    return {q, a};
}

std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
    return divmod(a, f).rem;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    const int df = deg(f);
    if (df < 1) throw Error("poly2::mulmod: modulus must have positive degree");
    a = mod(a, f);
    b = mod(b, f);
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> df) & 1) a ^= f;
    }
    return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t f) {
    std::uint64_t r = mod(1, f);
    a = mod(a, f);
    while (e != 0) {
        if (e & 1) r = mulmod(r, a, f);
        a = mulmod(a, a, f);
        e >>= 1;
    }
    return r;
}

std::uint64_t pow_x_2k(unsigned k, std::uint64_t f) {
    std::uint64_t r = mod(2, f);
    for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, f);
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t r = mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t f) {
    // Iterative extended Euclid tracking the Bezout coefficient of a.
    // Intermediate products stay below degree deg(f), so plain mul is safe.
    std::uint64_t r0 = f, r1 = mod(a, f);
    std::uint64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const DivMod dm = divmod(r0, r1);
        const std::uint64_t s2 = s0 ^ mul(dm.quot, s1);
        r0 = r1;
        r1 = dm.rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw Error("poly2::invmod: element is not invertible");
    return mod(s0, f);
}

namespace {

std::vector<unsigned> prime_factors_of(unsigned n) {
    std::vector<unsigned> primes;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            primes.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

void split_equal_degree(std::uint64_t f, unsigned d, SplitMix& rng,
                        std::vector<std::uint64_t>& out) {
    if (deg(f) == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    const std::uint64_t mask = (std::uint64_t{1} << deg(f)) - 1;
    for (;;) {
        const std::uint64_t h = rng.next() & mask;
        if (deg(h) < 1) continue;
        // Trace map of GF(2^d): T(h) = h + h^2 + h^4 + ... + h^(2^(d-1)).
        std::uint64_t trace = 0, hp = mod(h, f);
        for (unsigned i = 0; i < d; ++i) {
            trace ^= hp;
            hp = mulmod(hp, hp, f);
        }
        const std::uint64_t g = gcd(trace, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            split_equal_degree(g, d, rng, out);
            split_equal_degree(divmod(f, g).quot, d, rng, out);
            return;
        }
    }
}

} // namespace

bool is_irreducible(std::uint64_t f) {
    const int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((f & 1) == 0) return false; // divisible by x
    if (pow_x_2k(static_cast<unsigned>(d), f) != mod(2, f)) return false;
    for (unsigned q : prime_factors_of(static_cast<unsigned>(d))) {
        const std::uint64_t h = pow_x_2k(static_cast<unsigned>(d) / q, f) ^ 2;
        if (deg(gcd(h, f)) != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> equal_degree_factors(std::uint64_t f, unsigned d) {
    if (d == 0 || deg(f) < static_cast<int>(d) ||
        deg(f) % static_cast<int>(d) != 0) {
        throw Error("poly2::equal_degree_factors: degree does not divide deg f");
    }
    SplitMix rng{f * 0x2545f4914f6cdd1dull + d};
    std::vector<std::uint64_t> out;
    split_equal_degree(f, d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sdpmds::poly2
