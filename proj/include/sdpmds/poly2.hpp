#pragma once

#include <cstdint>
#include <vector>

// Polynomials over GF(2), stored in a uint64_t with bit i holding the
// coefficient of x^i. Degrees up to 63 are representable, which covers
// every modulus this library constructs.

namespace sdpmds::poly2 {

// Degree of f; deg(0) = -1.
int deg(std::uint64_t f);

struct DivMod {
    std::uint64_t quot;
    std::uint64_t rem;
};

// Carry-less product. Requires deg(a) + deg(b) <= 63.
std::uint64_t mul(std::uint64_t a, std::uint64_t b);

DivMod divmod(std::uint64_t a, std::uint64_t b); // b != 0
std::uint64_t mod(std::uint64_t a, std::uint64_t f);

// a*b mod f, shift-and-reduce. Requires deg(f) <= 63.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f);

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t f);

// x^(2^k) mod f by k squarings of x.
std::uint64_t pow_x_2k(unsigned k, std::uint64_t f);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Inverse of a mod f via extended Euclid; throws if gcd(a, f) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t f);

// Rabin's test.
bool is_irreducible(std::uint64_t f);

// Splits a squarefree product of irreducibles that all have degree d
// (Cantor-Zassenhaus trace-map splitting in characteristic 2; the random
// walk is seeded deterministically). Factors returned ascending.
std::vector<std::uint64_t> equal_degree_factors(std::uint64_t f, unsigned d);

} // namespace sdpmds::poly2
