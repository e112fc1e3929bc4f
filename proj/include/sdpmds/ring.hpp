#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpmds/error.hpp"
#include "sdpmds/gf.hpp"

namespace sdpmds {

class Ring;

// Element of GF(2)[x]/(M_p(x)), stored as the canonical representative of
// degree < p-1 packed into a uint64_t (bit i = coefficient of x^i).
class RingElement {
public:
    RingElement() = default;
    RingElement(const Ring* ring, std::uint64_t bits) : ring_(ring), bits_(bits) {}

    std::uint64_t bits() const { return bits_; }
    const Ring& ring() const;
    bool is_zero() const { return bits_ == 0; }
    bool is_unit() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const { return *this + o; }
    RingElement operator*(const RingElement& o) const;
    RingElement inverse() const; // throws on non-units

    // Images in the factor fields, one per irreducible factor of M_p.
    std::vector<FieldElement> residues() const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
    const Ring* ring_ = nullptr;
    std::uint64_t bits_ = 0;
};

// The quotient ring GF(2)[x]/(M_p(x)) with M_p = 1 + x + ... + x^(p-1),
// p an odd prime. M_p splits into (p-1)/d distinct irreducibles of equal
// degree d = ord_p(2); the ring is the CRT product of the corresponding
// fields GF(2^d), and in every one of them the class of x has
// multiplicative order exactly p. Non-units are the zero divisors whose
// residue vanishes in at least one component.
class Ring {
public:
    static constexpr std::uint64_t kAlpha = 2; // the class of x

    explicit Ring(unsigned p);

    unsigned p() const { return p_; }
    std::uint64_t modulus() const { return modulus_; } // M_p bit pattern
    unsigned factor_degree() const { return d_; }
    std::size_t num_components() const { return fields_.size(); }
    const Field& component(std::size_t i) const { return fields_.at(i); }
    std::uint64_t factor(std::size_t i) const { return factors_.at(i); }
    // Order of alpha in the unit group (the same in every component).
    std::uint64_t order_alpha() const { return p_; }
    // Canonical representatives live below 2^(p-1).
    std::uint64_t size() const { return std::uint64_t{1} << (p_ - 1); }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    bool is_unit(std::uint64_t a) const;
    std::uint64_t inv(std::uint64_t a) const; // throws on non-units
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t alpha_pow(long long k) const;

    // CRT projection / reconstruction.
    std::uint64_t project(std::uint64_t a, std::size_t i) const;
    std::uint64_t lift(const std::vector<std::uint64_t>& residues) const;

    RingElement element(std::uint64_t bits) const; // range-checked
    RingElement zero() const { return RingElement(this, 0); }
    RingElement one() const { return RingElement(this, 1); }
    RingElement alpha() const { return RingElement(this, kAlpha); }

    bool operator==(const Ring& o) const { return p_ == o.p_; }

    std::string describe() const;

private:
    unsigned p_ = 0;
    unsigned d_ = 0;
    std::uint64_t modulus_ = 0;
    std::vector<std::uint64_t> factors_;
    std::vector<std::uint64_t> crt_basis_; // e_i: 1 in component i, 0 elsewhere
    std::vector<Field> fields_;
};

} // namespace sdpmds
