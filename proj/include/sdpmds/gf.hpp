#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdpmds/error.hpp"

namespace sdpmds {

class Field;

// Element of one GF(2^w) instance. Carries its field so that arithmetic
// between elements of different fields is rejected.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, std::uint64_t bits) : field_(field), bits_(bits) {}

    std::uint64_t bits() const { return bits_; }
    const Field& field() const;
    bool is_zero() const { return bits_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const { return *this + o; }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    std::uint64_t order() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const Field* field_ = nullptr;
    std::uint64_t bits_ = 0;
};

// GF(2^w), 2 <= w <= 32, defined by an irreducible binary modulus of
// degree w. alpha is the residue class of x; its multiplicative order is
// computed at construction. Multiplication goes through log/antilog
// tables keyed on a primitive element for w <= 16 and through carry-less
// shift-and-reduce beyond that; both paths give identical results.
class Field {
public:
    static constexpr std::uint64_t kAlpha = 2; // the class of x

    Field(unsigned w, std::uint64_t modulus);
    explicit Field(unsigned w) : Field(w, default_modulus(w)) {}

    unsigned w() const { return w_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t size() const { return std::uint64_t{1} << w_; }
    std::uint64_t order_alpha() const { return order_alpha_; }
    bool alpha_primitive() const { return order_alpha_ == group_order_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const; // throws on a == 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    // alpha^k for any signed k; the exponent is reduced mod order_alpha
    // first, so alpha^-k is alpha^(order_alpha - k mod order_alpha).
    std::uint64_t alpha_pow(long long k) const;
    std::uint64_t element_order(std::uint64_t a) const; // throws on a == 0

    FieldElement element(std::uint64_t bits) const; // range-checked
    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement alpha() const { return FieldElement(this, kAlpha); }

    bool operator==(const Field& o) const {
        return w_ == o.w_ && modulus_ == o.modulus_;
    }

    // Lexicographically least degree-w irreducible whose x-class is
    // primitive. Lets the CLI run without a polynomial table in hand.
    static std::uint64_t default_modulus(unsigned w);

    std::string describe() const;

private:
    unsigned w_ = 0;
    std::uint64_t modulus_ = 0;
    std::uint64_t group_order_ = 0;
    std::uint64_t order_alpha_ = 0;
    std::vector<std::uint64_t> group_primes_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;

    std::uint64_t order_with_factors(std::uint64_t a) const;
};

} // namespace sdpmds
