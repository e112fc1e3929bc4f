#include "sdpmds/ring.hpp"

#include <sstream>

#include "sdpmds/hex.hpp"
#include "sdpmds/poly2.hpp"

namespace sdpmds {
namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Multiplicative order of 2 modulo the odd prime p.
unsigned order_of_two_mod(unsigned p) {
    unsigned ord = 1;
    unsigned v = 2 % p;
    while (v != 1) {
        v = static_cast<unsigned>((std::uint64_t{v} * 2) % p);
        ++ord;
    }
    return ord;
}

} // namespace

const Ring& RingElement::ring() const {
    if (!ring_) throw Error("RingElement: no ring attached");
    return *ring_;
}

namespace {
const Ring& common_ring(const RingElement& a, const RingElement& b) {
    const Ring& ra = a.ring();
    const Ring& rb = b.ring();
    if (!(ra == rb)) throw Error("RingElement: operands from different rings");
    return ra;
}
} // namespace

bool RingElement::is_unit() const { return ring().is_unit(bits_); }

RingElement RingElement::operator+(const RingElement& o) const {
    const Ring& r = common_ring(*this, o);
    return RingElement(ring_, r.add(bits_, o.bits_));
}

RingElement RingElement::operator*(const RingElement& o) const {
    const Ring& r = common_ring(*this, o);
    return RingElement(ring_, r.mul(bits_, o.bits_));
}

RingElement RingElement::inverse() const {
    return RingElement(ring_, ring().inv(bits_));
}

std::vector<FieldElement> RingElement::residues() const {
    const Ring& r = ring();
    std::vector<FieldElement> out;
    out.reserve(r.num_components());
    for (std::size_t i = 0; i < r.num_components(); ++i)
        out.push_back(r.component(i).element(r.project(bits_, i)));
    return out;
}

bool RingElement::operator==(const RingElement& o) const {
    common_ring(*this, o);
    return bits_ == o.bits_;
}

Ring::Ring(unsigned p) : p_(p) {
    if (!is_prime(p) || p == 2)
        throw Error("Ring: p must be an odd prime, got " + std::to_string(p));
    if (p > 61)
        throw Error("Ring: p must be at most 61 so representatives fit in 64 bits, got " +
                    std::to_string(p));
    // M_p = 1 + x + ... + x^(p-1): the low p bits all set.
    modulus_ = (std::uint64_t{1} << p) - 1;
    d_ = order_of_two_mod(p);
    if (d_ > 32)
        throw Error("Ring: factor degree ord_p(2) = " + std::to_string(d_) +
                    " exceeds 32 for p = " + std::to_string(p));

    if (d_ == p - 1) {
        factors_ = {modulus_}; // M_p itself irreducible (2 primitive mod p)
    } else {
        factors_ = poly2::equal_degree_factors(modulus_, d_);
        if (factors_.size() != (p - 1) / d_)
            throw Error("Ring: factorization of M_p returned wrong count");
    }

    fields_.reserve(factors_.size());
    for (std::uint64_t f : factors_) {
        fields_.emplace_back(d_, f);
        if (fields_.back().order_alpha() != p_)
            throw Error("Ring: alpha does not have order p in a factor field");
    }

    // CRT idempotents: e_i = (M/f_i) * ((M/f_i) mod f_i)^-1 mod M.
    crt_basis_.reserve(factors_.size());
    std::uint64_t sum = 0;
    for (std::uint64_t f : factors_) {
        std::uint64_t cof = poly2::divmod(modulus_, f).quot;
        std::uint64_t u = poly2::mod(cof, f);
        std::uint64_t e = poly2::mulmod(cof, poly2::invmod(u, f), modulus_);
        crt_basis_.push_back(e);
        sum ^= e;
    }
    if (sum != 1) throw Error("Ring: CRT idempotents do not sum to 1");
}

std::uint64_t Ring::mul(std::uint64_t a, std::uint64_t b) const {
    if (a >= size() || b >= size()) throw Error("Ring::mul: element out of range");
    return poly2::mulmod(a, b, modulus_);
}

bool Ring::is_unit(std::uint64_t a) const {
    if (a >= size()) throw Error("Ring::is_unit: element out of range");
    return poly2::gcd(a, modulus_) == 1;
}

std::uint64_t Ring::inv(std::uint64_t a) const {
    if (a >= size()) throw Error("Ring::inv: element out of range");
    if (!is_unit(a))
        throw Error("Ring::inv: " + to_hex(a) + " is not a unit mod M_" +
                    std::to_string(p_));
    return poly2::invmod(a, modulus_);
}

std::uint64_t Ring::pow(std::uint64_t a, std::uint64_t e) const {
    if (a >= size()) throw Error("Ring::pow: element out of range");
    return poly2::powmod(a, e, modulus_);
}

std::uint64_t Ring::alpha_pow(long long k) const {
    long long e = k % static_cast<long long>(p_);
    if (e < 0) e += p_;
    // alpha^e = x^e for e < p-1; x^(p-1) reduces to 1 + x + ... + x^(p-2).
    if (e == p_ - 1) return (std::uint64_t{1} << (p_ - 1)) - 1;
    return std::uint64_t{1} << e;
}

std::uint64_t Ring::project(std::uint64_t a, std::size_t i) const {
    if (a >= size()) throw Error("Ring::project: element out of range");
    return poly2::mod(a, factors_.at(i));
}

std::uint64_t Ring::lift(const std::vector<std::uint64_t>& residues) const {
    if (residues.size() != factors_.size())
        throw Error("Ring::lift: expected " + std::to_string(factors_.size()) +
                    " residues, got " + std::to_string(residues.size()));
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (poly2::deg(residues[i]) >= static_cast<int>(d_))
            throw Error("Ring::lift: residue out of range for factor field");
        out ^= poly2::mulmod(residues[i], crt_basis_[i], modulus_);
    }
    return out;
}

RingElement Ring::element(std::uint64_t bits) const {
    if (bits >= size())
        throw Error("Ring::element: " + to_hex(bits) +
                    " is not a canonical representative mod M_" + std::to_string(p_));
    return RingElement(this, bits);
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "GF(2)[x]/(M_" << p_ << "), M_" << p_ << " = 1+x+...+x^" << (p_ - 1)
       << ", " << factors_.size() << " factor(s) of degree " << d_
       << ", order(alpha) = " << p_;
    return os.str();
}

} // namespace sdpmds
