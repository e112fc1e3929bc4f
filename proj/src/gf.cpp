#include "sdpmds/gf.hpp"

#include <algorithm>
#include <sstream>

#include "sdpmds/hex.hpp"
#include "sdpmds/poly2.hpp"

namespace sdpmds {
namespace {

// Prime factorization by trial division. Group orders here are at most
// 2^32 - 1, so this stays cheap.
std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

const Field& FieldElement::field() const {
    if (!field_) throw Error("FieldElement: no field attached");
    return *field_;
}

namespace {
const Field& common_field(const FieldElement& a, const FieldElement& b) {
    const Field& fa = a.field();
    const Field& fb = b.field();
    if (!(fa == fb)) throw Error("FieldElement: operands from different fields");
    return fa;
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return FieldElement(field_, f.add(bits_, o.bits_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return FieldElement(field_, f.mul(bits_, o.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    const Field& f = common_field(*this, o);
    return FieldElement(field_, f.mul(bits_, f.inv(o.bits_)));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field().inv(bits_));
}

std::uint64_t FieldElement::order() const {
    return field().element_order(bits_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    common_field(*this, o);
    return bits_ == o.bits_;
}

Field::Field(unsigned w, std::uint64_t modulus) : w_(w), modulus_(modulus) {
    if (w < 2 || w > 32)
        throw Error("Field: w must be in [2, 32], got " + std::to_string(w));
    if (poly2::deg(modulus) != static_cast<int>(w))
        throw Error("Field: modulus " + to_hex(modulus) + " does not have degree " +
                    std::to_string(w));
    if (!poly2::is_irreducible(modulus))
        throw Error("Field: modulus " + to_hex(modulus) + " is reducible");

    group_order_ = (std::uint64_t{1} << w_) - 1;
    group_primes_ = prime_factors(group_order_);
    order_alpha_ = order_with_factors(kAlpha);

    if (w_ <= 16) {
        // Discrete-log tables over some primitive element g. alpha itself
        // need not be primitive, so search for a generator.
        std::uint64_t g = 0;
        for (std::uint64_t c = 2; c <= group_order_; ++c) {
            if (order_with_factors(c) == group_order_) {
                g = c;
                break;
            }
        }
        if (g == 0) throw Error("Field: no generator found (modulus not irreducible?)");
        log_.assign(std::size_t{1} << w_, 0);
        exp_.assign(group_order_, 0);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 0; i < group_order_; ++i) {
            exp_[i] = static_cast<std::uint32_t>(acc);
            log_[acc] = static_cast<std::uint32_t>(i);
            acc = poly2::mulmod(acc, g, modulus_);
        }
        if (acc != 1) throw Error("Field: generator table did not close");
    }
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (a >= size() || b >= size()) throw Error("Field::mul: element out of range");
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        std::uint64_t s = log_[a] + log_[b];
        if (s >= group_order_) s -= group_order_;
        return exp_[s];
    }
    return poly2::mulmod(a, b, modulus_);
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a >= size()) throw Error("Field::inv: element out of range");
    if (a == 0) throw Error("Field::inv: zero has no inverse");
    if (!log_.empty()) {
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : group_order_ - l];
    }
    return poly2::invmod(a, modulus_);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    if (a >= size()) throw Error("Field::pow: element out of range");
    std::uint64_t result = 1;
    std::uint64_t base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t Field::alpha_pow(long long k) const {
    long long ord = static_cast<long long>(order_alpha_);
    long long e = k % ord;
    if (e < 0) e += ord;
    return pow(kAlpha, static_cast<std::uint64_t>(e));
}

std::uint64_t Field::order_with_factors(std::uint64_t a) const {
    if (a == 0) throw Error("Field: zero has no multiplicative order");
    // Start from the group order and strip each prime while a^(t/q) == 1.
    std::uint64_t t = group_order_;
    for (std::uint64_t q : group_primes_) {
        while (t % q == 0) {
            std::uint64_t probe = t / q;
            std::uint64_t v = 1;
            std::uint64_t base = a;
            std::uint64_t e = probe;
            while (e) {
                if (e & 1) v = poly2::mulmod(v, base, modulus_);
                base = poly2::mulmod(base, base, modulus_);
                e >>= 1;
            }
            if (v != 1) break;
            t = probe;
        }
    }
    return t;
}

std::uint64_t Field::element_order(std::uint64_t a) const {
    if (a >= size()) throw Error("Field::element_order: element out of range");
    return order_with_factors(a);
}

FieldElement Field::element(std::uint64_t bits) const {
    if (bits >= size())
        throw Error("Field::element: " + to_hex(bits) + " out of range for w=" +
                    std::to_string(w_));
    return FieldElement(this, bits);
}

std::uint64_t Field::default_modulus(unsigned w) {
    if (w < 2 || w > 32)
        throw Error("Field: w must be in [2, 32], got " + std::to_string(w));
    std::uint64_t group_order = (std::uint64_t{1} << w) - 1;
    std::vector<std::uint64_t> primes = prime_factors(group_order);
    // Scan degree-w binary polynomials in ascending numeric order; take
    // the first irreducible one for which alpha generates the whole
    // multiplicative group.
    std::uint64_t lo = std::uint64_t{1} << w;
    std::uint64_t hi = std::uint64_t{1} << (w + 1);
    for (std::uint64_t f = lo | 1; f < hi; f += 2) {
        if (!poly2::is_irreducible(f)) continue;
        bool primitive = true;
        for (std::uint64_t q : primes) {
            std::uint64_t e = group_order / q;
            std::uint64_t v = 1;
            std::uint64_t base = Field::kAlpha;
            while (e) {
                if (e & 1) v = poly2::mulmod(v, base, f);
                base = poly2::mulmod(base, base, f);
                e >>= 1;
            }
            if (v == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return f;
    }
    throw Error("Field: no primitive modulus of degree " + std::to_string(w));
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(2^" << w_ << "), modulus 0x" << to_hex(modulus_) << ", |F*| = "
       << group_order_ << ", order(alpha) = " << order_alpha_
       << (alpha_primitive() ? " (primitive)" : " (not primitive)");
    return os.str();
}

} // namespace sdpmds
