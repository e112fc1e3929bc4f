#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sdpmds/gf.hpp"
#include "sdpmds/ring.hpp"

namespace sdpmds {

// Common face of GF(2^w) and GF(2)[x]/(M_p(x)) for everything above the
// element level. Elements are plain uint64_t bit patterns (bit i = the
// coefficient of x^i of the canonical representative). A field is the
// one-component special case; the ring exposes its CRT factor fields so
// that linear algebra can run componentwise, where every nonzero pivot
// is invertible.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual std::uint64_t add(std::uint64_t a, std::uint64_t b) const = 0;
    virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
    virtual bool is_unit(std::uint64_t a) const = 0;
    virtual std::uint64_t inv(std::uint64_t a) const = 0; // throws on non-units
    virtual std::uint64_t pow(std::uint64_t a, std::uint64_t e) const = 0;
    virtual std::uint64_t alpha_pow(long long k) const = 0;
    virtual std::uint64_t order_alpha() const = 0;
    virtual std::uint64_t size() const = 0; // count of element bit patterns

    // Largest stripe size r*n this algebra supports (the determinant
    // argument needs r*n - 1 to stay below the order of alpha in the
    // field case and below p in the ring case).
    virtual std::uint64_t max_code_length() const = 0;

    virtual std::size_t num_components() const = 0;
    virtual const Field& component(std::size_t i) const = 0;
    virtual std::uint64_t project(std::uint64_t a, std::size_t i) const = 0;
    virtual std::uint64_t lift(const std::vector<std::uint64_t>& residues) const = 0;

    virtual std::string describe() const = 0;
    virtual bool same_as(const Algebra& o) const = 0;

    // Hex round trip with range validation.
    std::string element_to_hex(std::uint64_t a) const;
    std::uint64_t element_from_hex(const std::string& s) const;
    void check_element(std::uint64_t a) const;
};

class FieldAlgebra final : public Algebra {
public:
    explicit FieldAlgebra(Field f) : field_(std::move(f)) {}

    const Field& field() const { return field_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
        return field_.add(a, b);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        return field_.mul(a, b);
    }
    bool is_unit(std::uint64_t a) const override;
    std::uint64_t inv(std::uint64_t a) const override { return field_.inv(a); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const override {
        return field_.pow(a, e);
    }
    std::uint64_t alpha_pow(long long k) const override { return field_.alpha_pow(k); }
    std::uint64_t order_alpha() const override { return field_.order_alpha(); }
    std::uint64_t size() const override { return field_.size(); }
    std::uint64_t max_code_length() const override { return field_.order_alpha(); }

    std::size_t num_components() const override { return 1; }
    const Field& component(std::size_t i) const override;
    std::uint64_t project(std::uint64_t a, std::size_t i) const override;
    std::uint64_t lift(const std::vector<std::uint64_t>& residues) const override;

    std::string describe() const override { return field_.describe(); }
    bool same_as(const Algebra& o) const override;

private:
    Field field_;
};

class RingAlgebra final : public Algebra {
public:
    explicit RingAlgebra(Ring r) : ring_(std::move(r)) {}

    const Ring& ring() const { return ring_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const override {
        return ring_.add(a, b);
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        return ring_.mul(a, b);
    }
    bool is_unit(std::uint64_t a) const override { return ring_.is_unit(a); }
    std::uint64_t inv(std::uint64_t a) const override { return ring_.inv(a); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const override {
        return ring_.pow(a, e);
    }
    std::uint64_t alpha_pow(long long k) const override { return ring_.alpha_pow(k); }
    std::uint64_t order_alpha() const override { return ring_.order_alpha(); }
    std::uint64_t size() const override { return ring_.size(); }
    std::uint64_t max_code_length() const override { return ring_.p() - 1; }

    std::size_t num_components() const override { return ring_.num_components(); }
    const Field& component(std::size_t i) const override { return ring_.component(i); }
    std::uint64_t project(std::uint64_t a, std::size_t i) const override {
        return ring_.project(a, i);
    }
    std::uint64_t lift(const std::vector<std::uint64_t>& residues) const override {
        return ring_.lift(residues);
    }

    std::string describe() const override { return ring_.describe(); }
    bool same_as(const Algebra& o) const override;

private:
    Ring ring_;
};

std::shared_ptr<const Algebra> make_field_algebra(unsigned w);
std::shared_ptr<const Algebra> make_field_algebra(unsigned w, std::uint64_t modulus);
std::shared_ptr<const Algebra> make_ring_algebra(unsigned p);

} // namespace sdpmds
