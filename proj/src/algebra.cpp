#include "sdpmds/algebra.hpp"

#include "sdpmds/error.hpp"
#include "sdpmds/hex.hpp"

namespace sdpmds {

std::string Algebra::element_to_hex(std::uint64_t a) const {
    check_element(a);
    return to_hex(a);
}

std::uint64_t Algebra::element_from_hex(const std::string& s) const {
    std::uint64_t a = parse_hex(s);
    check_element(a);
    return a;
}

void Algebra::check_element(std::uint64_t a) const {
    if (a >= size())
        throw Error("element " + to_hex(a) + " out of range for " + describe());
}

bool FieldAlgebra::is_unit(std::uint64_t a) const {
    field().element(a); // range check
    return a != 0;
}

const Field& FieldAlgebra::component(std::size_t i) const {
    if (i != 0) throw Error("FieldAlgebra: component index out of range");
    return field_;
}

std::uint64_t FieldAlgebra::project(std::uint64_t a, std::size_t i) const {
    if (i != 0) throw Error("FieldAlgebra: component index out of range");
    check_element(a);
    return a;
}

std::uint64_t FieldAlgebra::lift(const std::vector<std::uint64_t>& residues) const {
    if (residues.size() != 1)
        throw Error("FieldAlgebra: expected exactly one residue");
    check_element(residues[0]);
    return residues[0];
}

bool FieldAlgebra::same_as(const Algebra& o) const {
    auto* p = dynamic_cast<const FieldAlgebra*>(&o);
    return p && field_ == p->field_;
}

bool RingAlgebra::same_as(const Algebra& o) const {
    auto* p = dynamic_cast<const RingAlgebra*>(&o);
    return p && ring_ == p->ring_;
}

std::shared_ptr<const Algebra> make_field_algebra(unsigned w) {
    return std::make_shared<FieldAlgebra>(Field(w));
}

std::shared_ptr<const Algebra> make_field_algebra(unsigned w, std::uint64_t modulus) {
    return std::make_shared<FieldAlgebra>(Field(w, modulus));
}

std::shared_ptr<const Algebra> make_ring_algebra(unsigned p) {
    return std::make_shared<RingAlgebra>(Ring(p));
}

} // namespace sdpmds
