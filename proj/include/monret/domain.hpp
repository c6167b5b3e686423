#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace monret {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class DomainKind { Integers, Rationals, IntegersMod };

/// One of the exact coefficient rings Z, Q, Z/m (m >= 2).
class Domain {
public:
    static Domain integers() { return Domain(DomainKind::Integers, 0); }
    static Domain rationals() { return Domain(DomainKind::Rationals, 0); }
    static Domain integers_mod(std::int64_t m);

    DomainKind kind() const { return kind_; }
    bool is_integers_mod() const { return kind_ == DomainKind::IntegersMod; }
    /// Modulus m; only valid for IntegersMod.
    std::int64_t modulus() const;

    bool operator==(const Domain&) const = default;

    std::string to_string() const; // "Z", "Q", "Z/6"

private:
    Domain(DomainKind k, std::int64_t m) : kind_(k), modulus_(m) {}

    DomainKind kind_;
    std::int64_t modulus_; // 0 unless IntegersMod
};

/// An exact element of a Domain.  Residues mod m are canonical in
/// [0, m-1]; rationals are in lowest terms with positive denominator
/// (cpp_rational maintains that form).
class DomainElement {
public:
    /// Canonical injection of a rational literal into the domain.
    /// Z rejects non-integers; Z/m maps a/b to a * b^{-1} mod m and
    /// rejects denominators not coprime to m.
    DomainElement(const Domain& domain, const BigRational& value);
    DomainElement(const Domain& domain, std::int64_t value)
        : DomainElement(domain, BigRational(value)) {}

    static DomainElement zero(const Domain& d) { return DomainElement(d, 0); }
    static DomainElement one(const Domain& d) { return DomainElement(d, 1); }

    const Domain& domain() const { return domain_; }
    const BigRational& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    bool operator==(const DomainElement&) const = default;

    std::string to_string() const;

private:
    Domain domain_;
    BigRational value_;
};

DomainElement mul(const DomainElement& a, const DomainElement& b);

/// a^e for e >= 0 (a^0 = 1).
DomainElement pow(const DomainElement& a, std::int64_t e);

/// True iff a has a multiplicative inverse: Z -> a in {1,-1};
/// Q -> always; Z/m -> gcd(a, m) = 1.  Rejects zero input.
bool is_unit(const DomainElement& a);

/// True iff a^2 = a.
bool is_idempotent_element(const DomainElement& a);

/// All a not in {0,1} with a^2 = a, by exhaustive scan of residues.
/// Z and Q have none and return the empty set.  The scan is capped at
/// m <= 10^6 (LimitError beyond).
std::vector<DomainElement> nontrivial_idempotents(const Domain& d);

} // namespace monret
