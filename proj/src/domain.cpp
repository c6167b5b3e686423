#include "monret/domain.hpp"

#include "monret/errors.hpp"

#include <stdexcept>
#include <utility>

namespace monret {

namespace {

BigInt canonical_residue(const BigInt& a, std::int64_t m) {
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return r;
}

// Extended Euclid on BigInt; returns gcd(a, b) and x with a*x = gcd (mod b).
BigInt inverse_mod(const BigInt& a, std::int64_t m) {
    BigInt old_r = a, r = m;
    BigInt old_x = 1, x = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
    }
    if (old_r != 1)
        throw std::invalid_argument("value has no inverse mod " + std::to_string(m));
    return canonical_residue(old_x, m);
}

} // namespace

Domain Domain::integers_mod(std::int64_t m) {
    if (m < 2)
        throw std::invalid_argument("Z/m requires m >= 2");
    return Domain(DomainKind::IntegersMod, m);
}

std::int64_t Domain::modulus() const {
    if (kind_ != DomainKind::IntegersMod)
        throw std::invalid_argument("modulus() is only defined for Z/m");
    return modulus_;
}

std::string Domain::to_string() const {
    switch (kind_) {
    case DomainKind::Integers: return "Z";
    case DomainKind::Rationals: return "Q";
    case DomainKind::IntegersMod: return "Z/" + std::to_string(modulus_);
    }
    return "?";
}

DomainElement::DomainElement(const Domain& domain, const BigRational& value)
    : domain_(domain), value_(value) {
    switch (domain_.kind()) {
    case DomainKind::Rationals:
        break;
    case DomainKind::Integers:
        if (denominator(value_) != 1)
            throw std::invalid_argument("value " + value.str() + " is not in Z");
        break;
    case DomainKind::IntegersMod: {
        const std::int64_t m = domain_.modulus();
        BigInt num = canonical_residue(numerator(value_), m);
        if (denominator(value_) != 1)
            num = canonical_residue(num * inverse_mod(denominator(value_), m), m);
        value_ = BigRational(num);
        break;
    }
    }
}

std::string DomainElement::to_string() const {
    return value_.str();
}

DomainElement mul(const DomainElement& a, const DomainElement& b) {
    if (a.domain() != b.domain())
        throw std::invalid_argument("domain mismatch: " + a.domain().to_string() +
                                    " vs " + b.domain().to_string());
    BigRational prod = a.value() * b.value();
    if (a.domain().is_integers_mod())
        prod = BigRational(canonical_residue(numerator(prod), a.domain().modulus()));
    return DomainElement(a.domain(), prod);
}

DomainElement pow(const DomainElement& a, std::int64_t e) {
    if (e < 0)
        throw std::invalid_argument("negative exponent in domain power");

    // Z/m: modular exponentiation keeps intermediates small.
    if (a.domain().is_integers_mod()) {
        const std::int64_t m = a.domain().modulus();
        BigInt base = numerator(a.value());
        BigInt acc = 1;
        for (std::int64_t k = e; k > 0; k >>= 1) {
            if (k & 1)
                acc = canonical_residue(acc * base, m);
            base = canonical_residue(base * base, m);
        }
        return DomainElement(a.domain(), BigRational(acc));
    }

    const BigInt& num = numerator(a.value());
    const BigInt& den = denominator(a.value());
    if (num == 0)
        return e == 0 ? DomainElement::one(a.domain()) : DomainElement::zero(a.domain());
    if ((num == 1 || num == -1) && den == 1) {
        bool negative = (num == -1) && (e % 2 == 1);
        return DomainElement(a.domain(), negative ? -1 : 1);
    }
    // Exact powers of a general base grow fast; refuse absurd exponents
    // instead of exhausting memory.
    if (e > (1 << 20))
        throw std::overflow_error("coefficient power exceeds the supported range");
    const unsigned ue = static_cast<unsigned>(e);
    return DomainElement(a.domain(),
                         BigRational(boost::multiprecision::pow(num, ue),
                                     boost::multiprecision::pow(den, ue)));
}

bool is_unit(const DomainElement& a) {
    if (a.is_zero())
        throw MathError(MathError::Code::ZeroInput, "is_unit: zero input");
    switch (a.domain().kind()) {
    case DomainKind::Integers:
        return a.value() == 1 || a.value() == -1;
    case DomainKind::Rationals:
        return true;
    case DomainKind::IntegersMod:
        return gcd(numerator(a.value()), BigInt(a.domain().modulus())) == 1;
    }
    return false;
}

bool is_idempotent_element(const DomainElement& a) {
    return mul(a, a) == a;
}

std::vector<DomainElement> nontrivial_idempotents(const Domain& d) {
    if (!d.is_integers_mod())
        return {};
    const std::int64_t m = d.modulus();
    if (m > 1'000'000)
        throw LimitError("nontrivial_idempotents: residue scan capped at m <= 10^6");
    std::vector<DomainElement> out;
    for (std::int64_t r = 2; r < m; ++r) {
        // r^2 = r mod m, via plain integer arithmetic then reduction
        if ((static_cast<__int128>(r) * r - r) % m == 0)
            out.emplace_back(d, r);
    }
    return out;
}

} // namespace monret
