#pragma once

#include "monret/domain.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace monret {

/// A nonzero coefficient times a product of variable powers.  The
/// exponent vector always has the length of the ambient variable count.
class Monomial {
public:
    Monomial(DomainElement coeff, std::vector<std::int64_t> exponents);

    const DomainElement& coeff() const { return coeff_; }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }
    std::size_t variables() const { return exponents_.size(); }
    std::int64_t exponent(std::size_t i) const { return exponents_.at(i); }

    bool is_monic() const { return coeff_.is_one(); }
    /// The constant monomial 1.
    bool is_one() const;
    std::int64_t total_degree() const;

    bool operator==(const Monomial&) const = default;

private:
    DomainElement coeff_;
    std::vector<std::int64_t> exponents_;
};

/// Image of a variable under a monomial map: absent means the zero
/// polynomial, which is deliberately not a Monomial (coeff != 0 is an
/// invariant of Monomial).
using Image = std::optional<Monomial>;

/// The monic monomial X_i in an n-variable ring.
Monomial variable_monomial(const Domain& d, std::size_t n, std::size_t i);
/// The constant monomial 1 in an n-variable ring.
Monomial one_monomial(const Domain& d, std::size_t n);

/// Product of two monomials; zero if the coefficient product vanishes
/// (possible over Z/m).
Image mul(const Monomial& a, const Monomial& b);

/// Value of a monomial at a point, by exact domain arithmetic.
DomainElement evaluate(const Monomial& m, const std::vector<DomainElement>& point);

/// A self-map of R[X_1..X_n] sending each variable to zero or a
/// monomial; the candidate retractions of the whole library.
class MonomialMap {
public:
    MonomialMap(Domain domain, std::vector<Image> images);

    static MonomialMap identity(const Domain& d, std::size_t n);

    std::size_t variables() const { return images_.size(); }
    const Domain& domain() const { return domain_; }
    const Image& image(std::size_t i) const { return images_.at(i); }
    const std::vector<Image>& images() const { return images_; }

    bool operator==(const MonomialMap&) const = default;

private:
    Domain domain_;
    std::vector<Image> images_;
};

/// Image of m under the algebra map X_i -> phi(X_i).  Zero when a
/// variable with positive exponent maps to zero or the coefficient
/// product vanishes in the domain.
Image substitute(const Monomial& m, const MonomialMap& phi);

/// phi o psi: sends X_i to substitute(psi(X_i), phi).
MonomialMap compose(const MonomialMap& phi, const MonomialMap& psi);

/// phi^2 = phi, by structural comparison of the composed images.
bool is_retraction(const MonomialMap& phi);

/// Every X_i appears with positive exponent in some image.
bool is_nondegenerate(const MonomialMap& phi);

/// Every non-zero image has coefficient 1 (vacuously true when all
/// images are zero).
bool is_monic(const MonomialMap& phi);

} // namespace monret
