#include "monret/monomial.hpp"

#include "monret/checked.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace monret {

Monomial::Monomial(DomainElement coeff, std::vector<std::int64_t> exponents)
    : coeff_(std::move(coeff)), exponents_(std::move(exponents)) {
    if (coeff_.is_zero())
        throw std::invalid_argument("monomial coefficient must be nonzero");
    for (std::int64_t e : exponents_)
        if (e < 0)
            throw std::invalid_argument("monomial exponents must be non-negative");
}

bool Monomial::is_one() const {
    return coeff_.is_one() &&
           std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::int64_t e) { return e == 0; });
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (std::int64_t e : exponents_)
        d = checked_add(d, e);
    return d;
}

Monomial variable_monomial(const Domain& d, std::size_t n, std::size_t i) {
    if (i >= n)
        throw std::invalid_argument("variable index out of range");
    std::vector<std::int64_t> exps(n, 0);
    exps[i] = 1;
    return Monomial(DomainElement::one(d), std::move(exps));
}

Monomial one_monomial(const Domain& d, std::size_t n) {
    return Monomial(DomainElement::one(d), std::vector<std::int64_t>(n, 0));
}

Image mul(const Monomial& a, const Monomial& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument("monomial dimension mismatch");
    DomainElement c = mul(a.coeff(), b.coeff());
    if (c.is_zero())
        return std::nullopt;
    std::vector<std::int64_t> exps(a.variables());
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = checked_add(a.exponent(i), b.exponent(i));
    return Monomial(std::move(c), std::move(exps));
}

DomainElement evaluate(const Monomial& m, const std::vector<DomainElement>& point) {
    if (point.size() != m.variables())
        throw std::invalid_argument("evaluation point dimension mismatch");
    DomainElement acc = m.coeff();
    for (std::size_t i = 0; i < point.size(); ++i)
        if (m.exponent(i) > 0)
            acc = mul(acc, pow(point[i], m.exponent(i)));
    return acc;
}

MonomialMap::MonomialMap(Domain domain, std::vector<Image> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
    if (images_.empty())
        throw std::invalid_argument("monomial map needs at least one variable");
    for (const Image& img : images_) {
        if (!img)
            continue;
        if (img->variables() != images_.size())
            throw std::invalid_argument("image exponent vector has wrong length");
        if (img->coeff().domain() != domain_)
            throw std::invalid_argument("image coefficient from a different domain");
    }
}

MonomialMap MonomialMap::identity(const Domain& d, std::size_t n) {
    std::vector<Image> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        images.emplace_back(variable_monomial(d, n, i));
    return MonomialMap(d, std::move(images));
}

Image substitute(const Monomial& m, const MonomialMap& phi) {
    if (m.variables() != phi.variables())
        throw std::invalid_argument("substitute: dimension mismatch");
    if (m.coeff().domain() != phi.domain())
        throw std::invalid_argument("substitute: domain mismatch");

    DomainElement coeff = m.coeff();
    std::vector<std::int64_t> exps(phi.variables(), 0);
    for (std::size_t i = 0; i < phi.variables(); ++i) {
        const std::int64_t e = m.exponent(i);
        if (e == 0)
            continue;
        const Image& img = phi.image(i);
        if (!img)
            return std::nullopt; // a used variable maps to zero
        coeff = mul(coeff, pow(img->coeff(), e));
        for (std::size_t k = 0; k < exps.size(); ++k)
            exps[k] = checked_add(exps[k], checked_mul(e, img->exponent(k)));
    }
    if (coeff.is_zero())
        return std::nullopt; // coefficient product vanished in Z/m
    return Monomial(std::move(coeff), std::move(exps));
}

MonomialMap compose(const MonomialMap& phi, const MonomialMap& psi) {
    if (phi.variables() != psi.variables())
        throw std::invalid_argument("compose: dimension mismatch");
    if (phi.domain() != psi.domain())
        throw std::invalid_argument("compose: domain mismatch");
    std::vector<Image> images;
    images.reserve(phi.variables());
    for (std::size_t i = 0; i < psi.variables(); ++i) {
        const Image& img = psi.image(i);
        images.push_back(img ? substitute(*img, phi) : std::nullopt);
    }
    return MonomialMap(phi.domain(), std::move(images));
}

bool is_retraction(const MonomialMap& phi) {
    return compose(phi, phi) == phi;
}

bool is_nondegenerate(const MonomialMap& phi) {
    for (std::size_t i = 0; i < phi.variables(); ++i) {
        bool appears = false;
        for (std::size_t j = 0; j < phi.variables() && !appears; ++j)
            appears = phi.image(j) && phi.image(j)->exponent(i) > 0;
        if (!appears)
            return false;
    }
    return true;
}

bool is_monic(const MonomialMap& phi) {
    for (const Image& img : phi.images())
        if (img && !img->is_monic())
            return false;
    return true;
}

} // namespace monret
