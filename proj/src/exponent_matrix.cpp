#include "monret/exponent_matrix.hpp"

#include "monret/checked.hpp"
#include "monret/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace monret {

ExponentMatrix::ExponentMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {
    if (n == 0)
        throw std::invalid_argument("exponent matrix needs size >= 1");
}

ExponentMatrix::ExponentMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n == 0)
        throw std::invalid_argument("exponent matrix needs size >= 1");
    if (entries_.size() != n * n)
        throw std::invalid_argument("exponent matrix entry count does not match size");
    for (std::int64_t e : entries_)
        if (e < 0)
            throw std::invalid_argument("exponent matrix entries must be non-negative");
}

ExponentMatrix ExponentMatrix::identity(std::size_t n) {
    ExponentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void ExponentMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
    if (v < 0)
        throw std::invalid_argument("exponent matrix entries must be non-negative");
    entries_[i * n_ + j] = v;
}

std::vector<std::int64_t> ExponentMatrix::column(std::size_t j) const {
    std::vector<std::int64_t> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

bool ExponentMatrix::row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < n_; ++j)
        if ((*this)(i, j) != 0)
            return false;
    return true;
}

bool ExponentMatrix::column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < n_; ++i)
        if ((*this)(i, j) != 0)
            return false;
    return true;
}

std::vector<std::size_t> ExponentMatrix::nonzero_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (!column_is_zero(j))
            out.push_back(j);
    return out;
}

bool ExponentMatrix::all_rows_nonzero() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (row_is_zero(i))
            return false;
    return true;
}

std::int64_t ExponentMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n_; ++i)
        t = checked_add(t, (*this)(i, i));
    return t;
}

std::int64_t ExponentMatrix::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

bool ExponentMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](std::int64_t e) { return e == 0; });
}

StructureReport structure_report(const ExponentMatrix& m) {
    const std::size_t n = m.size();
    StructureReport r{};

    r.diagonal_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) != 0 && m(i, i) != 1)
            r.diagonal_ok = false;

    r.zero_column_rule_ok = true;
    r.zero_row_rule_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != 1)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            if (m(j, i) != 0 && !m.column_is_zero(j))
                r.zero_column_rule_ok = false;
            if (m(i, j) != 0 && !m.row_is_zero(j))
                r.zero_row_rule_ok = false;
        }
    }

    r.trace = m.trace();
    r.is_zero_when_traceless = (r.trace != 0) || m.is_zero();
    return r;
}

bool is_idempotent(const ExponentMatrix& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t l = 0; l < n; ++l)
                acc = checked_add(acc, checked_mul(m(i, l), m(l, j)));
            if (acc != m(i, j))
                return false;
        }
    }
    return true;
}

ExponentMatrix from_monic_map(const MonomialMap& phi) {
    if (!is_monic(phi))
        throw MathError(MathError::Code::NotMonic,
                        "from_monic_map: map has a non-monic image");
    const std::size_t n = phi.variables();
    ExponentMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Image& img = phi.image(j);
        if (!img)
            throw MathError(MathError::Code::ZeroImage,
                            "from_monic_map: zero image has no exponent column");
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, j, img->exponent(i));
    }
    return m;
}

MonomialMap to_monic_map(const ExponentMatrix& m, const Domain& d) {
    const std::size_t n = m.size();
    std::vector<Image> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        images.emplace_back(Monomial(DomainElement::one(d), m.column(j)));
    return MonomialMap(d, std::move(images));
}

bool characterize_nonzero_rows(const ExponentMatrix& m) {
    const std::size_t n = m.size();
    if (!m.all_rows_nonzero())
        throw MathError(MathError::Code::ZeroRow,
                        "characterize_nonzero_rows: a zero row is present");
    for (std::size_t j = 0; j < n; ++j)
        if (!m.column_is_zero(j) && m(j, j) != 1)
            return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != 1)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && m(i, j) != 0)
                return false;
    }
    return true;
}

std::int64_t rank(const ExponentMatrix& m) {
    if (!is_idempotent(m))
        throw MathError(MathError::Code::NotIdempotent,
                        "rank: trace = rank holds only for idempotent matrices");
    return m.trace();
}

} // namespace monret
