#include "monret/transform.hpp"

#include "monret/errors.hpp"

#include <stdexcept>
#include <utility>

namespace monret {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty())
        throw std::invalid_argument("permutation needs size >= 1");
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw std::invalid_argument("permutation mapping is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = i;
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> images(size());
    for (std::size_t i = 0; i < size(); ++i)
        images[images_[i]] = i;
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

ExponentMatrix conjugate(const ExponentMatrix& m, const Permutation& sigma) {
    if (sigma.size() != m.size())
        throw std::invalid_argument("conjugate: size mismatch");
    ExponentMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.set(sigma(i), sigma(j), m(i, j));
    return out;
}

ExponentMatrix permute_columns(const ExponentMatrix& m, const Permutation& tau) {
    if (tau.size() != m.size())
        throw std::invalid_argument("permute_columns: size mismatch");
    ExponentMatrix out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < m.size(); ++i)
            out.set(i, tau(j), m(i, j));
    return out;
}

bool is_standard(const ExponentMatrix& m) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m(i, i) < m(i + 1, i + 1))
            return false;
    return true;
}

Standardization standardize(const ExponentMatrix& m) {
    if (!is_idempotent(m))
        throw MathError(MathError::Code::NotIdempotent,
                        "standardize: input matrix is not idempotent");
    const std::size_t n = m.size();
    std::vector<std::size_t> images(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) == 1)
            images[i] = next++;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) != 1)
            images[i] = next++;
    Permutation sigma(std::move(images));
    return Standardization{conjugate(m, sigma), std::move(sigma)};
}

} // namespace monret
