#pragma once

#include "monret/exponent_matrix.hpp"

#include <cstddef>
#include <vector>

namespace monret {

/// A bijection of {0,..,n-1}.  Text interfaces are 1-indexed to match
/// the usual notation; in code everything is 0-indexed.
class Permutation {
public:
    /// images[i] = sigma(i); must be a bijection.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }
    const std::vector<std::size_t>& mapping() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::size_t> images_;
};

/// Exponent matrix of the conjugated retraction phi^sigma:
/// result(sigma(i), sigma(j)) = m(i, j).  Preserves idempotency.
ExponentMatrix conjugate(const ExponentMatrix& m, const Permutation& sigma);

/// Column action: column tau(j) of the result is column j of m.
ExponentMatrix permute_columns(const ExponentMatrix& m, const Permutation& tau);

/// Diagonal entries are non-increasing.
bool is_standard(const ExponentMatrix& m);

struct Standardization {
    ExponentMatrix matrix;
    Permutation sigma;
};

/// Canonical standard form of an idempotent matrix: indices with
/// diagonal entry 1 go to positions 0..p-1 in increasing order, the
/// rest to p..n-1 in increasing order; the matrix is conjugate(m, sigma).
Standardization standardize(const ExponentMatrix& m);

} // namespace monret
