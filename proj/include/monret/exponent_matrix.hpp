#pragma once

#include "monret/monomial.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace monret {

/// n x n matrix of non-negative integers.  Column j holds the exponent
/// vector of the j-th variable image, so a monic zero-free monomial map
/// and its exponent matrix carry the same data.
class ExponentMatrix {
public:
    /// Zero matrix.
    explicit ExponentMatrix(std::size_t n);
    /// Row-major entries; length must be n*n, all entries >= 0.
    ExponentMatrix(std::size_t n, std::vector<std::int64_t> entries);

    static ExponentMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }
    void set(std::size_t i, std::size_t j, std::int64_t v);

    std::vector<std::int64_t> column(std::size_t j) const;
    bool row_is_zero(std::size_t i) const;
    bool column_is_zero(std::size_t j) const;
    /// Ascending indices of nonzero rows / columns.
    std::vector<std::size_t> nonzero_columns() const;
    bool all_rows_nonzero() const;

    std::int64_t trace() const;
    std::int64_t max_entry() const;
    bool is_zero() const;

    const std::vector<std::int64_t>& entries() const { return entries_; }

    bool operator==(const ExponentMatrix&) const = default;
    /// Lexicographic by size, then flattened row-major entries.
    auto operator<=>(const ExponentMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<std::int64_t> entries_; // row-major
};

/// Lemma-style structure summary: each field evaluates one clause of
/// the idempotent-matrix lemma as a predicate on the entries.
struct StructureReport {
    bool diagonal_ok;           // every diagonal entry is 0 or 1
    bool zero_column_rule_ok;   // diag(i)=1 & entry(j,i)!=0, j!=i  =>  column j = 0
    bool zero_row_rule_ok;      // diag(i)=1 & entry(i,j)!=0, j!=i  =>  row j = 0
    std::int64_t trace;
    bool is_zero_when_traceless; // trace = 0  =>  M = 0
};

StructureReport structure_report(const ExponentMatrix& m);

/// M*M = M over the integers (checked arithmetic).
bool is_idempotent(const ExponentMatrix& m);

/// Exponent matrix of a monic zero-free map: entry (i,j) is the
/// exponent of X_i in phi(X_j).
ExponentMatrix from_monic_map(const MonomialMap& phi);

/// Inverse of from_monic_map: X_i -> X_1^{m(1,i)} ... X_n^{m(n,i)}.
MonomialMap to_monic_map(const ExponentMatrix& m, const Domain& d);

/// The characterization of idempotents among matrices with all rows
/// nonzero: every nonzero column has diagonal entry 1, and every row
/// with diagonal entry 1 has all off-diagonal entries 0.
bool characterize_nonzero_rows(const ExponentMatrix& m);

/// Rank of an idempotent matrix, which equals its trace; rejects
/// non-idempotent input because the identity is a theorem only there.
std::int64_t rank(const ExponentMatrix& m);

} // namespace monret
