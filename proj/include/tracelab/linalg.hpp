#pragma once

#include <cstddef>
#include <vector>

#include "tracelab/field.hpp"

namespace tracelab {

/// Dense matrix over GF(p), row-major.
struct FMatrix {
    PrimeField F;
    std::size_t rows = 0, cols = 0;
    std::vector<i64> a;  // rows * cols entries, least nonnegative residues

    FMatrix(PrimeField field, std::size_t r, std::size_t c)
        : F(field), rows(r), cols(c), a(r * c, 0) {}

    static FMatrix identity(PrimeField F, std::size_t n) {
        FMatrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    i64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    i64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }

    FMatrix mul(const FMatrix& o) const;
    FMatrix add(const FMatrix& o) const;
    FMatrix sub(const FMatrix& o) const;
    FMatrix transpose() const;
    std::vector<i64> apply(const std::vector<i64>& v) const;  // this * v
    bool is_zero() const {
        for (i64 x : a)
            if (x) return false;
        return true;
    }
    bool operator==(const FMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a && F == o.F;
    }
};

/// Row reduction in place; returns the pivot columns.
std::vector<std::size_t> rref(FMatrix& M);

/// Basis of the right kernel { v : M v = 0 }, one basis vector per column.
FMatrix nullspace(FMatrix M);

std::size_t rank(FMatrix M);

/// Subspace of GF(p)^ambient in canonical form: the unique reduced
/// row-echelon basis.  Equal subspaces compare equal.
class Subspace {
public:
    Subspace(PrimeField F, std::size_t ambient) : F_(F), ambient_(ambient) {}

    static Subspace span(PrimeField F, std::size_t ambient,
                         const std::vector<std::vector<i64>>& vectors);

    PrimeField field() const { return F_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<i64>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const std::vector<i64>& v) const;
    bool contains(const Subspace& other) const;  // other inside this
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_ && F_ == o.F_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// Coordinates of v in the echelon basis; requires contains(v).
    std::vector<i64> coordinates(const std::vector<i64>& v) const;

private:
    PrimeField F_;
    std::size_t ambient_;
    std::vector<std::vector<i64>> rows_;  // reduced echelon, no zero rows
    std::vector<std::size_t> pivots_;
};

}  // namespace tracelab
