#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tracelab/linalg.hpp"

namespace tracelab {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

class ArtinianAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

/// Local finite-dimensional algebra GF(p)[x_1..x_v] / (monomial relations).
/// Elements are coefficient vectors over the standard-monomial basis, which
/// is ordered by total degree and then reverse-lexicographically on exponent
/// vectors (so 1, x, y, x^2, xy, y^2, ...).  basis()[0] is always 1.
class ArtinianAlgebra {
public:
    /// Relations must contain a pure power of every variable ("not
    /// Artinian" otherwise); resulting dimension is capped at 200 ("size
    /// guard").
    static AlgebraPtr monomial_quotient(i64 p, std::vector<std::string> vars,
                                        std::vector<Monomial> relations);

    PrimeField field() const { return F_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    std::size_t dim() const { return basis_.size(); }  // = length of the ring
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Monomial>& relations() const { return relations_; }

    /// Index of a basis monomial, or -1 when the monomial is 0 in the
    /// quotient.
    i64 basis_index(const Monomial& m) const;
    /// Product of two basis monomials: basis index or -1 for zero.
    i64 product_index(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    std::vector<i64> zero_element() const { return std::vector<i64>(dim(), 0); }
    std::vector<i64> one_element() const;
    std::vector<i64> monomial_element(const Monomial& m) const;  // normal form
    std::vector<i64> var_element(std::size_t j) const;

    std::vector<i64> mul_elements(const std::vector<i64>& u, const std::vector<i64>& v) const;
    /// Matrix of left multiplication by u on the regular representation.
    FMatrix mult_matrix(const std::vector<i64>& u) const;
    /// Multiplication by the variable x_j.
    const FMatrix& var_action(std::size_t j) const { return var_actions_[j]; }

    bool is_unit(const std::vector<i64>& u) const { return u[0] != 0; }  // local ring

    /// The maximal ideal as a subspace of the regular representation.
    const Subspace& maximal_ideal() const { return max_ideal_; }
    /// (0 : m), the annihilator of the maximal ideal.
    const Subspace& socle() const { return socle_; }
    /// m^n as a subspace (n = 0 gives the whole ring).
    Subspace ideal_power(int n) const;

    bool is_pir() const;                    // embedding dimension <= 1
    bool has_minimal_multiplicity() const;  // m^2 = 0
    std::size_t embedding_dimension() const;

    std::string monomial_string(const Monomial& m) const;
    std::string element_string(const std::vector<i64>& u) const;

private:
    ArtinianAlgebra(PrimeField F) : F_(F), max_ideal_(F, 0), socle_(F, 0) {}

    PrimeField F_;
    std::vector<std::string> vars_;
    std::vector<Monomial> relations_;
    std::vector<Monomial> basis_;
    std::vector<i64> table_;  // dim x dim: basis index of the product, -1 if zero
    std::vector<FMatrix> var_actions_;
    Subspace max_ideal_;
    Subspace socle_;
};

}  // namespace tracelab
