#pragma once

#include <optional>
#include <vector>

#include "tracelab/artinian.hpp"

namespace tracelab {

/// Matrix with entries in an Artinian algebra (each entry a coefficient
/// vector over the monomial basis).
struct RMatrix {
    AlgebraPtr A;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<i64>> e;  // row-major, each entry of size A->dim()

    RMatrix(AlgebraPtr alg, std::size_t r, std::size_t c);
    static RMatrix identity(AlgebraPtr alg, std::size_t n);

    std::vector<i64>& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const std::vector<i64>& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

    RMatrix mul(const RMatrix& o) const;
    bool is_zero() const;
    /// True when no entry has a unit coefficient (all entries lie in m).
    bool entries_in_m() const;
};

/// Finite-dimensional module over an Artinian algebra, given as a
/// representation: a vector space dimension plus one action matrix per
/// variable.  The actions must commute and satisfy the algebra's relations.
class PresentedModule {
public:
    PresentedModule(AlgebraPtr A, std::vector<FMatrix> actions);

    static PresentedModule regular(AlgebraPtr A);        // R as a module over itself
    static PresentedModule residue_field(AlgebraPtr A);  // k = R/m
    static PresentedModule zero(AlgebraPtr A);
    /// Submodule of the regular representation generated by the given
    /// elements.
    static PresentedModule ideal(AlgebraPtr A, const std::vector<std::vector<i64>>& generators);
    /// Submodule of the free module with the given diagonal-action ambient,
    /// carried by an action-closed subspace.
    static PresentedModule submodule(AlgebraPtr A, const std::vector<FMatrix>& ambient_actions,
                                     const Subspace& carrier);
    /// Cokernel of a presentation matrix: free module R^rows modulo the
    /// column span.
    static PresentedModule cokernel(const RMatrix& P);

    const AlgebraPtr& algebra() const { return A_; }
    std::size_t dim() const { return dim_; }
    const FMatrix& action(std::size_t j) const { return actions_[j]; }
    const std::vector<FMatrix>& actions() const { return actions_; }

    /// Action of an arbitrary ring element (evaluation of the
    /// representation).
    FMatrix act(const std::vector<i64>& r) const;

    PresentedModule direct_sum(const PresentedModule& o) const;

    /// m * M as a subspace of the module.
    Subspace radical_submodule() const;
    std::size_t min_gens() const;  // mu(M) = dim M/mM

    bool is_zero_module() const { return dim_ == 0; }
    bool is_ulrich() const;  // nonzero and killed by m

private:
    AlgebraPtr A_;
    std::size_t dim_;
    std::vector<FMatrix> actions_;
};

/// Basis of Hom(M, R) as a list of (dim R) x (dim M) matrices intertwining
/// the module action with multiplication on the ring.
std::vector<FMatrix> hom_to_ring(const PresentedModule& M);

/// Trace ideal of M: span of the images of a hom basis, as a subspace of
/// the regular representation (always an ideal).
Subspace trace_ideal(const PresentedModule& M);

/// { r in R : r * M = 0 } as a subspace of the regular representation.
Subspace annihilator(const PresentedModule& M);

bool is_full_trace(const PresentedModule& M);
bool has_free_summand(const PresentedModule& M);
/// Witness route for the free-summand test: some single hom image contains
/// a unit.  Over a local ring this is equivalent to trace = R.
bool free_summand_witness(const PresentedModule& M);

/// Ideal of R generated by all entries of the matrix.
Subspace matrix_ideal(const RMatrix& P);

/// Column span of P inside the free codomain R^rows, as a module.
PresentedModule image_module(const RMatrix& P);

/// I(P) is contained in trace(im P); must hold for every matrix.
bool check_lemma_matrix_trace(const RMatrix& P);

struct FreeResolution {
    std::vector<std::size_t> betti;          // betti[i] = rank of step i, i = 0..steps
    std::vector<RMatrix> maps;               // maps[i]: R^betti[i+1] -> R^betti[i]
    std::vector<PresentedModule> syzygies;   // syzygies[i] = Omega^i, Omega^0 = M
};

/// Minimal free resolution of M to the given number of steps.  Guards:
/// steps <= 12, running total of free-module dimensions <= 1e5.
FreeResolution minimal_resolution(const PresentedModule& M, int steps);

/// Trace ideal computed through a minimal presentation: rows v over R with
/// v * P = 0; the trace is the ideal generated by all entries of a kernel
/// basis.  Independent of the intertwiner route.
Subspace trace_via_presentation(const PresentedModule& M);

/// Restricted isomorphism test, sound for cyclic modules and k-vector
/// spaces: equal dimension, equal minimal-generator count, equal
/// annihilator.
bool isomorphic_restricted(const PresentedModule& M, const PresentedModule& N);

}  // namespace tracelab
