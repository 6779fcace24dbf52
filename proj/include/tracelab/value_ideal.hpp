#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tracelab/semigroup.hpp"

namespace tracelab {

/// A fractional monomial ideal over a numerical semigroup ring, stored by its
/// value set: a bounded-below set of integers closed under addition of
/// semigroup members, kept as sporadic values below a minimal conductor plus
/// the cofinite tail [conductor, inf).
class ValueIdeal {
public:
    /// Ideal generated by `values`: the closure { v + s : v in values, s in S }.
    ValueIdeal(NumericalSemigroup S, std::vector<i64> values);

    /// The ring itself as a value set (value set = S).
    static ValueIdeal ring(const NumericalSemigroup& S);
    /// The maximal ideal: value set S \ {0}.
    static ValueIdeal maximal_ideal(const NumericalSemigroup& S);
    /// The canonical ideal: { x : F - x not in S }.
    static ValueIdeal canonical(const NumericalSemigroup& S);

    const NumericalSemigroup& semigroup() const { return sgp_; }
    const std::vector<i64>& sporadic() const { return sporadic_; }
    i64 conductor() const { return conductor_; }
    i64 min() const { return sporadic_.empty() ? conductor_ : sporadic_.front(); }

    bool contains(i64 x) const;
    /// All elements in [min, bound].
    std::vector<i64> elements_upto(i64 bound) const;

    ValueIdeal shifted(i64 a) const;
    /// Shift to min = 0 (the normalized representative of the shift class).
    ValueIdeal normalized() const { return shifted(-min()); }

    bool operator==(const ValueIdeal& o) const;
    bool operator!=(const ValueIdeal& o) const { return !(*this == o); }
    bool subset_of(const ValueIdeal& o) const;

    /// Closure certificate: every represented value stays inside the set
    /// under addition of every generator of S.
    bool is_closed() const;

    std::string to_string() const;  // "{0, 2, 4->}"

private:
    ValueIdeal(NumericalSemigroup S, std::vector<i64> sporadic, i64 conductor);
    void normalize();  // sort/dedup sporadic, minimalize conductor

    NumericalSemigroup sgp_;
    std::vector<i64> sporadic_;  // sorted, all < conductor_
    i64 conductor_ = 0;          // every x >= conductor_ is in the set
};

/// Finite formal direct sum of value ideals over a common semigroup.
struct ModuleSum {
    std::vector<ValueIdeal> summands;  // non-empty, common semigroup

    explicit ModuleSum(std::vector<ValueIdeal> parts);
    const NumericalSemigroup& semigroup() const { return summands.front().semigroup(); }
};

ValueIdeal add(const ValueIdeal& I, const ValueIdeal& J);
ValueIdeal multiply(const ValueIdeal& I, const ValueIdeal& J);
/// { x : x + J subset of I }.
ValueIdeal colon(const ValueIdeal& I, const ValueIdeal& J);

/// Trace ideal of a rank-one fractional ideal, computed as I * (R : I).
ValueIdeal trace(const ValueIdeal& I);
ValueIdeal trace(const ModuleSum& M);

/// Elements of I that are not in m*I, i.e. a minimal generating set.
std::vector<i64> minimal_generators(const ValueIdeal& I);
i64 mu(const ValueIdeal& I);
i64 mu(const ModuleSum& M);

/// Maximally generated: mu(I) equals the multiplicity of the semigroup.
bool is_ulrich(const ValueIdeal& I);
bool is_ulrich(const ModuleSum& M);
/// Trace equals the maximal ideal.
bool is_full_trace(const ValueIdeal& I);
bool is_full_trace(const ModuleSum& M);

/// n-fold product of the maximal ideal (n = 0 gives the ring).
ValueIdeal maximal_ideal_power(const NumericalSemigroup& S, i64 n);

/// The shift a with J = a + I, if the two ideals are isomorphic.
std::optional<i64> isomorphism_shift(const ValueIdeal& I, const ValueIdeal& J);

/// m subset of trace(canonical ideal).
bool is_nearly_gorenstein(const NumericalSemigroup& S);

/// The endomorphism ring (m : m), normalized to a numerical semigroup.
NumericalSemigroup endomorphism_ring(const NumericalSemigroup& S);

struct EndoTrace {
    NumericalSemigroup endo;  // value set of (m : m) as a semigroup
    ValueIdeal trace_over_endo;
};
/// Trace of an Ulrich module computed over the endomorphism ring of m.
/// Requires a semigroup of minimal multiplicity and Ulrich summands.
EndoTrace trace_over_endomorphism_ring(const ModuleSum& M);

/// All value sets with min = 0 closed under the semigroup action, i.e. one
/// representative per shift class of fractional ideals.  Enumerated by
/// closure-valid subsets of the gap set.  Guard: at most 20 gaps.
std::vector<ValueIdeal> enumerate_normalized_ideals(const NumericalSemigroup& S);

}  // namespace tracelab
