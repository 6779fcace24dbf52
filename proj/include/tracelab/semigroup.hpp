#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tracelab {

using i64 = std::int64_t;

/// A numerical semigroup: a cofinite additive submonoid of the nonnegative
/// integers, stored by its minimal generating set together with a membership
/// bitset over the window [0, frobenius + 2*multiplicity].  Membership beyond
/// the window is always true.
class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `gens`.  The generating set is
    /// minimalized, gaps and the Frobenius number are materialized.
    /// Throws std::invalid_argument on an empty list ("empty input") or
    /// when gcd(gens) != 1 ("not cofinite").
    static NumericalSemigroup from_generators(std::vector<i64> gens);

    /// Builds the semigroup whose gap set is exactly `gaps`.  The complement
    /// must be closed under addition; throws std::invalid_argument otherwise.
    static NumericalSemigroup from_gaps(const std::vector<i64>& gaps);

    const std::vector<i64>& generators() const { return gens_; }
    const std::vector<i64>& gaps() const { return gaps_; }
    i64 frobenius() const { return frobenius_; }
    i64 multiplicity() const { return gens_.front(); }
    i64 embedding_dimension() const { return static_cast<i64>(gens_.size()); }
    i64 genus() const { return static_cast<i64>(gaps_.size()); }
    /// Least c with [c, inf) contained in the semigroup.
    i64 conductor() const { return frobenius_ + 1; }

    bool contains(i64 n) const;

    /// Least member in each residue class mod n, indexed by residue.
    /// Requires n > 0 and n a member ("invalid Apéry base").
    std::vector<i64> apery_set(i64 n) const;

    /// True iff the semigroup is all of the nonnegative integers.
    bool is_regular() const { return frobenius_ == -1; }
    /// multiplicity == embedding dimension (maximal embedding dimension).
    bool has_minimal_multiplicity() const;
    /// For every integer x exactly one of x, F - x is a member.
    bool is_symmetric() const;
    /// Every shifted tail { t - s : t in S, t >= s } with s a member is again
    /// closed under addition.
    bool is_arf() const;

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

    std::string to_string() const;  // "<3,4,5>"

private:
    NumericalSemigroup() = default;
    void materialize_from_members();  // fills gaps_, gens_ from member_/frobenius_

    std::vector<i64> gens_;      // minimal generators, sorted
    i64 frobenius_ = -1;         // largest gap, -1 for the full monoid
    std::vector<i64> gaps_;      // sorted positive integers not in S
    std::vector<bool> member_;   // membership over [0, frobenius + 2e]
};

/// All numerical semigroups with Frobenius number <= max_frobenius, ordered
/// lexicographically by sorted gap list.  Guard: max_frobenius <= 30.
std::vector<NumericalSemigroup> enumerate_semigroups(i64 max_frobenius);

}  // namespace tracelab
