#pragma once

#include <vector>

#include "tracelab/module.hpp"

namespace tracelab {

/// Entry of a Koszul differential: zero, or a signed single variable.
struct KoszulEntry {
    int var = -1;  // variable index, -1 for a zero entry
    int sign = 0;  // +1 or -1
};

/// The Koszul complex on n variables.  Degree-i term has one basis element
/// per i-subset of the variables; subsets are ordered by their bitmask value
/// (colex).  The differential sends e_T to sum over j in T of
/// (-1)^{pos(j,T)} x_j e_{T minus j}, pos counted from 0 in the sorted
/// subset.
struct KoszulComplex {
    int n = 0;
    std::vector<std::vector<unsigned>> terms;        // terms[i] = masks of weight i
    std::vector<std::vector<KoszulEntry>> diffs;     // diffs[i-1] = matrix of d_i, row-major
    std::size_t diff_rows(int i) const { return terms[static_cast<std::size_t>(i - 1)].size(); }
    std::size_t diff_cols(int i) const { return terms[static_cast<std::size_t>(i)].size(); }
    const KoszulEntry& diff_at(int i, std::size_t r, std::size_t c) const {
        return diffs[static_cast<std::size_t>(i - 1)][r * diff_cols(i) + c];
    }
};

/// Build the complex; 1 <= n <= 10.
KoszulComplex koszul_build(int n);

/// Symbolic check that consecutive differentials compose to zero.
bool koszul_verify(const KoszulComplex& K);

/// Sorted variable indices occurring in d_i (1 <= i <= n).  Equals the full
/// variable set for every i.
std::vector<int> koszul_variable_ideal(const KoszulComplex& K, int i);

/// Substitute algebra elements for the variables; returns the matrices of
/// d_1 .. d_n over the algebra.
std::vector<RMatrix> koszul_specialize(const KoszulComplex& K, AlgebraPtr A,
                                       const std::vector<std::vector<i64>>& images);

}  // namespace tracelab
