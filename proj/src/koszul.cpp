#include "tracelab/koszul.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tracelab {

namespace {

int popcount(unsigned m) { return __builtin_popcount(m); }

// position of bit j among the set bits of mask, counted from the lowest
int bit_pos(unsigned mask, int j) {
    return popcount(mask & ((1u << j) - 1u));
}

}  // namespace

KoszulComplex koszul_build(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("bound");
    KoszulComplex K;
    K.n = n;
    K.terms.assign(static_cast<std::size_t>(n) + 1, {});
    for (unsigned m = 0; m < (1u << n); ++m)
        K.terms[static_cast<std::size_t>(popcount(m))].push_back(m);
    // masks are generated in increasing order, which is colex on subsets

    std::vector<std::map<unsigned, std::size_t>> index(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
        for (std::size_t t = 0; t < K.terms[i].size(); ++t) index[i][K.terms[i][t]] = t;

    for (int i = 1; i <= n; ++i) {
        const auto& cols = K.terms[static_cast<std::size_t>(i)];
        const auto& rows = K.terms[static_cast<std::size_t>(i - 1)];
        std::vector<KoszulEntry> d(rows.size() * cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const unsigned T = cols[c];
            for (int j = 0; j < n; ++j) {
                if (!(T & (1u << j))) continue;
                const unsigned S = T & ~(1u << j);
                const std::size_t r = index[static_cast<std::size_t>(i - 1)].at(S);
                d[r * cols.size() + c] = {j, bit_pos(T, j) % 2 == 0 ? 1 : -1};
            }
        }
        K.diffs.push_back(std::move(d));
    }
    return K;
}

bool koszul_verify(const KoszulComplex& K) {
    for (int i = 1; i + 1 <= K.n; ++i) {
        const std::size_t rows = K.diff_rows(i), mids = K.diff_cols(i), cols = K.diff_cols(i + 1);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                // entry of d_i d_{i+1} as a signed sum of commutative
                // monomials x_a x_b
                std::map<std::pair<int, int>, int> acc;
                for (std::size_t m = 0; m < mids; ++m) {
                    const KoszulEntry& e1 = K.diff_at(i, r, m);
                    const KoszulEntry& e2 = K.diff_at(i + 1, m, c);
                    if (e1.var < 0 || e2.var < 0) continue;
                    const auto key = std::minmax(e1.var, e2.var);
                    acc[{key.first, key.second}] += e1.sign * e2.sign;
                }
                for (const auto& [mono, coeff] : acc)
                    if (coeff != 0) return false;
            }
    }
    return true;
}

std::vector<int> koszul_variable_ideal(const KoszulComplex& K, int i) {
    if (i < 1 || i > K.n) throw std::invalid_argument("bound");
    std::vector<bool> seen(static_cast<std::size_t>(K.n), false);
    for (const auto& e : K.diffs[static_cast<std::size_t>(i - 1)])
        if (e.var >= 0) seen[static_cast<std::size_t>(e.var)] = true;
    std::vector<int> out;
    for (int v = 0; v < K.n; ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<RMatrix> koszul_specialize(const KoszulComplex& K, AlgebraPtr A,
                                       const std::vector<std::vector<i64>>& images) {
    if (static_cast<int>(images.size()) != K.n) throw std::invalid_argument("dimension mismatch");
    for (const auto& u : images)
        if (u.size() != A->dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<RMatrix> out;
    for (int i = 1; i <= K.n; ++i) {
        RMatrix M(A, K.diff_rows(i), K.diff_cols(i));
        for (std::size_t r = 0; r < M.rows; ++r)
            for (std::size_t c = 0; c < M.cols; ++c) {
                const KoszulEntry& e = K.diff_at(i, r, c);
                if (e.var < 0) continue;
                auto u = images[static_cast<std::size_t>(e.var)];
                if (e.sign < 0)
                    for (i64& x : u) x = A->field().neg(x);
                M.at(r, c) = std::move(u);
            }
        out.push_back(std::move(M));
    }
    return out;
}

}  // namespace tracelab
