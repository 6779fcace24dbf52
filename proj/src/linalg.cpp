#include "tracelab/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace tracelab {

FMatrix FMatrix::mul(const FMatrix& o) const {
    assert(cols == o.rows);
    FMatrix out(F, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const i64 x = at(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < o.cols; ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(x, o.at(k, j)));
        }
    return out;
}

FMatrix FMatrix::add(const FMatrix& o) const {
    assert(rows == o.rows && cols == o.cols);
    FMatrix out(F, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = F.add(a[i], o.a[i]);
    return out;
}

FMatrix FMatrix::sub(const FMatrix& o) const {
    assert(rows == o.rows && cols == o.cols);
    FMatrix out(F, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] = F.sub(a[i], o.a[i]);
    return out;
}

FMatrix FMatrix::transpose() const {
    FMatrix out(F, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<i64> FMatrix::apply(const std::vector<i64>& v) const {
    assert(v.size() == cols);
    std::vector<i64> out(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        i64 acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc = F.add(acc, F.mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

std::vector<std::size_t> rref(FMatrix& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t sel = r;
        while (sel < M.rows && M.at(sel, c) == 0) ++sel;
        if (sel == M.rows) continue;
        M.swap_rows(sel, r);
        const i64 iv = M.F.inv(M.at(r, c));
        for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) = M.F.mul(M.at(r, j), iv);
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            const i64 f = M.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = M.F.sub(M.at(i, j), M.F.mul(f, M.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

FMatrix nullspace(FMatrix M) {
    const auto pivots = rref(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < M.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FMatrix K(M.F, M.cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        K.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], k) = M.F.neg(M.at(r, fc));
    }
    return K;
}

std::size_t rank(FMatrix M) { return rref(M).size(); }

Subspace Subspace::span(PrimeField F, std::size_t ambient,
                        const std::vector<std::vector<i64>>& vectors) {
    FMatrix M(F, vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        assert(vectors[i].size() == ambient);
        for (std::size_t j = 0; j < ambient; ++j) M.at(i, j) = F.reduce(vectors[i][j]);
    }
    Subspace out(F, ambient);
    out.pivots_ = rref(M);
    for (std::size_t r = 0; r < out.pivots_.size(); ++r)
        out.rows_.emplace_back(M.a.begin() + static_cast<std::ptrdiff_t>(r * ambient),
                               M.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * ambient));
    return out;
}

bool Subspace::contains(const std::vector<i64>& v) const {
    assert(v.size() == ambient_);
    std::vector<i64> w(v);
    for (i64& x : w) x = F_.reduce(x);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const i64 f = w[pivots_[r]];
        if (!f) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] = F_.sub(w[j], F_.mul(f, rows_[r][j]));
    }
    for (i64 x : w)
        if (x) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    std::vector<std::vector<i64>> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    return span(F_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    assert(ambient_ == o.ambient_);
    // rows of this stacked over rows of o; kernel combinations give the meet
    FMatrix M(F_, ambient_, dim() + o.dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) M.at(i, j) = rows_[j][i];
    for (std::size_t j = 0; j < o.dim(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) M.at(i, dim() + j) = F_.neg(o.rows_[j][i]);
    FMatrix K = nullspace(std::move(M));
    std::vector<std::vector<i64>> vecs;
    for (std::size_t k = 0; k < K.cols; ++k) {
        std::vector<i64> v(ambient_, 0);
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i)
                v[i] = F_.add(v[i], F_.mul(K.at(j, k), rows_[j][i]));
        vecs.push_back(std::move(v));
    }
    return span(F_, ambient_, vecs);
}

std::vector<i64> Subspace::coordinates(const std::vector<i64>& v) const {
    std::vector<i64> coords(rows_.size(), 0);
    std::vector<i64> w(v);
    for (i64& x : w) x = F_.reduce(x);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const i64 f = w[pivots_[r]];
        coords[r] = f;
        if (!f) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] = F_.sub(w[j], F_.mul(f, rows_[r][j]));
    }
    for (i64 x : w)
        if (x) throw std::domain_error("vector outside subspace");
    return coords;
}

}  // namespace tracelab
