#include "tracelab/module.hpp"

#include <cassert>
#include <stdexcept>

namespace tracelab {

namespace {

// Action matrix of a basis monomial: product of the variable actions.
FMatrix monomial_action(const std::vector<FMatrix>& actions, PrimeField F, std::size_t dim,
                        const Monomial& m) {
    FMatrix out = FMatrix::identity(F, dim);
    for (std::size_t j = 0; j < m.size(); ++j)
        for (int k = 0; k < m[j]; ++k) out = actions[j].mul(out);
    return out;
}

// Block-diagonal variable actions on the free module R^slots.
std::vector<FMatrix> free_actions(const ArtinianAlgebra& A, std::size_t slots) {
    const std::size_t n = A.dim();
    std::vector<FMatrix> out;
    for (std::size_t j = 0; j < A.nvars(); ++j) {
        FMatrix B(A.field(), slots * n, slots * n);
        for (std::size_t l = 0; l < slots; ++l)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    B.at(l * n + r, l * n + c) = A.var_action(j).at(r, c);
        out.push_back(std::move(B));
    }
    return out;
}

// Deterministic minimal generators: earliest standard basis vectors of M
// that complete m*M to all of M.
std::vector<std::size_t> choose_generators(const PresentedModule& M) {
    Subspace G = M.radical_submodule();
    std::vector<std::size_t> picked;
    for (std::size_t t = 0; t < M.dim() && G.dim() < M.dim(); ++t) {
        std::vector<i64> e(M.dim(), 0);
        e[t] = 1;
        if (G.contains(e)) continue;
        picked.push_back(t);
        G = G.sum(Subspace::span(G.field(), M.dim(), {e}));
    }
    assert(G.dim() == M.dim());
    return picked;
}

// Minimal cover R^mu -> M over the chosen generators; returns the kernel as
// a subspace of the free module.
Subspace cover_kernel(const PresentedModule& M, const std::vector<std::size_t>& gens) {
    const ArtinianAlgebra& A = *M.algebra();
    const std::size_t n = A.dim(), mu = gens.size();
    FMatrix phi(A.field(), M.dim(), mu * n);
    for (std::size_t i = 0; i < n; ++i) {
        const FMatrix bi = monomial_action(M.actions(), A.field(), M.dim(), A.basis()[i]);
        for (std::size_t l = 0; l < mu; ++l)
            for (std::size_t r = 0; r < M.dim(); ++r)
                phi.at(r, l * n + i) = bi.at(r, gens[l]);
    }
    FMatrix K = nullspace(std::move(phi));
    std::vector<std::vector<i64>> vecs;
    for (std::size_t k = 0; k < K.cols; ++k) {
        std::vector<i64> v(mu * n);
        for (std::size_t r = 0; r < mu * n; ++r) v[r] = K.at(r, k);
        vecs.push_back(std::move(v));
    }
    Subspace ker = Subspace::span(A.field(), mu * n, vecs);
    // minimality of the cover: the kernel sits inside m * R^mu
    for (const auto& row : ker.basis())
        for (std::size_t l = 0; l < mu; ++l) assert(row[l * n] == 0);
    return ker;
}

// Entry slices of an ambient free-module vector.
std::vector<i64> slot(const std::vector<i64>& v, std::size_t l, std::size_t n) {
    return std::vector<i64>(v.begin() + static_cast<std::ptrdiff_t>(l * n),
                            v.begin() + static_cast<std::ptrdiff_t>((l + 1) * n));
}

}  // namespace

RMatrix::RMatrix(AlgebraPtr alg, std::size_t r, std::size_t c)
    : A(std::move(alg)), rows(r), cols(c), e(r * c, A->zero_element()) {}

RMatrix RMatrix::identity(AlgebraPtr alg, std::size_t n) {
    RMatrix out(std::move(alg), n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = out.A->one_element();
    return out;
}

RMatrix RMatrix::mul(const RMatrix& o) const {
    assert(cols == o.rows);
    RMatrix out(A, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& x = at(i, k);
            bool zero = true;
            for (i64 c : x)
                if (c) zero = false;
            if (zero) continue;
            for (std::size_t j = 0; j < o.cols; ++j) {
                auto prod = A->mul_elements(x, o.at(k, j));
                auto& dst = out.at(i, j);
                for (std::size_t t = 0; t < dst.size(); ++t)
                    dst[t] = A->field().add(dst[t], prod[t]);
            }
        }
    return out;
}

bool RMatrix::is_zero() const {
    for (const auto& entry : e)
        for (i64 c : entry)
            if (c) return false;
    return true;
}

bool RMatrix::entries_in_m() const {
    for (const auto& entry : e)
        if (entry[0] != 0) return false;
    return true;
}

PresentedModule::PresentedModule(AlgebraPtr A, std::vector<FMatrix> actions)
    : A_(std::move(A)), dim_(actions.empty() ? 0 : actions[0].rows), actions_(std::move(actions)) {
    if (actions_.size() != A_->nvars()) throw std::invalid_argument("action count mismatch");
    for (const auto& m : actions_)
        if (m.rows != dim_ || m.cols != dim_) throw std::invalid_argument("action shape mismatch");
    for (std::size_t i = 0; i < actions_.size(); ++i)
        for (std::size_t j = i + 1; j < actions_.size(); ++j)
            if (!(actions_[i].mul(actions_[j]) == actions_[j].mul(actions_[i])))
                throw std::invalid_argument("actions do not commute");
    for (const auto& r : A_->relations())
        if (!monomial_action(actions_, A_->field(), dim_, r).is_zero())
            throw std::invalid_argument("relation does not vanish");
}

PresentedModule PresentedModule::regular(AlgebraPtr A) {
    std::vector<FMatrix> acts;
    for (std::size_t j = 0; j < A->nvars(); ++j) acts.push_back(A->var_action(j));
    return PresentedModule(std::move(A), std::move(acts));
}

PresentedModule PresentedModule::residue_field(AlgebraPtr A) {
    std::vector<FMatrix> acts(A->nvars(), FMatrix(A->field(), 1, 1));
    return PresentedModule(std::move(A), std::move(acts));
}

PresentedModule PresentedModule::zero(AlgebraPtr A) {
    std::vector<FMatrix> acts(A->nvars(), FMatrix(A->field(), 0, 0));
    return PresentedModule(std::move(A), std::move(acts));
}

PresentedModule PresentedModule::ideal(AlgebraPtr A,
                                       const std::vector<std::vector<i64>>& generators) {
    std::vector<std::vector<i64>> vecs;
    for (const auto& g : generators)
        for (std::size_t i = 0; i < A->dim(); ++i) {
            std::vector<i64> b(A->dim(), 0);
            b[i] = 1;
            vecs.push_back(A->mul_elements(b, g));
        }
    Subspace carrier = Subspace::span(A->field(), A->dim(), vecs);
    std::vector<FMatrix> amb;
    for (std::size_t j = 0; j < A->nvars(); ++j) amb.push_back(A->var_action(j));
    return submodule(A, amb, carrier);
}

PresentedModule PresentedModule::submodule(AlgebraPtr A, const std::vector<FMatrix>& ambient_actions,
                                           const Subspace& carrier) {
    const std::size_t d = carrier.dim();
    std::vector<FMatrix> acts;
    for (std::size_t j = 0; j < A->nvars(); ++j) {
        FMatrix m(A->field(), d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const auto img = ambient_actions[j].apply(carrier.basis()[c]);
            const auto coords = carrier.coordinates(img);  // throws if not action-closed
            for (std::size_t r = 0; r < d; ++r) m.at(r, c) = coords[r];
        }
        acts.push_back(std::move(m));
    }
    return PresentedModule(std::move(A), std::move(acts));
}

PresentedModule PresentedModule::cokernel(const RMatrix& P) {
    const AlgebraPtr& A = P.A;
    const std::size_t n = A->dim(), slots = P.rows;
    // column span over R inside the free module
    std::vector<std::vector<i64>> vecs;
    for (std::size_t t = 0; t < P.cols; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<i64> b(n, 0);
            b[i] = 1;
            std::vector<i64> v(slots * n, 0);
            for (std::size_t l = 0; l < slots; ++l) {
                const auto prod = A->mul_elements(b, P.at(l, t));
                for (std::size_t r = 0; r < n; ++r) v[l * n + r] = prod[r];
            }
            vecs.push_back(std::move(v));
        }
    const Subspace U = Subspace::span(A->field(), slots * n, vecs);

    // quotient coordinates = non-pivot ambient positions after reduction
    std::vector<bool> is_pivot(slots * n, false);
    for (std::size_t p : U.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < slots * n; ++i)
        if (!is_pivot[i]) rest.push_back(i);

    auto project = [&](std::vector<i64> v) {
        for (std::size_t r = 0; r < U.dim(); ++r) {
            const i64 f = v[U.pivots()[r]];
            if (!f) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = A->field().sub(v[j], A->field().mul(f, U.basis()[r][j]));
        }
        std::vector<i64> q(rest.size());
        for (std::size_t k = 0; k < rest.size(); ++k) q[k] = v[rest[k]];
        return q;
    };

    const auto amb = free_actions(*A, slots);
    std::vector<FMatrix> acts;
    for (std::size_t j = 0; j < A->nvars(); ++j) {
        FMatrix m(A->field(), rest.size(), rest.size());
        for (std::size_t c = 0; c < rest.size(); ++c) {
            std::vector<i64> rep(slots * n, 0);
            rep[rest[c]] = 1;
            const auto q = project(amb[j].apply(rep));
            for (std::size_t r = 0; r < rest.size(); ++r) m.at(r, c) = q[r];
        }
        acts.push_back(std::move(m));
    }
    return PresentedModule(A, std::move(acts));
}

FMatrix PresentedModule::act(const std::vector<i64>& r) const {
    FMatrix out(A_->field(), dim_, dim_);
    for (std::size_t i = 0; i < A_->dim(); ++i) {
        if (!r[i]) continue;
        const FMatrix bi = monomial_action(actions_, A_->field(), dim_, A_->basis()[i]);
        for (std::size_t t = 0; t < out.a.size(); ++t)
            out.a[t] = A_->field().add(out.a[t], A_->field().mul(r[i], bi.a[t]));
    }
    return out;
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& o) const {
    if (A_ != o.A_) throw std::invalid_argument("algebra mismatch");
    std::vector<FMatrix> acts;
    for (std::size_t j = 0; j < A_->nvars(); ++j) {
        FMatrix m(A_->field(), dim_ + o.dim_, dim_ + o.dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) m.at(r, c) = actions_[j].at(r, c);
        for (std::size_t r = 0; r < o.dim_; ++r)
            for (std::size_t c = 0; c < o.dim_; ++c)
                m.at(dim_ + r, dim_ + c) = o.actions_[j].at(r, c);
        acts.push_back(std::move(m));
    }
    return PresentedModule(A_, std::move(acts));
}

Subspace PresentedModule::radical_submodule() const {
    std::vector<std::vector<i64>> vecs;
    for (const auto& act : actions_)
        for (std::size_t c = 0; c < dim_; ++c) {
            std::vector<i64> v(dim_);
            for (std::size_t r = 0; r < dim_; ++r) v[r] = act.at(r, c);
            vecs.push_back(std::move(v));
        }
    return Subspace::span(A_->field(), dim_, vecs);
}

std::size_t PresentedModule::min_gens() const { return dim_ - radical_submodule().dim(); }

bool PresentedModule::is_ulrich() const {
    if (dim_ == 0) return false;
    for (const auto& act : actions_)
        if (!act.is_zero()) return false;
    return true;
}

std::vector<FMatrix> hom_to_ring(const PresentedModule& M) {
    const ArtinianAlgebra& A = *M.algebra();
    const std::size_t n = A.dim(), m = M.dim();
    // unknowns: f (n x m), row-major; equations: B_j f - f A_j = 0
    FMatrix sys(A.field(), A.nvars() * n * m, n * m);
    for (std::size_t j = 0; j < A.nvars(); ++j) {
        const FMatrix& B = A.var_action(j);
        const FMatrix& Aj = M.action(j);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                const std::size_t row = (j * n + r) * m + c;
                for (std::size_t k = 0; k < n; ++k)
                    sys.at(row, k * m + c) =
                        A.field().add(sys.at(row, k * m + c), B.at(r, k));
                for (std::size_t k = 0; k < m; ++k)
                    sys.at(row, r * m + k) =
                        A.field().sub(sys.at(row, r * m + k), Aj.at(k, c));
            }
    }
    FMatrix K = nullspace(std::move(sys));
    std::vector<FMatrix> homs;
    for (std::size_t k = 0; k < K.cols; ++k) {
        FMatrix f(A.field(), n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) f.at(r, c) = K.at(r * m + c, k);
        homs.push_back(std::move(f));
    }
    return homs;
}

Subspace trace_ideal(const PresentedModule& M) {
    const ArtinianAlgebra& A = *M.algebra();
    std::vector<std::vector<i64>> vecs;
    for (const auto& f : hom_to_ring(M))
        for (std::size_t c = 0; c < f.cols; ++c) {
            std::vector<i64> v(A.dim());
            for (std::size_t r = 0; r < A.dim(); ++r) v[r] = f.at(r, c);
            vecs.push_back(std::move(v));
        }
    Subspace tr = Subspace::span(A.field(), A.dim(), vecs);
    // the trace is an ideal
    for (const auto& b : tr.basis())
        for (std::size_t j = 0; j < A.nvars(); ++j) assert(tr.contains(A.var_action(j).apply(b)));
    return tr;
}

Subspace annihilator(const PresentedModule& M) {
    const ArtinianAlgebra& A = *M.algebra();
    const std::size_t n = A.dim(), m = M.dim();
    FMatrix sys(A.field(), m * m, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<i64> b(n, 0);
        b[i] = 1;
        const FMatrix bi = M.act(b);
        for (std::size_t t = 0; t < m * m; ++t) sys.at(t, i) = bi.a[t];
    }
    FMatrix K = nullspace(std::move(sys));
    std::vector<std::vector<i64>> vecs;
    for (std::size_t k = 0; k < K.cols; ++k) {
        std::vector<i64> v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = K.at(r, k);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(A.field(), n, vecs);
}

bool is_full_trace(const PresentedModule& M) {
    return trace_ideal(M) == M.algebra()->maximal_ideal();
}

bool has_free_summand(const PresentedModule& M) {
    return trace_ideal(M).dim() == M.algebra()->dim();
}

bool free_summand_witness(const PresentedModule& M) {
    for (const auto& f : hom_to_ring(M))
        for (std::size_t c = 0; c < f.cols; ++c)
            if (f.at(0, c) != 0) return true;  // image contains a unit
    return false;
}

Subspace matrix_ideal(const RMatrix& P) {
    const ArtinianAlgebra& A = *P.A;
    std::vector<std::vector<i64>> vecs;
    for (const auto& entry : P.e)
        for (std::size_t i = 0; i < A.dim(); ++i) {
            std::vector<i64> b(A.dim(), 0);
            b[i] = 1;
            vecs.push_back(A.mul_elements(b, entry));
        }
    return Subspace::span(A.field(), A.dim(), vecs);
}

PresentedModule image_module(const RMatrix& P) {
    const ArtinianAlgebra& A = *P.A;
    const std::size_t n = A.dim();
    std::vector<std::vector<i64>> vecs;
    for (std::size_t t = 0; t < P.cols; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<i64> b(n, 0);
            b[i] = 1;
            std::vector<i64> v(P.rows * n);
            for (std::size_t l = 0; l < P.rows; ++l) {
                const auto prod = A.mul_elements(b, P.at(l, t));
                for (std::size_t r = 0; r < n; ++r) v[l * n + r] = prod[r];
            }
            vecs.push_back(std::move(v));
        }
    Subspace carrier = Subspace::span(A.field(), P.rows * n, vecs);
    return PresentedModule::submodule(P.A, free_actions(A, P.rows), carrier);
}

bool check_lemma_matrix_trace(const RMatrix& P) {
    return trace_ideal(image_module(P)).contains(matrix_ideal(P));
}

FreeResolution minimal_resolution(const PresentedModule& M, int steps) {
    if (steps < 0 || steps > 12) throw std::invalid_argument("size guard");
    const ArtinianAlgebra& A = *M.algebra();
    const std::size_t n = A.dim();

    FreeResolution res;
    res.syzygies.push_back(M);
    res.betti.push_back(M.min_gens());

    std::size_t total = res.betti[0] * n;
    PresentedModule cur = M;
    for (int i = 1; i <= steps; ++i) {
        const auto gens = choose_generators(cur);
        if (gens.empty()) break;  // zero module, resolution has ended
        const std::size_t mu = gens.size();
        const Subspace K = cover_kernel(cur, gens);
        PresentedModule omega = PresentedModule::submodule(M.algebra(), free_actions(A, mu), K);
        if (omega.dim() == 0) break;  // cur was free, the resolution stops here

        const auto next_gens = choose_generators(omega);
        RMatrix P(M.algebra(), mu, next_gens.size());
        for (std::size_t t = 0; t < next_gens.size(); ++t)
            for (std::size_t l = 0; l < mu; ++l) P.at(l, t) = slot(K.basis()[next_gens[t]], l, n);
        assert(P.entries_in_m());

        res.maps.push_back(std::move(P));
        res.betti.push_back(next_gens.size());
        res.syzygies.push_back(omega);
        total += next_gens.size() * n;
        if (total > 100000) throw std::invalid_argument("size guard");
        cur = std::move(omega);
    }

    // consecutive maps compose to zero
    for (std::size_t t = 0; t + 1 < res.maps.size(); ++t)
        assert(res.maps[t].mul(res.maps[t + 1]).is_zero());
    return res;
}

Subspace trace_via_presentation(const PresentedModule& M) {
    const ArtinianAlgebra& A = *M.algebra();
    const std::size_t n = A.dim();
    if (M.dim() == 0) return Subspace(A.field(), n);

    FreeResolution res = minimal_resolution(M, 1);
    const std::size_t b0 = res.betti[0];
    const std::size_t b1 = res.maps.empty() ? 0 : res.maps[0].cols;

    // rows v over R with v * P = 0
    FMatrix sys(A.field(), b1 * n, b0 * n);
    for (std::size_t t = 0; t < b1; ++t)
        for (std::size_t l = 0; l < b0; ++l) {
            const FMatrix mm = A.mult_matrix(res.maps[0].at(l, t));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) sys.at(t * n + r, l * n + c) = mm.at(r, c);
        }
    FMatrix K = nullspace(std::move(sys));

    // the trace is the ideal generated by all entries of the kernel basis
    std::vector<std::vector<i64>> vecs;
    for (std::size_t k = 0; k < K.cols; ++k)
        for (std::size_t l = 0; l < b0; ++l) {
            std::vector<i64> entry(n);
            for (std::size_t r = 0; r < n; ++r) entry[r] = K.at(l * n + r, k);
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<i64> b(n, 0);
                b[i] = 1;
                vecs.push_back(A.mul_elements(b, entry));
            }
        }
    return Subspace::span(A.field(), n, vecs);
}

bool isomorphic_restricted(const PresentedModule& M, const PresentedModule& N) {
    if (M.dim() != N.dim()) return false;
    if (M.min_gens() != N.min_gens()) return false;
    return annihilator(M) == annihilator(N);
}

}  // namespace tracelab
