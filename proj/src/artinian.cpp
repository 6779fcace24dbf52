#include "tracelab/artinian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tracelab {

namespace {

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Total degree first, then reverse lexicographic on exponents, so that
// within a degree the monomial with the larger exponent on an earlier
// variable comes first: 1, x, y, x^2, xy, y^2.
bool basis_order(const Monomial& a, const Monomial& b) {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
}

}  // namespace

AlgebraPtr ArtinianAlgebra::monomial_quotient(i64 p, std::vector<std::string> vars,
                                              std::vector<Monomial> relations) {
    if (vars.empty()) throw std::invalid_argument("empty input");
    for (const auto& r : relations) {
        if (r.size() != vars.size()) throw std::invalid_argument("relation arity mismatch");
        if (degree(r) == 0) throw std::invalid_argument("unit relation");
    }

    // pure-power caps; missing cap for a variable means infinite dimension
    const std::size_t v = vars.size();
    std::vector<int> cap(v, -1);
    for (const auto& r : relations)
        for (std::size_t i = 0; i < v; ++i)
            if (r[i] > 0 && degree(r) == r[i])
                cap[i] = cap[i] < 0 ? r[i] : std::min(cap[i], r[i]);
    for (std::size_t i = 0; i < v; ++i)
        if (cap[i] < 0) throw std::invalid_argument("not Artinian");

    std::shared_ptr<ArtinianAlgebra> A(new ArtinianAlgebra(PrimeField(p)));
    A->vars_ = std::move(vars);
    A->relations_ = relations;

    // standard monomials are downward closed under divisibility, so expand
    // outward from 1 and stop at the guard
    std::set<Monomial> seen;
    std::vector<Monomial> basis = {Monomial(v, 0)};
    seen.insert(basis[0]);
    for (std::size_t head = 0; head < basis.size(); ++head) {
        for (std::size_t t = 0; t < v; ++t) {
            Monomial next = basis[head];
            ++next[t];
            if (seen.count(next)) continue;
            bool standard = true;
            for (const auto& r : relations)
                if (divides(r, next)) {
                    standard = false;
                    break;
                }
            if (!standard) continue;
            seen.insert(next);
            basis.push_back(std::move(next));
            if (basis.size() > 200) throw std::invalid_argument("size guard");
        }
    }
    std::sort(basis.begin(), basis.end(), basis_order);
    A->basis_ = std::move(basis);

    const std::size_t n = A->basis_.size();
    assert(degree(A->basis_[0]) == 0);

    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[A->basis_[i]] = i;

    A->table_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Monomial prod(v);
            for (std::size_t t = 0; t < v; ++t) prod[t] = A->basis_[i][t] + A->basis_[j][t];
            bool dead = false;
            for (const auto& r : relations)
                if (divides(r, prod)) {
                    dead = true;
                    break;
                }
            if (!dead) {
                auto it = index.find(prod);
                assert(it != index.end());
                A->table_[i * n + j] = static_cast<i64>(it->second);
            }
        }

    // the table is symmetric and associative by construction; spot-assert on
    // small rings
    if (n <= 60) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                assert(A->table_[i * n + j] == A->table_[j * n + i]);
                for (std::size_t k = 0; k < n; ++k) {
                    const i64 ij = A->table_[i * n + j];
                    const i64 jk = A->table_[j * n + k];
                    const i64 l = ij < 0 ? -1 : A->table_[static_cast<std::size_t>(ij) * n + k];
                    const i64 r = jk < 0 ? -1 : A->table_[i * n + static_cast<std::size_t>(jk)];
                    assert(l == r);
                    (void)l;
                    (void)r;
                }
            }
    }

    for (std::size_t j = 0; j < v; ++j) {
        Monomial xj(v, 0);
        xj[j] = 1;
        A->var_actions_.push_back(A->mult_matrix(A->monomial_element(xj)));
    }

    std::vector<std::vector<i64>> nonunit;
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<i64> e(n, 0);
        e[i] = 1;
        nonunit.push_back(std::move(e));
    }
    A->max_ideal_ = Subspace::span(A->F_, n, nonunit);

    // socle = common kernel of the variable actions
    FMatrix stacked(A->F_, v * n, n);
    for (std::size_t j = 0; j < v; ++j)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                stacked.at(j * n + r, c) = A->var_actions_[j].at(r, c);
    FMatrix K = nullspace(std::move(stacked));
    std::vector<std::vector<i64>> socle_vecs;
    for (std::size_t k = 0; k < K.cols; ++k) {
        std::vector<i64> vcol(n);
        for (std::size_t r = 0; r < n; ++r) vcol[r] = K.at(r, k);
        socle_vecs.push_back(std::move(vcol));
    }
    A->socle_ = Subspace::span(A->F_, n, socle_vecs);

    return A;
}

i64 ArtinianAlgebra::basis_index(const Monomial& m) const {
    for (const auto& r : relations_)
        if (divides(r, m)) return -1;
    auto it = std::find(basis_.begin(), basis_.end(), m);
    assert(it != basis_.end());
    return static_cast<i64>(it - basis_.begin());
}

std::vector<i64> ArtinianAlgebra::one_element() const {
    auto e = zero_element();
    e[0] = 1;
    return e;
}

std::vector<i64> ArtinianAlgebra::monomial_element(const Monomial& m) const {
    auto e = zero_element();
    const i64 idx = basis_index(m);
    if (idx >= 0) e[static_cast<std::size_t>(idx)] = 1;
    return e;
}

std::vector<i64> ArtinianAlgebra::var_element(std::size_t j) const {
    Monomial m(nvars(), 0);
    m[j] = 1;
    return monomial_element(m);
}

std::vector<i64> ArtinianAlgebra::mul_elements(const std::vector<i64>& u,
                                               const std::vector<i64>& v) const {
    const std::size_t n = dim();
    std::vector<i64> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!v[j]) continue;
            const i64 k = table_[i * n + j];
            if (k >= 0)
                out[static_cast<std::size_t>(k)] =
                    F_.add(out[static_cast<std::size_t>(k)], F_.mul(u[i], v[j]));
        }
    }
    return out;
}

FMatrix ArtinianAlgebra::mult_matrix(const std::vector<i64>& u) const {
    const std::size_t n = dim();
    FMatrix M(F_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        // column j = u * basis_j
        for (std::size_t i = 0; i < n; ++i) {
            if (!u[i]) continue;
            const i64 k = table_[i * n + j];
            if (k >= 0)
                M.at(static_cast<std::size_t>(k), j) =
                    F_.add(M.at(static_cast<std::size_t>(k), j), u[i]);
        }
    }
    return M;
}

Subspace ArtinianAlgebra::ideal_power(int n) const {
    std::vector<std::vector<i64>> gens;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::vector<i64> e(dim(), 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    Subspace cur = Subspace::span(F_, dim(), gens);
    for (int step = 0; step < n; ++step) {
        std::vector<std::vector<i64>> next;
        for (const auto& b : cur.basis())
            for (std::size_t i = 1; i < dim(); ++i) {
                std::vector<i64> e(dim(), 0);
                e[i] = 1;
                next.push_back(mul_elements(b, e));
            }
        cur = Subspace::span(F_, dim(), next);
    }
    return cur;
}

bool ArtinianAlgebra::is_pir() const { return embedding_dimension() <= 1; }

bool ArtinianAlgebra::has_minimal_multiplicity() const { return ideal_power(2).dim() == 0; }

std::size_t ArtinianAlgebra::embedding_dimension() const {
    return maximal_ideal().dim() - ideal_power(2).dim();
}

std::string ArtinianAlgebra::monomial_string(const Monomial& m) const {
    if (degree(m) == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first) os << "*";
        os << vars_[i];
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    return os.str();
}

std::string ArtinianAlgebra::element_string(const std::vector<i64>& u) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!u[i]) continue;
        if (!first) os << " + ";
        if (u[i] != 1 || degree(basis_[i]) == 0) {
            os << u[i];
            if (degree(basis_[i]) > 0) os << "*";
        }
        if (degree(basis_[i]) > 0) os << monomial_string(basis_[i]);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace tracelab
