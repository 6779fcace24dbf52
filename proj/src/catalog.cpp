#include "tracelab/catalog.hpp"

#include <cstdint>

namespace tracelab {

namespace {

using Mono = Monomial;

struct Shape {
    std::vector<std::string> vars;
    std::vector<Mono> relations;
    std::string label;  // relation list as printed in the entry name
};

std::vector<Shape> catalog_shapes() {
    std::vector<Shape> shapes;
    for (int n = 2; n <= 6; ++n) {
        shapes.push_back({{"x"}, {Mono{n}}, "x^" + std::to_string(n)});
    }
    shapes.push_back({{"x", "y"}, {Mono{2, 0}, Mono{1, 1}, Mono{0, 2}}, "x^2,x*y,y^2"});
    shapes.push_back({{"x", "y"}, {Mono{2, 0}, Mono{0, 2}}, "x^2,y^2"});
    shapes.push_back({{"x", "y"}, {Mono{2, 0}, Mono{0, 3}}, "x^2,y^3"});
    shapes.push_back({{"x", "y"}, {Mono{3, 0}, Mono{1, 1}, Mono{0, 3}}, "x^3,x*y,y^3"});
    shapes.push_back({{"x", "y", "z"},
                      {Mono{2, 0, 0}, Mono{1, 1, 0}, Mono{1, 0, 1}, Mono{0, 2, 0},
                       Mono{0, 1, 1}, Mono{0, 0, 2}},
                      "x^2,x*y,x*z,y^2,y*z,z^2"});
    return shapes;
}

}  // namespace

std::vector<CatalogEntry> algebra_catalog() {
    std::vector<CatalogEntry> out;
    for (i64 p : {i64{2}, i64{101}}) {
        for (const Shape& sh : catalog_shapes()) {
            std::string name = "GF(" + std::to_string(p) + ")[";
            for (std::size_t i = 0; i < sh.vars.size(); ++i) {
                if (i) name += ",";
                name += sh.vars[i];
            }
            name += "]/(" + sh.label + ")";
            out.push_back({name, ArtinianAlgebra::monomial_quotient(p, sh.vars, sh.relations)});
        }
    }
    return out;
}

std::vector<i64> random_element(std::mt19937_64& rng, const ArtinianAlgebra& A) {
    // Mix three regimes so units do not dominate at large p.
    std::vector<i64> v(A.dim(), 0);
    switch (rng() % 3) {
        case 0:
            return v;  // zero
        case 1:
            for (std::size_t i = 1; i < v.size(); ++i)
                v[i] = static_cast<i64>(rng() % static_cast<std::uint64_t>(A.field().p()));
            return v;  // in the maximal ideal
        default:
            for (auto& c : v)
                c = static_cast<i64>(rng() % static_cast<std::uint64_t>(A.field().p()));
            return v;
    }
}

RMatrix random_rmatrix(std::mt19937_64& rng, AlgebraPtr A, std::size_t max_size) {
    std::size_t rows = 1 + rng() % max_size;
    std::size_t cols = 1 + rng() % max_size;
    RMatrix M(A, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M.at(r, c) = random_element(rng, *A);
    return M;
}

PresentedModule random_module(std::mt19937_64& rng, AlgebraPtr A, std::size_t max_size) {
    return PresentedModule::cokernel(random_rmatrix(rng, A, max_size));
}

}  // namespace tracelab
