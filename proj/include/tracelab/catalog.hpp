#pragma once

#include <random>
#include <string>
#include <vector>

#include "tracelab/module.hpp"

namespace tracelab {

struct CatalogEntry {
    std::string name;  // e.g. "GF(2)[x,y]/(x^2,x*y,y^2)"
    AlgebraPtr algebra;
};

/// The fixed algebra catalog: chain rings (x^2)..(x^6), the minimal
/// multiplicity rings, two complete intersections, and a three-variable
/// square-zero ring, each over GF(2) and GF(101).
std::vector<CatalogEntry> algebra_catalog();

/// Uniformly mixed random element: zero, inside m, or arbitrary.
std::vector<i64> random_element(std::mt19937_64& rng, const ArtinianAlgebra& A);

/// Random matrix over the algebra with 1..max_size rows and columns.
RMatrix random_rmatrix(std::mt19937_64& rng, AlgebraPtr A, std::size_t max_size = 3);

/// Random module: cokernel of a random presentation matrix.
PresentedModule random_module(std::mt19937_64& rng, AlgebraPtr A, std::size_t max_size = 3);

}  // namespace tracelab
