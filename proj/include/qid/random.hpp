// random.hpp - seeded generators for the randomized validation suites.

#pragma once

#include <cstdint>
#include <random>

#include "qid/matrix.hpp"
#include "qid/states.hpp"

namespace qid::rng {

using Engine = std::mt19937_64;

inline ComplexMatrix complex_gaussian(Engine& eng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(dist(eng), dist(eng));
    return m;
}

inline ComplexMatrix hermitian(Engine& eng, std::size_t n) {
    return hermitize(complex_gaussian(eng, n, n));
}

// Wishart construction: G G^dagger normalized to unit trace.
inline DensityMatrix density(Engine& eng, std::size_t n) {
    const ComplexMatrix g = complex_gaussian(eng, n, n);
    ComplexMatrix m = g * g.adjoint();
    m *= Complex(1.0 / m.trace().real(), 0.0);
    return DensityMatrix(hermitize(m));
}

} // namespace qid::rng
