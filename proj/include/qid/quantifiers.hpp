// quantifiers.hpp - l1-norm coherence, entanglement negativity and linear
// entropy, each with a closed form for the evolved isotropic state.

#pragma once

#include <cstddef>

#include "qid/linalg.hpp"
#include "qid/model.hpp"
#include "qid/states.hpp"

namespace qid {

// Sum of |rho_ij| over i != j in the computational basis (the fixed reference
// basis; no alternative basis is accepted).
double l1_coherence(const DensityMatrix& rho);

// Closed form of l1_coherence(evolve(isotropic_state(p), t)) in the factors
// a, b, c, d; equals the generic pipeline within accumulated rounding.
double l1_coherence_closed(const ModelParams& mp, double p, double gamma, double t);

// Sum of |negative eigenvalues| of the partial transpose; equivalently
// (||rho^Gamma||_1 - 1)/2, and independent of which subsystem is transposed.
double negativity(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                  Subsystem which = Subsystem::A);

// (N/(N-1)) (1 - Tr rho^2), in [0, 1].
double linear_entropy(const DensityMatrix& rho);

// Closed form of linear_entropy(evolve(isotropic_state(p), t)): five decaying
// exponentials plus a constant.
double linear_entropy_closed(const ModelParams& mp, double p, double gamma, double t);

} // namespace qid
