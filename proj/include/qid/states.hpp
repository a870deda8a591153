// states.hpp - validated density matrices and the two-qutrit isotropic family.

#pragma once

#include <cstddef>

#include "qid/matrix.hpp"
#include "qid/tolerances.hpp"

namespace qid {

// Hermitian, unit-trace, positive-semidefinite matrix. Validation runs on
// construction; hot loops can skip it through the unchecked factory.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m,
                           double herm_tol = tol::hermiticity,
                           double trace_tol = tol::trace_one,
                           double psd_floor = tol::psd_floor);

    static DensityMatrix unchecked(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

    // Tr rho^2, in [1/dim, 1].
    double purity() const;

    // Throws InvalidStateError describing the first violated property.
    static void check(const ComplexMatrix& m,
                      double herm_tol = tol::hermiticity,
                      double trace_tol = tol::trace_one,
                      double psd_floor = tol::psd_floor);

private:
    struct Unchecked {};
    DensityMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

    ComplexMatrix m_;
};

struct IsotropicParams {
    double p = 0.0; // mixing weight in [0, 1]
};

// Projector onto (|0,0> + |1,1> + |2,2>)/sqrt(3).
DensityMatrix max_entangled_qutrit();

// (1-p)/9 * I_9 + p |psi><psi|. Throws InvalidMixingWeightError outside [0, 1].
DensityMatrix isotropic_state(const IsotropicParams& q);
DensityMatrix isotropic_state(double p);

// Closed-form negativity of the isotropic state: 3 * max{0, (4p - 1)/9}.
double werner_negativity(double p);

// Closed-form linear entropy of the isotropic state: 1 - p^2.
double werner_linear_entropy(double p);

} // namespace qid
