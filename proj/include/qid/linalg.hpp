// linalg.hpp - Hermitian eigendecomposition (cyclic Jacobi), Kronecker product,
// partial transpose and trace norm for the small dense matrices used here.

#pragma once

#include <cstddef>
#include <vector>

#include "qid/matrix.hpp"
#include "qid/tolerances.hpp"

namespace qid {

// Eigenvalues ascending; eigenvector k is column k of `eigenvectors`.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    std::size_t dim() const { return eigenvalues.size(); }

    // ||V^dagger V - I||_max
    double orthonormality_residual() const;
    // ||V diag(E) V^dagger - source||_max
    double reconstruction_residual(const ComplexMatrix& source) const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Cyclic Jacobi for complex Hermitian matrices. Converges when the off-diagonal
// Frobenius norm drops below rel_off * ||h||_F, at most max_sweeps sweeps.
// Throws NotHermitianError when ||h - h^dagger||_max > herm_tol, NoConvergenceError
// when the sweep budget is exhausted.
Spectrum hermitian_eig(const ComplexMatrix& h,
                       double herm_tol = tol::hermiticity,
                       double rel_off = tol::jacobi_rel_off,
                       int max_sweeps = tol::jacobi_max_sweeps);

enum class Subsystem { A, B };

// Transposition of one tensor factor of a (dim_a*dim_b)-dimensional bipartite operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                std::size_t dim_b, Subsystem which);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& x, double herm_tol = tol::hermiticity);

} // namespace qid
