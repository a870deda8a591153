// dynamics.hpp - intrinsic-decoherence evolution of a finite-dimensional state.
//
// Three independent realizations of the same channel are provided:
//   evolve           exact eigenbasis propagator (damping-phase kernel)
//   kraus_operators  truncated operator-sum representation
//   integrate_master RK4 integration of drho/dt = -i[H,rho] - (gamma/2)[H,[H,rho]]
// plus the t -> infinity steady-state projector and closed-form two-qutrit
// solutions of the isotropic initial state in both bases.

#pragma once

#include <vector>

#include "qid/linalg.hpp"
#include "qid/matrix.hpp"
#include "qid/model.hpp"
#include "qid/states.hpp"
#include "qid/tolerances.hpp"

namespace qid {

// Immutable after construction; evolving at many times reuses the one
// eigendecomposition and is safe to run concurrently.
struct Propagator {
    Spectrum spectrum;
    double gamma = 0.0; // intrinsic decoherence rate, >= 0; 0 recovers unitary evolution

    Propagator(const ComplexMatrix& hamiltonian, double gamma);
    Propagator(Spectrum s, double gamma);
};

enum class StateCheck { validate, skip };

// rho(t)_kj = exp(-(gamma t / 2)(E_k - E_j)^2 - i t (E_k - E_j)) rho(0)_kj in the
// eigenbasis; trace and Hermiticity are preserved exactly.
DensityMatrix evolve(const DensityMatrix& rho0, const Propagator& prop, double t,
                     StateCheck check = StateCheck::validate);

struct KrausSet {
    std::vector<ComplexMatrix> ops;   // M_0 .. M_pmax
    double completeness_defect = 0.0; // ||sum M^dagger M - I||_max
};

// Smallest truncation order with Poisson weight tail (lambda = gamma t max E^2)
// below tail_tol; bounded by a geometric-series estimate past the mode.
// Throws TailNotConvergedError beyond the cap.
int kraus_order(const Propagator& prop, double t,
                double tail_tol = tol::kraus_tail, int cap = tol::kraus_p_cap);

// M_p(t) = sqrt((gamma t)^p / p!) H^p exp(-iHt) exp(-(gamma t / 2) H^2),
// each built in the eigenbasis (log-space magnitudes, no overflow).
KrausSet kraus_operators(const Propagator& prop, double t, int p_max);

// sum_p M_p rho M_p^dagger
ComplexMatrix apply_kraus(const KrausSet& ks, const ComplexMatrix& rho);

// -i[H, rho] - (gamma/2)[H, [H, rho]]
ComplexMatrix rhs_master(const ComplexMatrix& rho, const ComplexMatrix& h, double gamma);

// Classical RK4 with fixed step dt; a final shorter step lands exactly on t_end.
// Guards dt * (max|dE| + gamma max dE^2) <= 0.1 and throws StepTooLargeError.
DensityMatrix integrate_master(const DensityMatrix& rho0, const ComplexMatrix& h,
                               double gamma, double t_end, double dt,
                               StateCheck check = StateCheck::validate);

// deg_tol used when none is given: relative to the spectral range.
double default_deg_tol(const Spectrum& s);

// t -> infinity limit: keep eigenbasis entries with |E_k - E_j| <= deg_tol, zero
// the rest. Independent of gamma by construction; requires gamma > 0 (a steady
// state does not exist for unitary evolution), else NoSteadyStateError.
DensityMatrix steady_state(const DensityMatrix& rho0, const Propagator& prop,
                           double deg_tol = -1.0 /* auto */);

// Scalar factors of the closed-form isotropic-state solution. All damping
// exponents are negative (|a|,|b|,|c|,|d| <= 1, |eps| = 1 for gamma, t >= 0);
// the growing-sign variant of d does not solve the master equation and is
// rejected by the validation suite.
struct AnalyticFactors {
    Complex a, b, c, d, eps;
};

AnalyticFactors analytic_factors(const ModelParams& mp, double gamma, double t);

// Closed-form evolved isotropic state in the computational basis, 9x9.
ComplexMatrix analytic_rho_computational(const ModelParams& mp, double p,
                                         double gamma, double t);

// Same state in the eigenbasis (label order 1..9): a 4x4 block on labels
// {1,5,6,9} plus constant diagonal entries elsewhere.
ComplexMatrix analytic_rho_energy_basis(const ModelParams& mp, double p,
                                        double gamma, double t);

} // namespace qid
