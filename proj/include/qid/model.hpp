// model.hpp - two-site spin-1 bilinear-biquadratic Hamiltonian with a magnetic
// field along z, its analytic eigensystem, and the field values where levels cross.
//
// Basis conventions (asserted by tests):
//   single site: |0> -> Sz eigenvalue +1, |1> -> 0, |2> -> -1
//   two sites:   row index = 3*m1 + m2 for |m1, m2>, i.e. |0,0>, |0,1>, ..., |2,2>

#pragma once

#include <utility>
#include <vector>

#include "qid/linalg.hpp"
#include "qid/matrix.hpp"

namespace qid {

struct ModelParams {
    double j = 0.0;  // bilinear (Heisenberg) coupling
    double k = 0.0;  // biquadratic coupling
    double bz = 0.0; // magnetic field along z
    bool include_chi = false; // add the constant chi = j - k to the Hamiltonian

    double chi() const { return j - k; }
    void validate() const; // throws InvalidParamError on non-finite entries
};

struct HubbardParams {
    double hop = 0.0; // spin-independent hopping
    double u0 = 0.0;  // repulsion in the total-spin-0 channel
    double u2 = 0.0;  // repulsion in the total-spin-2 channel
};

struct Spin1Operators {
    ComplexMatrix sx, sy, sz;
};

// Standard spin-1 matrices (hbar = 1) in the basis above; sz = diag(+1, 0, -1).
Spin1Operators spin1_operators();

// Effective couplings of the two-site model from Hubbard parameters:
//   J = -2 hop^2 / U2,  K = -2 hop^2 / (3 U2) - 4 hop^2 / U0,  chi = J - K.
// Returns ModelParams with include_chi set. Throws InvalidHubbardParamsError
// when U0 or U2 vanishes.
ModelParams hubbard_couplings(const HubbardParams& h);

// H = chi*I (optional) + J (S1.S2) + K (S1.S2)^2 + Bz (S1z + S2z), 9x9,
// exactly Hermitian (symmetrized to kill rounding).
ComplexMatrix build_hamiltonian(const ModelParams& p);

struct AnalyticEigenpair {
    int label = 0;                         // 1..9, fixed ordering of the closed-form table
    double energy = 0.0;
    std::vector<Complex> vector;           // 9 amplitudes, unit norm
};

// The nine closed-form eigenpairs. Energies are affine in Bz; shifted by chi
// when include_chi is set. Ordering is by label, not by energy.
std::vector<AnalyticEigenpair> analytic_spectrum(const ModelParams& p);

// Unitary matrix whose column k-1 is the label-k analytic eigenvector.
ComplexMatrix analytic_eigenvector_matrix(const ModelParams& p);

// Intercept/slope of each E_i(Bz) = intercept + slope * Bz, label order.
std::vector<std::pair<double, double>> analytic_energy_lines(const ModelParams& p);

struct ResonanceSet {
    std::vector<double> crossings;                 // sorted, deduplicated Bz values
    std::vector<std::pair<int, int>> permanent;    // label pairs degenerate for every Bz
};

// All Bz values where two of the nine affine energy lines cross. Pairs that
// coincide identically for every Bz are reported separately, not as crossings.
// Contains +-(3/2)(K - J) whenever J != K.
ResonanceSet resonance_fields(const ModelParams& p);

} // namespace qid
