// tolerances.hpp - every numerical tolerance in one place.
// Functions take these as defaulted parameters so callers can override per call.

#pragma once

namespace qid::tol {

// Max-abs deviation from h = h^dagger accepted by the eigensolver and state checks.
inline constexpr double hermiticity = 1e-12;

// |trace - 1| accepted for a density matrix.
inline constexpr double trace_one = 1e-12;

// Smallest admissible eigenvalue of a density matrix (absorbs eigensolver rounding).
inline constexpr double psd_floor = -1e-10;

// Orthonormality and reconstruction residuals a Spectrum must satisfy.
inline constexpr double spectrum_residual = 1e-10;

// Jacobi sweep convergence: off-diagonal Frobenius norm relative to the input norm.
inline constexpr double jacobi_rel_off = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;

// Truncated Kraus sum: admissible Poisson weight tail and hard order cap.
inline constexpr double kraus_tail = 1e-14;
inline constexpr int kraus_p_cap = 400;

// RK4 stability guard: dt * (max|dE| + gamma * max dE^2) must stay below this.
inline constexpr double rk4_stability = 0.1;

// Steady-state degeneracy detection, relative to the spectral range.
inline constexpr double deg_tol_rel = 1e-9;

// Default absolute tolerance for approximate matrix comparisons.
inline constexpr double matrix_eq = 1e-12;

} // namespace qid::tol
