#include "qid/dynamics.hpp"

#include <cmath>
#include <utility>

#include "qid/errors.hpp"

namespace qid {

namespace {

const Complex I(0.0, 1.0);

void require_nonnegative_time(double t) {
    if (!(t >= 0.0)) throw NegativeTimeError("time must be >= 0");
}

// rho rotated to the eigenbasis, transformed entrywise, rotated back.
ComplexMatrix map_in_eigenbasis(const ComplexMatrix& rho, const Spectrum& s,
                                const ComplexMatrix& kernel) {
    const ComplexMatrix& v = s.eigenvectors;
    ComplexMatrix r = v.adjoint() * rho * v;
    for (std::size_t k = 0; k < r.rows(); ++k)
        for (std::size_t j = 0; j < r.cols(); ++j) r(k, j) *= kernel(k, j);
    return hermitize(v * r * v.adjoint());
}

} // namespace

Propagator::Propagator(const ComplexMatrix& hamiltonian, double gamma_)
    : spectrum(hermitian_eig(hamiltonian)), gamma(gamma_) {
    if (!(gamma >= 0.0)) throw InvalidParamError("Propagator: gamma must be >= 0");
}

Propagator::Propagator(Spectrum s, double gamma_) : spectrum(std::move(s)), gamma(gamma_) {
    if (!(gamma >= 0.0)) throw InvalidParamError("Propagator: gamma must be >= 0");
}

DensityMatrix evolve(const DensityMatrix& rho0, const Propagator& prop, double t,
                     StateCheck check) {
    require_nonnegative_time(t);
    const std::size_t n = prop.spectrum.dim();
    if (rho0.dim() != n)
        throw DimensionMismatchError("evolve: state and spectrum dimensions differ");

    ComplexMatrix kernel(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const double de = prop.spectrum.eigenvalues[k] - prop.spectrum.eigenvalues[j];
            kernel(k, j) = std::exp(Complex(-0.5 * prop.gamma * t * de * de, -t * de));
        }

    ComplexMatrix out = map_in_eigenbasis(rho0.matrix(), prop.spectrum, kernel);
    return check == StateCheck::validate ? DensityMatrix(std::move(out))
                                         : DensityMatrix::unchecked(std::move(out));
}

int kraus_order(const Propagator& prop, double t, double tail_tol, int cap) {
    require_nonnegative_time(t);
    double emax2 = 0.0;
    for (double e : prop.spectrum.eigenvalues) emax2 = std::max(emax2, e * e);
    const double lambda = prop.gamma * t * emax2;
    if (lambda <= 0.0) return 0;

    // Past the mode the Poisson terms decay at ratio lambda/(p+2) < 1; the
    // remaining tail is bounded by the next term times the geometric sum.
    for (int p = std::max(0, static_cast<int>(std::ceil(lambda))); p <= cap; ++p) {
        const double ratio = lambda / (p + 2.0);
        if (ratio >= 1.0) continue;
        const double log_next = (p + 1) * std::log(lambda) - std::lgamma(p + 2.0) - lambda;
        if (std::exp(log_next) / (1.0 - ratio) <= tail_tol) return p;
    }
    throw TailNotConvergedError("kraus_order: Poisson tail does not converge below cap");
}

KrausSet kraus_operators(const Propagator& prop, double t, int p_max) {
    require_nonnegative_time(t);
    if (p_max < 0) throw InvalidParamError("kraus_operators: p_max must be >= 0");

    const std::size_t n = prop.spectrum.dim();
    const ComplexMatrix& v = prop.spectrum.eigenvectors;
    const double gt = prop.gamma * t;

    KrausSet ks;
    ks.ops.reserve(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        ComplexMatrix diag(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const double e = prop.spectrum.eigenvalues[k];
            double mag;
            double sign = 1.0;
            if (p == 0) {
                mag = std::exp(-0.5 * gt * e * e);
            } else if (gt == 0.0 || e == 0.0) {
                mag = 0.0;
            } else {
                // sqrt((gamma t)^p / p!) |E|^p exp(-(gamma t / 2) E^2) in log space
                mag = std::exp(0.5 * (p * std::log(gt) - std::lgamma(p + 1.0))
                               + p * std::log(std::abs(e)) - 0.5 * gt * e * e);
                if (e < 0.0 && (p % 2) != 0) sign = -1.0;
            }
            diag(k, k) = sign * mag * std::exp(Complex(0.0, -e * t));
        }
        ks.ops.push_back(v * diag * v.adjoint());
    }

    ComplexMatrix sum(n, n);
    for (const auto& m : ks.ops) sum += m.adjoint() * m;
    ks.completeness_defect = max_abs_diff(sum, ComplexMatrix::identity(n));
    return ks;
}

ComplexMatrix apply_kraus(const KrausSet& ks, const ComplexMatrix& rho) {
    if (ks.ops.empty()) throw InvalidParamError("apply_kraus: empty operator set");
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto& m : ks.ops) out += m * rho * m.adjoint();
    return out;
}

ComplexMatrix rhs_master(const ComplexMatrix& rho, const ComplexMatrix& h, double gamma) {
    if (rho.rows() != h.rows() || rho.cols() != h.cols() || !rho.square())
        throw DimensionMismatchError("rhs_master: shapes differ");
    const ComplexMatrix c1 = commutator(h, rho);
    return (-I) * c1 - (0.5 * gamma) * commutator(h, c1);
}

DensityMatrix integrate_master(const DensityMatrix& rho0, const ComplexMatrix& h,
                               double gamma, double t_end, double dt, StateCheck check) {
    require_nonnegative_time(t_end);
    if (!(dt > 0.0)) throw InvalidParamError("integrate_master: dt must be > 0");

    // Stability guard in terms of the spectral range of H (the commutator
    // frequencies are eigenvalue differences).
    {
        const Spectrum s = hermitian_eig(h);
        const double de_max = s.eigenvalues.back() - s.eigenvalues.front();
        if (dt * (de_max + gamma * de_max * de_max) > tol::rk4_stability)
            throw StepTooLargeError("integrate_master: dt too large for spectral range");
    }

    ComplexMatrix rho = rho0.matrix();
    double t = 0.0;
    while (t < t_end) {
        const double step = std::min(dt, t_end - t);
        const ComplexMatrix k1 = rhs_master(rho, h, gamma);
        const ComplexMatrix k2 = rhs_master(rho + 0.5 * step * k1, h, gamma);
        const ComplexMatrix k3 = rhs_master(rho + 0.5 * step * k2, h, gamma);
        const ComplexMatrix k4 = rhs_master(rho + step * k3, h, gamma);
        rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += step;
    }
    rho = hermitize(rho);
    return check == StateCheck::validate ? DensityMatrix(std::move(rho))
                                         : DensityMatrix::unchecked(std::move(rho));
}

double default_deg_tol(const Spectrum& s) {
    const double range = s.eigenvalues.back() - s.eigenvalues.front();
    return tol::deg_tol_rel * range;
}

DensityMatrix steady_state(const DensityMatrix& rho0, const Propagator& prop,
                           double deg_tol) {
    if (prop.gamma == 0.0)
        throw NoSteadyStateError("steady_state: no steady state for gamma = 0");
    if (deg_tol == 0.0) throw InvalidParamError("steady_state: deg_tol must be positive");
    if (deg_tol < 0.0) deg_tol = default_deg_tol(prop.spectrum);

    const std::size_t n = prop.spectrum.dim();
    if (rho0.dim() != n)
        throw DimensionMismatchError("steady_state: state and spectrum dimensions differ");

    ComplexMatrix kernel(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const double de = prop.spectrum.eigenvalues[k] - prop.spectrum.eigenvalues[j];
            kernel(k, j) = (std::abs(de) <= deg_tol) ? 1.0 : 0.0;
        }
    return DensityMatrix(map_in_eigenbasis(rho0.matrix(), prop.spectrum, kernel));
}

AnalyticFactors analytic_factors(const ModelParams& mp, double gamma, double t) {
    mp.validate();
    const double w = mp.j - mp.k;
    const double b = mp.bz;
    const double g = gamma;

    AnalyticFactors f;
    f.a = std::exp(Complex(-2.0 * b * b * g * t, -2.0 * b * t));
    const double wp = 2.0 * b + 3.0 * w;
    const double wm = 2.0 * b - 3.0 * w;
    f.b = std::exp(Complex(-0.5 * g * t * wp * wp, -t * wp));
    f.c = std::exp(Complex(-0.5 * g * t * wm * wm, -t * wm));
    // Real part must decay for the factor to solve the master equation.
    f.d = std::exp(Complex(-4.5 * g * t * w * w, 3.0 * t * w));
    f.eps = std::exp(Complex(0.0, 6.0 * t * w));
    return f;
}

ComplexMatrix analytic_rho_computational(const ModelParams& mp, double p,
                                         double gamma, double t) {
    const AnalyticFactors f = analytic_factors(mp, gamma, t);
    const double b = mp.bz;
    const Complex f19 = std::exp(Complex(-8.0 * b * b * gamma * t, -4.0 * b * t));
    const double re_d = f.d.real();

    ComplexMatrix m(9, 9);
    // constant diagonal entries
    m(0, 0) = (2.0 * p + 1.0) / 9.0;
    m(8, 8) = (2.0 * p + 1.0) / 9.0;
    for (std::size_t i : {1, 3, 5, 7}) m(i, i) = (1.0 - p) / 9.0;
    // diagonal entries carrying the d factor
    m(2, 2) = ((3.0 - p) - 2.0 * p * re_d) / 27.0;
    m(6, 6) = m(2, 2);
    m(4, 4) = ((3.0 + 2.0 * p) + 4.0 * p * re_d) / 27.0;
    // upper triangle of the coupled subspace {1,3,5,7,9} (1-based)
    m(0, 2) = p / 9.0 * (f.a - f.b);
    m(0, 6) = m(0, 2);
    m(0, 4) = p / 9.0 * (2.0 * f.a + f.b);
    m(0, 8) = p / 3.0 * f19;
    m(2, 8) = p / 9.0 * (f.a - f.c);
    m(6, 8) = m(2, 8);
    m(4, 8) = p / 9.0 * (2.0 * f.a + f.c);
    m(2, 4) = p / 27.0 * (1.0 - 2.0 * f.d + std::conj(f.d));
    m(4, 6) = std::conj(m(2, 4));
    m(2, 6) = p / 27.0 * (2.0 - 2.0 * re_d);
    // Hermitian fill
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = r + 1; c < 9; ++c) m(c, r) = std::conj(m(r, c));
    return m;
}

ComplexMatrix analytic_rho_energy_basis(const ModelParams& mp, double p,
                                        double gamma, double t) {
    const AnalyticFactors f = analytic_factors(mp, gamma, t);
    const double b = mp.bz;
    const Complex f69 = std::exp(Complex(-8.0 * b * b * gamma * t, 4.0 * b * t));

    ComplexMatrix m(9, 9);
    // diagonal: constant in time, set by the initial mixing weight alone
    m(0, 0) = 1.0 / 9.0;
    for (std::size_t i : {1, 2, 3, 6, 7}) m(i, i) = (1.0 - p) / 9.0;
    m(4, 4) = (1.0 + p) / 9.0;
    m(5, 5) = (2.0 * p + 1.0) / 9.0;
    m(8, 8) = (2.0 * p + 1.0) / 9.0;
    // the 4x4 coupled block on labels {1,5,6,9}
    const double s23 = std::sqrt(2.0 / 3.0);
    m(0, 4) = -std::sqrt(2.0) * p / 9.0 * f.d;
    m(0, 5) = -p / (3.0 * std::sqrt(3.0)) * f.c;
    m(0, 8) = -p / (3.0 * std::sqrt(3.0)) * std::conj(f.b);
    m(4, 5) = p / 3.0 * s23 * f.a;
    m(4, 8) = p / 3.0 * s23 * std::conj(f.a);
    m(5, 8) = p / 3.0 * f69;
    for (std::size_t r = 0; r < 9; ++r)
        for (std::size_t c = r + 1; c < 9; ++c) m(c, r) = std::conj(m(r, c));
    return m;
}

} // namespace qid
