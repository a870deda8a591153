#include "qid/quantifiers.hpp"

#include <cmath>

#include "qid/dynamics.hpp"
#include "qid/errors.hpp"

namespace qid {

double l1_coherence(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (r != c) s += std::abs(m(r, c));
    return s;
}

double l1_coherence_closed(const ModelParams& mp, double p, double gamma, double t) {
    const AnalyticFactors f = analytic_factors(mp, gamma, t);
    const double b = mp.bz;
    // |1,9| element keeps the doubled field frequency; the d block contributes
    // one time-independent term per element, which survives as t -> infinity.
    const double t19 = std::exp(-8.0 * b * b * gamma * t);
    return p / 27.0 *
           (12.0 * std::abs(f.a - f.b) + 6.0 * std::abs(2.0 * f.a + f.b)
            + 12.0 * std::abs(f.a - f.c) + 6.0 * std::abs(2.0 * f.a + f.c)
            + 18.0 * t19
            + 4.0 * std::abs(1.0 - 2.0 * f.d + std::conj(f.d))
            + 2.0 * (2.0 - 2.0 * f.d.real()));
}

double negativity(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                  Subsystem which) {
    if (dim_a * dim_b != rho.dim())
        throw DimensionMismatchError("negativity: subsystem dimensions do not factor the state");
    const ComplexMatrix pt = partial_transpose(rho.matrix(), dim_a, dim_b, which);
    const Spectrum s = hermitian_eig(pt);
    double neg = 0.0;
    for (double e : s.eigenvalues) neg += std::max(0.0, -e);
    return neg;
}

double linear_entropy(const DensityMatrix& rho) {
    const double n = static_cast<double>(rho.dim());
    return n / (n - 1.0) * (1.0 - rho.purity());
}

double linear_entropy_closed(const ModelParams& mp, double p, double gamma, double t) {
    mp.validate();
    const double w = mp.j - mp.k;
    const double b = mp.bz;
    const double g = gamma;
    const double wp = 2.0 * b + 3.0 * w;
    const double wm = 2.0 * b - 3.0 * w;
    return 1.0 + p * p / 36.0 *
                     (-9.0 * std::exp(-16.0 * b * b * g * t)
                      - 12.0 * std::exp(-4.0 * b * b * g * t)
                      - 3.0 * std::exp(-g * t * wp * wp)
                      - 3.0 * std::exp(-g * t * wm * wm)
                      - 2.0 * std::exp(-9.0 * g * t * w * w) - 7.0);
}

} // namespace qid
