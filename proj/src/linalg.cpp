#include "qid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qid {

double Spectrum::orthonormality_residual() const {
    const std::size_t n = dim();
    return max_abs_diff(eigenvectors.adjoint() * eigenvectors, ComplexMatrix::identity(n));
}

double Spectrum::reconstruction_residual(const ComplexMatrix& source) const {
    const std::size_t n = dim();
    ComplexMatrix vd = eigenvectors; // V * diag(E)
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) vd(r, c) *= eigenvalues[c];
    return max_abs_diff(vd * eigenvectors.adjoint(), source);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Complex f = a(ra, ca);
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    m(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
        }
    return m;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One two-sided rotation zeroing the (p, q) entry, eigenvectors accumulated in v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex beta = a(p, q);
    const double babs = std::abs(beta);
    if (babs == 0.0) return;

    const Complex u = beta / babs; // unit phase of the pivot
    const double alpha = a(p, p).real();
    const double delta = a(q, q).real();
    const double tau = (delta - alpha) / (2.0 * babs);
    // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0.
    const double sgn = (tau >= 0.0) ? 1.0 : -1.0;
    const double t = -sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Columns: A <- A U with U = [[c, -s u], [s conj(u), c]] on (p, q).
    for (std::size_t r = 0; r < n; ++r) {
        const Complex ap = a(r, p), aq = a(r, q);
        a(r, p) = c * ap + s * std::conj(u) * aq;
        a(r, q) = -s * u * ap + c * aq;
    }
    // Rows: A <- U^dagger A.
    for (std::size_t col = 0; col < n; ++col) {
        const Complex ap = a(p, col), aq = a(q, col);
        a(p, col) = c * ap + s * u * aq;
        a(q, col) = -s * std::conj(u) * ap + c * aq;
    }
    // Eigenvectors: V <- V U.
    for (std::size_t r = 0; r < n; ++r) {
        const Complex vp = v(r, p), vq = v(r, q);
        v(r, p) = c * vp + s * std::conj(u) * vq;
        v(r, q) = -s * u * vp + c * vq;
    }
    // The pivot is zero by construction; diagonal entries stay real.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

} // namespace

Spectrum hermitian_eig(const ComplexMatrix& h, double herm_tol, double rel_off,
                       int max_sweeps) {
    if (!h.square()) throw DimensionMismatchError("hermitian_eig: matrix not square");
    if (hermiticity_defect(h) > herm_tol)
        throw NotHermitianError("hermitian_eig: matrix not Hermitian within tolerance");

    const std::size_t n = h.rows();
    ComplexMatrix a = hermitize(h); // exact symmetrization before iterating
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = rel_off * a.frobenius();
    bool converged = off_diagonal_frobenius(a) <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        converged = off_diagonal_frobenius(a) <= threshold;
    }
    if (!converged)
        throw NoConvergenceError("hermitian_eig: Jacobi sweeps exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        s.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) s.eigenvectors(r, c) = v(r, order[c]);
    }
    return s;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a,
                                std::size_t dim_b, Subsystem which) {
    const std::size_t n = dim_a * dim_b;
    if (!rho.square() || rho.rows() != n)
        throw DimensionMismatchError("partial_transpose: rho must be (dim_a*dim_b) square");

    ComplexMatrix out(n, n);
    for (std::size_t ra = 0; ra < dim_a; ++ra)
        for (std::size_t rb = 0; rb < dim_b; ++rb)
            for (std::size_t ca = 0; ca < dim_a; ++ca)
                for (std::size_t cb = 0; cb < dim_b; ++cb) {
                    const std::size_t r = ra * dim_b + rb;
                    const std::size_t c = ca * dim_b + cb;
                    if (which == Subsystem::A)
                        out(ca * dim_b + rb, ra * dim_b + cb) = rho(r, c);
                    else
                        out(ra * dim_b + cb, ca * dim_b + rb) = rho(r, c);
                }
    return out;
}

double trace_norm(const ComplexMatrix& x, double herm_tol) {
    const Spectrum s = hermitian_eig(x, herm_tol);
    double sum = 0.0;
    for (double e : s.eigenvalues) sum += std::abs(e);
    return sum;
}

} // namespace qid
