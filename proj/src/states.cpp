#include "qid/states.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qid/errors.hpp"
#include "qid/linalg.hpp"

namespace qid {

void DensityMatrix::check(const ComplexMatrix& m, double herm_tol, double trace_tol,
                          double psd_floor) {
    if (!m.square() || m.rows() == 0)
        throw InvalidStateError("density matrix must be square and non-empty");
    const double hd = hermiticity_defect(m);
    if (hd > herm_tol) {
        std::ostringstream os;
        os << "density matrix not Hermitian: defect " << hd;
        throw InvalidStateError(os.str());
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > trace_tol) {
        std::ostringstream os;
        os << "density matrix trace " << tr.real() << " != 1";
        throw InvalidStateError(os.str());
    }
    const Spectrum s = hermitian_eig(m, herm_tol * 10.0);
    if (s.eigenvalues.front() < psd_floor) {
        std::ostringstream os;
        os << "density matrix not positive: min eigenvalue " << s.eigenvalues.front();
        throw InvalidStateError(os.str());
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double herm_tol, double trace_tol,
                             double psd_floor)
    : m_(std::move(m)) {
    check(m_, herm_tol, trace_tol, psd_floor);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
    return DensityMatrix(std::move(m), Unchecked{});
}

double DensityMatrix::purity() const {
    // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho
    double s = 0.0;
    for (const auto& x : m_.entries()) s += std::norm(x);
    return s;
}

DensityMatrix max_entangled_qutrit() {
    ComplexMatrix m(9, 9);
    const std::size_t diag[] = {0, 4, 8}; // |0,0>, |1,1>, |2,2>
    for (std::size_t r : diag)
        for (std::size_t c : diag) m(r, c) = 1.0 / 3.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix isotropic_state(const IsotropicParams& q) {
    if (!(q.p >= 0.0 && q.p <= 1.0))
        throw InvalidMixingWeightError("isotropic_state: p must lie in [0, 1]");
    ComplexMatrix m = (1.0 - q.p) / 9.0 * ComplexMatrix::identity(9);
    const std::size_t diag[] = {0, 4, 8};
    for (std::size_t r : diag)
        for (std::size_t c : diag) m(r, c) += q.p / 3.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix isotropic_state(double p) { return isotropic_state(IsotropicParams{p}); }

double werner_negativity(double p) {
    return 3.0 * std::max(0.0, (4.0 * p - 1.0) / 9.0);
}

double werner_linear_entropy(double p) { return 1.0 - p * p; }

} // namespace qid
