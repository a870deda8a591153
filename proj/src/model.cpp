#include "qid/model.hpp"

#include <algorithm>
#include <cmath>

#include "qid/errors.hpp"

namespace qid {

void ModelParams::validate() const {
    if (!std::isfinite(j) || !std::isfinite(k) || !std::isfinite(bz))
        throw InvalidParamError("ModelParams: couplings and field must be finite");
}

Spin1Operators spin1_operators() {
    const double r = 1.0 / std::sqrt(2.0);
    Spin1Operators ops{ComplexMatrix(3, 3), ComplexMatrix(3, 3), ComplexMatrix(3, 3)};
    ops.sx(0, 1) = r; ops.sx(1, 0) = r; ops.sx(1, 2) = r; ops.sx(2, 1) = r;
    ops.sy(0, 1) = Complex(0.0, -r); ops.sy(1, 0) = Complex(0.0, r);
    ops.sy(1, 2) = Complex(0.0, -r); ops.sy(2, 1) = Complex(0.0, r);
    ops.sz(0, 0) = 1.0; ops.sz(2, 2) = -1.0;
    return ops;
}

ModelParams hubbard_couplings(const HubbardParams& h) {
    if (h.u0 == 0.0 || h.u2 == 0.0)
        throw InvalidHubbardParamsError("hubbard_couplings: U0 and U2 must be nonzero");
    const double t2 = h.hop * h.hop;
    ModelParams p;
    p.j = -2.0 * t2 / h.u2;
    p.k = -2.0 * t2 / (3.0 * h.u2) - 4.0 * t2 / h.u0;
    p.include_chi = true;
    return p;
}

ComplexMatrix build_hamiltonian(const ModelParams& p) {
    p.validate();
    const auto ops = spin1_operators();
    const ComplexMatrix id3 = ComplexMatrix::identity(3);

    ComplexMatrix dot = kron(ops.sx, ops.sx) + kron(ops.sy, ops.sy) + kron(ops.sz, ops.sz);
    ComplexMatrix h = p.j * dot + p.k * (dot * dot)
                    + p.bz * (kron(ops.sz, id3) + kron(id3, ops.sz));
    if (p.include_chi) h += p.chi() * ComplexMatrix::identity(9);
    return hermitize(h);
}

namespace {

// Two-site computational index for |m1, m2> with labels in {0, 1, 2}.
constexpr std::size_t idx(std::size_t m1, std::size_t m2) { return 3 * m1 + m2; }

struct TableRow {
    double intercept_j; // coefficient of J in the Bz-independent part
    double intercept_k; // coefficient of K
    double slope;       // coefficient of Bz
    std::vector<std::pair<std::size_t, double>> amplitudes;
};

// The nine closed-form eigenpairs; amplitudes are real in this basis.
const std::vector<TableRow>& table() {
    static const double s2 = 1.0 / std::sqrt(2.0);
    static const double s3 = 1.0 / std::sqrt(3.0);
    static const double s6 = 1.0 / std::sqrt(6.0);
    static const std::vector<TableRow> rows = {
        {-2.0, 4.0, 0.0, {{idx(2, 0), s3}, {idx(1, 1), -s3}, {idx(0, 2), s3}}},
        {-1.0, 1.0, 0.0, {{idx(2, 0), s2}, {idx(0, 2), -s2}}},
        {-1.0, 1.0, -1.0, {{idx(1, 2), s2}, {idx(2, 1), -s2}}},
        {-1.0, 1.0, 1.0, {{idx(0, 1), s2}, {idx(1, 0), -s2}}},
        {1.0, 1.0, 0.0, {{idx(2, 0), s6}, {idx(1, 1), 2.0 * s6}, {idx(0, 2), s6}}},
        {1.0, 1.0, -2.0, {{idx(2, 2), 1.0}}},
        {1.0, 1.0, -1.0, {{idx(1, 2), s2}, {idx(2, 1), s2}}},
        {1.0, 1.0, 1.0, {{idx(0, 1), s2}, {idx(1, 0), s2}}},
        {1.0, 1.0, 2.0, {{idx(0, 0), 1.0}}},
    };
    return rows;
}

} // namespace

std::vector<AnalyticEigenpair> analytic_spectrum(const ModelParams& p) {
    p.validate();
    const double shift = p.include_chi ? p.chi() : 0.0;
    std::vector<AnalyticEigenpair> pairs;
    pairs.reserve(9);
    int label = 1;
    for (const auto& row : table()) {
        AnalyticEigenpair ep;
        ep.label = label++;
        ep.energy = row.intercept_j * p.j + row.intercept_k * p.k + row.slope * p.bz + shift;
        ep.vector.assign(9, Complex(0.0, 0.0));
        for (const auto& [i, amp] : row.amplitudes) ep.vector[i] = amp;
        pairs.push_back(std::move(ep));
    }
    return pairs;
}

ComplexMatrix analytic_eigenvector_matrix(const ModelParams& p) {
    const auto pairs = analytic_spectrum(p);
    ComplexMatrix v(9, 9);
    for (std::size_t c = 0; c < 9; ++c)
        for (std::size_t r = 0; r < 9; ++r) v(r, c) = pairs[c].vector[r];
    return v;
}

std::vector<std::pair<double, double>> analytic_energy_lines(const ModelParams& p) {
    p.validate();
    const double shift = p.include_chi ? p.chi() : 0.0;
    std::vector<std::pair<double, double>> lines;
    lines.reserve(9);
    for (const auto& row : table())
        lines.emplace_back(row.intercept_j * p.j + row.intercept_k * p.k + shift, row.slope);
    return lines;
}

ResonanceSet resonance_fields(const ModelParams& p) {
    const auto lines = analytic_energy_lines(p);
    const double scale = [&] {
        double m = 1.0;
        for (const auto& [e0, s] : lines) m = std::max({m, std::abs(e0), std::abs(s)});
        return m;
    }();
    const double coincide_tol = 1e-12 * scale;

    ResonanceSet out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double de0 = lines[j].first - lines[i].first;
            const double ds = lines[i].second - lines[j].second;
            if (std::abs(ds) <= coincide_tol) {
                // parallel lines: identical for every Bz, or never crossing
                if (std::abs(de0) <= coincide_tol)
                    out.permanent.emplace_back(int(i) + 1, int(j) + 1);
                continue;
            }
            out.crossings.push_back(de0 / ds + 0.0); // fold -0 into +0
        }

    std::sort(out.crossings.begin(), out.crossings.end());
    auto last = std::unique(out.crossings.begin(), out.crossings.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
                            });
    out.crossings.erase(last, out.crossings.end());
    return out;
}

} // namespace qid
