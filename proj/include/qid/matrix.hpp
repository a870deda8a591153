// matrix.hpp - dense complex matrix, row-major. The one carrier type for
// operators and states in this library (dimensions stay small, <= a few hundred).

#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qid/errors.hpp"
#include "qid/tolerances.hpp"

namespace qid {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
        return ComplexMatrix(rows, cols);
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }
    const Complex& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }

    const std::vector<Complex>& entries() const { return e_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    ComplexMatrix& operator*=(Complex s) {
        for (auto& x : e_) x *= s;
        return *this;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    Complex trace() const {
        assert(square());
        Complex t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : e_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& x : e_) s += std::norm(x);
        return std::sqrt(s);
    }

    // Equality is always tolerance-based; exact float comparison is never used.
    bool approx_equal(const ComplexMatrix& o, double abs_tol = tol::matrix_eq) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (std::abs(e_[i] - o.e_[i]) > abs_tol) return false;
        return true;
    }

private:
    void require_same_shape(const ComplexMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatchError("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> e_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
inline ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s, 0.0); }
inline ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s, 0.0); }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shapes differ");
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix shapes differ");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

inline ComplexMatrix hermitize(const ComplexMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

inline double hermiticity_defect(const ComplexMatrix& a) {
    return max_abs_diff(a, a.adjoint());
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = tol::hermiticity) {
    return a.square() && hermiticity_defect(a) <= tol;
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

} // namespace qid
